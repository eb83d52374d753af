#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

namespace starrad {

// The nine target regions. Each is the image of the unit disk under a
// univalent generator h with h(0) = 1, except StarlikeOfOrder whose image is
// the half plane Re w > alpha.
enum class RegionKind {
  StarlikeOfOrder,
  Lemniscate,    // right loop of |w^2-1| = 1
  Parabolic,     // interior of Re w = |w-1|
  Exponential,   // |log w| < 1
  Cardioid,      // h(z) = 1 + (4/3)z + (2/3)z^2
  Sine,          // h(z) = 1 + sin z
  Lune,          // right component of |w^2-1| < 2|w|
  RationalR,     // h(z) = 1 + (zk + z^2)/(k^2 - kz), k = sqrt(2)+1
  RL,            // left loop of |(w-sqrt(2))^2 - 1| = 1
};

inline constexpr std::array<RegionKind, 9> kAllRegionKinds = {
    RegionKind::StarlikeOfOrder, RegionKind::Lemniscate, RegionKind::Parabolic,
    RegionKind::Exponential,     RegionKind::Cardioid,   RegionKind::Sine,
    RegionKind::Lune,            RegionKind::RationalR,  RegionKind::RL};

// k in the RationalR generator.
inline constexpr double kRationalRConst = 2.414213562373095;  // sqrt(2)+1

struct TargetRegion {
  RegionKind kind = RegionKind::StarlikeOfOrder;
  double alpha = 0.0;  // meaningful only for StarlikeOfOrder
};

// Requires 0 <= alpha < 1.
TargetRegion starlike_of_order(double alpha);
// Any kind with alpha pinned to 0.
TargetRegion region_of(RegionKind kind);

// Open interval of centers a for which inradius() is defined.
struct CenterInterval {
  double lo = 0.0;
  double hi = 0.0;  // +infinity for the unbounded regions
};
CenterInterval admissible_centers(const TargetRegion& region);

// Strict interior test; boundary points test false. Total over all finite w.
// Cardioid, Sine and RationalR have no workable analytic predicate and fall
// back to the winding number of the sampled boundary polyline.
bool membership(const TargetRegion& region, std::complex<double> w);

// Radius of the largest disk centered at real a that fits inside the region.
// Throws std::domain_error when a lies outside the open admissible interval,
// which is how the radius solver learns to cap its bracket.
double inradius(const TargetRegion& region, double a);

// The piecewise inradius formulas split at one interior center value; both
// sides must agree there (continuity is a correctness check on the branch
// selection, not an approximation statement).
enum class BranchId { lower, upper };
std::optional<double> branch_break_point(const TargetRegion& region);
// Evaluates the named branch formula as written, without the a-dispatch.
// Throws std::domain_error for regions that have no branch split.
double inradius_on_branch(const TargetRegion& region, BranchId branch,
                          double a);

// h(e^{i theta}) on a uniform theta grid, as a closed polyline (the segment
// from back() to front() is implied). Parabolic and StarlikeOfOrder use the
// midpoint grid so the generator's pole at z = 1 is never evaluated; the
// other kinds start at theta = 0 so that even n places h(1) and h(-1), the
// extreme boundary vertices, on the grid exactly. Requires n_samples >= 16.
std::vector<std::complex<double>> boundary_curve(const TargetRegion& region,
                                                 int n_samples);

// Even-odd membership against the sampled boundary polyline. Points closer
// than 1e-9 to the polyline count as boundary and test false. Throws
// std::domain_error for StarlikeOfOrder (unbounded degenerate curve). Results
// at the default sampling density are served from a per-region grid cache.
bool winding_membership(const TargetRegion& region, std::complex<double> w,
                        int n_samples = 4096);

// Defining-function discrepancy where the region has one (e.g. ||w^2-1|-1|
// for Lemniscate), minimum distance to the sampled boundary polyline for
// Cardioid, Sine and RationalR. Zero exactly on the boundary.
double distance_to_boundary(const TargetRegion& region,
                            std::complex<double> w);

std::string_view region_token(RegionKind kind);
std::optional<RegionKind> parse_region(std::string_view token);

}  // namespace starrad
