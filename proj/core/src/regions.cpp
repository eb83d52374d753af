#include "starrad/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace starrad {
namespace {

using cd = std::complex<double>;

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;
const double kSin1 = std::sin(1.0);

// Points this close to the sampled boundary polyline are treated as boundary.
constexpr double kGuardBand = 1e-9;
constexpr int kDefaultBoundarySamples = 4096;

cd generator_point(const TargetRegion& region, double theta) {
  const cd z = std::polar(1.0, theta);
  switch (region.kind) {
    case RegionKind::StarlikeOfOrder:
      return (1.0 + (1.0 - 2.0 * region.alpha) * z) / (1.0 - z);
    case RegionKind::Lemniscate:
      return std::sqrt(1.0 + z);
    case RegionKind::Parabolic: {
      const cd s = std::sqrt(z);
      const cd q = std::log((1.0 + s) / (1.0 - s));
      return 1.0 + (2.0 / (kPi * kPi)) * q * q;
    }
    case RegionKind::Exponential:
      return std::exp(z);
    case RegionKind::Cardioid:
      return 1.0 + (4.0 / 3.0) * z + (2.0 / 3.0) * z * z;
    case RegionKind::Sine:
      return 1.0 + std::sin(z);
    case RegionKind::Lune:
      // 1 + z^2 stays in the closed right half plane on |z| = 1, so the
      // principal square root traces the lune boundary without a branch jump
      return z + std::sqrt(1.0 + z * z);
    case RegionKind::RationalR: {
      const double k = kRationalRConst;
      return 1.0 + (z * k + z * z) / (k * k - k * z);
    }
    case RegionKind::RL: {
      // radicand runs over a circle through 0 centered on the positive axis;
      // the principal root is continuous there
      const double c = kSqrt2 - 1.0;
      return kSqrt2 - c * std::sqrt((1.0 - z) / (1.0 + 2.0 * c * z));
    }
  }
  throw std::domain_error("unknown region kind");
}

double segment_dist2(cd a, cd b, cd w) {
  const cd ab = b - a;
  const double len2 = std::norm(ab);
  double t = 0.0;
  if (len2 > 0.0)
    t = std::clamp(((w - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::norm(w - (a + t * ab));
}

double polyline_dist2(const std::vector<cd>& pts, cd w) {
  const std::size_t n = pts.size();
  double d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    d2 = std::min(d2, segment_dist2(pts[i], pts[(i + 1 == n) ? 0 : i + 1], w));
  return d2;
}

// Even-odd crossing test over the closed polyline, with the guard band.
bool polyline_decide(const std::vector<cd>& pts, cd w) {
  const std::size_t n = pts.size();
  bool inside = false;
  double d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const cd a = pts[i];
    const cd b = pts[(i + 1 == n) ? 0 : i + 1];
    d2 = std::min(d2, segment_dist2(a, b, w));
    if ((a.imag() > w.imag()) != (b.imag() > w.imag())) {
      const double t = (w.imag() - a.imag()) / (b.imag() - a.imag());
      if (a.real() + t * (b.real() - a.real()) > w.real()) inside = !inside;
    }
  }
  if (d2 < kGuardBand * kGuardBand) return false;
  return inside;
}

// Acceleration structure for winding queries at the default density: cells
// wholly inside or outside answer in O(1); cells the polyline touches (plus
// one ring around them) fall back to the full crossing test. Classification
// is one crossing test per connected component of clear cells, which is
// sound because a 4-connected path of untouched cells cannot cross the
// curve.
struct WindingGrid {
  static constexpr int kN = 512;
  double x0 = 0.0, y0 = 0.0, dx = 1.0, dy = 1.0;
  std::vector<cd> curve;
  std::vector<std::uint8_t> cell;
};

constexpr std::uint8_t kOutside = 0;
constexpr std::uint8_t kInside = 1;
constexpr std::uint8_t kNear = 2;
constexpr std::uint8_t kUnknown = 3;

void build_grid(WindingGrid& g, const TargetRegion& region) {
  g.curve = boundary_curve(region, kDefaultBoundarySamples);

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const cd& p : g.curve) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  // margin keeps every out-of-bbox point farther than the guard band
  const double margin = 1e-6 + 0.002 * std::max(xmax - xmin, ymax - ymin);
  g.x0 = xmin - margin;
  g.y0 = ymin - margin;
  const int n = WindingGrid::kN;
  g.dx = (xmax + margin - g.x0) / n;
  g.dy = (ymax + margin - g.y0) / n;
  g.cell.assign(static_cast<std::size_t>(n) * n, kUnknown);

  const auto cell_of = [&](cd p) {
    int cx = static_cast<int>((p.real() - g.x0) / g.dx);
    int cy = static_cast<int>((p.imag() - g.y0) / g.dy);
    cx = std::clamp(cx, 0, n - 1);
    cy = std::clamp(cy, 0, n - 1);
    return cy * n + cx;
  };

  // walk each segment below cell resolution; with the one-ring dilation
  // below this conservatively covers every cell the polyline touches
  const double step = 0.45 * std::min(g.dx, g.dy);
  const std::size_t m = g.curve.size();
  for (std::size_t i = 0; i < m; ++i) {
    const cd a = g.curve[i];
    const cd b = g.curve[(i + 1 == m) ? 0 : i + 1];
    const int pieces = 1 + static_cast<int>(std::abs(b - a) / step);
    for (int k = 0; k <= pieces; ++k) {
      const double t = static_cast<double>(k) / pieces;
      g.cell[cell_of(a + t * (b - a))] = kNear;
    }
  }
  std::vector<std::uint32_t> raw;
  raw.reserve(16384);
  for (std::uint32_t idx = 0; idx < g.cell.size(); ++idx)
    if (g.cell[idx] == kNear) raw.push_back(idx);
  for (std::uint32_t idx : raw) {
    const int cx = static_cast<int>(idx) % n;
    const int cy = static_cast<int>(idx) / n;
    for (int oy = -1; oy <= 1; ++oy)
      for (int ox = -1; ox <= 1; ++ox) {
        const int x = cx + ox, y = cy + oy;
        if (x >= 0 && x < n && y >= 0 && y < n) g.cell[y * n + x] = kNear;
      }
  }

  // flood fill the clear components, one crossing test each
  std::vector<int> queue;
  const int total = n * n;
  for (int seed = 0; seed < total; ++seed) {
    if (g.cell[seed] != kUnknown) continue;
    const int sx = seed % n;
    const int sy = seed / n;
    const cd center(g.x0 + (sx + 0.5) * g.dx, g.y0 + (sy + 0.5) * g.dy);
    const std::uint8_t cls = polyline_decide(g.curve, center) ? kInside
                                                              : kOutside;
    const auto visit = [&](int x, int y) {
      if (x < 0 || x >= n || y < 0 || y >= n) return;
      const int j = y * n + x;
      if (g.cell[j] != kUnknown) return;
      g.cell[j] = cls;
      queue.push_back(j);
    };
    queue.clear();
    g.cell[seed] = cls;
    queue.push_back(seed);
    while (!queue.empty()) {
      const int idx = queue.back();
      queue.pop_back();
      const int cx = idx % n;
      const int cy = idx / n;
      visit(cx - 1, cy);
      visit(cx + 1, cy);
      visit(cx, cy - 1);
      visit(cx, cy + 1);
    }
  }
}

const WindingGrid& winding_grid(RegionKind kind) {
  static WindingGrid grids[9];
  static std::once_flag once[9];
  const int idx = static_cast<int>(kind);
  std::call_once(once[idx],
                 [&] { build_grid(grids[idx], region_of(kind)); });
  return grids[idx];
}

}  // namespace

TargetRegion starlike_of_order(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::domain_error("order must lie in [0,1)");
  return {RegionKind::StarlikeOfOrder, alpha};
}

TargetRegion region_of(RegionKind kind) { return {kind, 0.0}; }

CenterInterval admissible_centers(const TargetRegion& region) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  switch (region.kind) {
    case RegionKind::StarlikeOfOrder: return {region.alpha, kInf};
    case RegionKind::Lemniscate: return {0.0, kSqrt2};
    case RegionKind::Parabolic: return {0.5, kInf};
    case RegionKind::Exponential: return {1.0 / kE, kE};
    case RegionKind::Cardioid: return {1.0 / 3.0, 3.0};
    case RegionKind::Sine: return {1.0 - kSin1, 1.0 + kSin1};
    case RegionKind::Lune: return {kSqrt2 - 1.0, kSqrt2 + 1.0};
    case RegionKind::RationalR: return {2.0 * (kSqrt2 - 1.0), 2.0};
    case RegionKind::RL: return {0.0, kSqrt2};
  }
  throw std::domain_error("unknown region kind");
}

bool membership(const TargetRegion& region, std::complex<double> w) {
  switch (region.kind) {
    case RegionKind::StarlikeOfOrder:
      return w.real() > region.alpha;
    case RegionKind::Lemniscate:
      // the inequality alone also admits the left loop; the generator image
      // (principal sqrt of 1+z) is the right one
      return w.real() > 0.0 && std::abs(w * w - 1.0) < 1.0;
    case RegionKind::Parabolic:
      return w.real() > std::abs(w - 1.0);
    case RegionKind::Exponential:
      // Re w > 0 first: keeps the principal log away from its branch cut
      return w.real() > 0.0 && std::abs(std::log(w)) < 1.0;
    case RegionKind::Lune:
      // the inequality alone also admits the mirror image in Re w < 0; the
      // generator image is the right component only
      return w.real() > 0.0 && std::abs(w * w - 1.0) < 2.0 * std::abs(w);
    case RegionKind::RL: {
      // the loop inequality admits two loops; the generator image is the
      // left one, and the right loop lies entirely in Re w > sqrt(2)
      if (!(w.real() > 0.0 && w.real() < kSqrt2)) return false;
      const cd u = w - kSqrt2;
      return std::abs(u * u - 1.0) < 1.0;
    }
    case RegionKind::Cardioid:
    case RegionKind::Sine:
    case RegionKind::RationalR:
      return winding_membership(region, w);
  }
  return false;
}

namespace {

double lemniscate_bulge(double a) {
  // largest disk at 0 < a <= 2 sqrt(2)/3, set by off-axis boundary contact
  const double u = 1.0 - a * a;
  return std::sqrt(std::sqrt(u) - u);
}

double rl_bulge(double a) {
  const double t = kSqrt2 - a;
  const double u = 1.0 - t * t;
  return std::sqrt(std::sqrt(u) - u);
}

}  // namespace

double inradius(const TargetRegion& region, double a) {
  const CenterInterval c = admissible_centers(region);
  if (!(a > c.lo && a < c.hi))
    throw std::domain_error("center outside the admissible interval");
  switch (region.kind) {
    case RegionKind::StarlikeOfOrder:
      return a - region.alpha;
    case RegionKind::Lemniscate:
      return a <= 2.0 * kSqrt2 / 3.0 ? lemniscate_bulge(a) : kSqrt2 - a;
    case RegionKind::Parabolic:
      return a <= 1.5 ? a - 0.5 : std::sqrt(2.0 * a - 2.0);
    case RegionKind::Exponential:
      return a <= 0.5 * (kE + 1.0 / kE) ? a - 1.0 / kE : kE - a;
    case RegionKind::Cardioid:
      return a <= 5.0 / 3.0 ? (3.0 * a - 1.0) / 3.0 : 3.0 - a;
    case RegionKind::Sine:
      return kSin1 - std::abs(a - 1.0);
    case RegionKind::Lune:
      return 1.0 - std::abs(kSqrt2 - a);
    case RegionKind::RationalR:
      return a <= kSqrt2 ? a - 2.0 * (kSqrt2 - 1.0) : 2.0 - a;
    case RegionKind::RL:
      return a <= kSqrt2 / 3.0 ? a : rl_bulge(a);
  }
  throw std::domain_error("unknown region kind");
}

std::optional<double> branch_break_point(const TargetRegion& region) {
  switch (region.kind) {
    case RegionKind::Lemniscate: return 2.0 * kSqrt2 / 3.0;
    case RegionKind::Parabolic: return 1.5;
    case RegionKind::Exponential: return 0.5 * (kE + 1.0 / kE);
    case RegionKind::Cardioid: return 5.0 / 3.0;
    case RegionKind::RationalR: return kSqrt2;
    case RegionKind::RL: return kSqrt2 / 3.0;
    default: return std::nullopt;
  }
}

double inradius_on_branch(const TargetRegion& region, BranchId branch,
                          double a) {
  if (!branch_break_point(region))
    throw std::domain_error("region has a single inradius formula");
  const bool lower = branch == BranchId::lower;
  switch (region.kind) {
    case RegionKind::Lemniscate:
      return lower ? lemniscate_bulge(a) : kSqrt2 - a;
    case RegionKind::Parabolic:
      return lower ? a - 0.5 : std::sqrt(2.0 * a - 2.0);
    case RegionKind::Exponential:
      return lower ? a - 1.0 / kE : kE - a;
    case RegionKind::Cardioid:
      return lower ? (3.0 * a - 1.0) / 3.0 : 3.0 - a;
    case RegionKind::RationalR:
      return lower ? a - 2.0 * (kSqrt2 - 1.0) : 2.0 - a;
    case RegionKind::RL:
      return lower ? a : rl_bulge(a);
    default:
      throw std::domain_error("region has a single inradius formula");
  }
}

std::vector<std::complex<double>> boundary_curve(const TargetRegion& region,
                                                 int n_samples) {
  if (n_samples < 16)
    throw std::domain_error("boundary curve needs at least 16 samples");
  std::vector<cd> pts;
  pts.reserve(static_cast<std::size_t>(n_samples));
  const bool midpoint = region.kind == RegionKind::Parabolic ||
                        region.kind == RegionKind::StarlikeOfOrder;
  const double offset = midpoint ? 0.5 : 0.0;
  for (int j = 0; j < n_samples; ++j) {
    const double theta = 2.0 * kPi * (j + offset) / n_samples;
    pts.push_back(generator_point(region, theta));
  }
  return pts;
}

bool winding_membership(const TargetRegion& region, std::complex<double> w,
                        int n_samples) {
  if (region.kind == RegionKind::StarlikeOfOrder)
    throw std::domain_error(
        "winding membership needs a bounded boundary curve");
  if (n_samples == kDefaultBoundarySamples) {
    const WindingGrid& g = winding_grid(region.kind);
    const double fx = (w.real() - g.x0) / g.dx;
    const double fy = (w.imag() - g.y0) / g.dy;
    if (!(fx >= 0.0 && fy >= 0.0 && fx < WindingGrid::kN &&
          fy < WindingGrid::kN))
      return false;
    const std::uint8_t c =
        g.cell[static_cast<int>(fy) * WindingGrid::kN + static_cast<int>(fx)];
    if (c == kInside) return true;
    if (c == kOutside) return false;
    return polyline_decide(g.curve, w);
  }
  return polyline_decide(boundary_curve(region, n_samples), w);
}

double distance_to_boundary(const TargetRegion& region,
                            std::complex<double> w) {
  switch (region.kind) {
    case RegionKind::StarlikeOfOrder:
      return std::abs(w.real() - region.alpha);
    case RegionKind::Lemniscate:
      return std::abs(std::abs(w * w - 1.0) - 1.0);
    case RegionKind::Parabolic:
      return std::abs(w.real() - std::abs(w - 1.0));
    case RegionKind::Exponential:
      return std::abs(std::abs(std::log(w)) - 1.0);
    case RegionKind::Lune:
      return std::abs(std::abs(w * w - 1.0) - 2.0 * std::abs(w));
    case RegionKind::RL: {
      const cd u = w - kSqrt2;
      return std::abs(std::abs(u * u - 1.0) - 1.0);
    }
    case RegionKind::Cardioid:
    case RegionKind::Sine:
    case RegionKind::RationalR:
      return std::sqrt(polyline_dist2(winding_grid(region.kind).curve, w));
  }
  throw std::domain_error("unknown region kind");
}

std::string_view region_token(RegionKind kind) {
  switch (kind) {
    case RegionKind::StarlikeOfOrder: return "order";
    case RegionKind::Lemniscate: return "lemniscate";
    case RegionKind::Parabolic: return "parabolic";
    case RegionKind::Exponential: return "exponential";
    case RegionKind::Cardioid: return "cardioid";
    case RegionKind::Sine: return "sine";
    case RegionKind::Lune: return "lune";
    case RegionKind::RationalR: return "rational-r";
    case RegionKind::RL: return "rl";
  }
  return "";
}

std::optional<RegionKind> parse_region(std::string_view token) {
  for (RegionKind kind : kAllRegionKinds)
    if (token == region_token(kind)) return kind;
  return std::nullopt;
}

}  // namespace starrad
