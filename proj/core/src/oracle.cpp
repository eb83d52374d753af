#include "starrad/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "starrad/polynomial.hpp"

namespace starrad {
namespace {

using cd = std::complex<double>;

// Winding-based kinds honor cfg.boundary_samples so the oracle can be run at
// a density independent of the cached default.
bool member(const TargetRegion& region, cd w, const OracleConfig& cfg) {
  switch (region.kind) {
    case RegionKind::Cardioid:
    case RegionKind::Sine:
    case RegionKind::RationalR:
      return winding_membership(region, w, cfg.boundary_samples);
    default:
      return membership(region, w);
  }
}

bool circle_inside(const TargetRegion& region, double center, double s,
                   const OracleConfig& cfg) {
  // extreme real points first; every known failure mode starts on the axis
  if (!member(region, cd(center - s, 0.0), cfg)) return false;
  if (!member(region, cd(center + s, 0.0), cfg)) return false;
  for (int j = 0; j < cfg.disk_samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / cfg.disk_samples;
    const cd w(center + s * std::cos(theta), s * std::sin(theta));
    if (!member(region, w, cfg)) return false;
  }
  return true;
}

}  // namespace

void validate(const OracleConfig& cfg) {
  if (cfg.disk_samples < 256)
    throw std::domain_error("disk_samples must be at least 256");
  if (cfg.boundary_samples < 16)
    throw std::domain_error("boundary_samples must be at least 16");
  if (!(cfg.bisection_tol >= 1e-12))
    throw std::domain_error("bisection_tol must be at least 1e-12");
}

bool containment_holds(SeedClass cls, const TargetRegion& region, double r,
                       const OracleConfig& cfg) {
  validate(cfg);
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("oracle radius must lie in [0, 1)");
  if (r == 0.0) return member(region, cd(1.0, 0.0), cfg);

  const Disk d = disk_image(cls, r);
  return circle_inside(region, d.center, d.radius, cfg);
}

double oracle_radius(SeedClass cls, const TargetRegion& region,
                     const OracleConfig& cfg) {
  validate(cfg);

  double lo = 0.0;
  double hi = 1.0 / 64.0;
  while (containment_holds(cls, region, hi, cfg)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 0.95)
      throw BracketError("containment never fails below r = 0.95");
  }
  while (hi - lo > cfg.bisection_tol) {
    const double mid = 0.5 * (lo + hi);
    if (containment_holds(cls, region, mid, cfg))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double lemma_inradius_oracle(const TargetRegion& region, double a,
                             const OracleConfig& cfg) {
  validate(cfg);
  const CenterInterval ci = admissible_centers(region);
  if (!(a > ci.lo && a < ci.hi))
    throw std::domain_error("center lies outside the admissible interval");

  double lo = 0.0;
  double hi = 1.0 / 64.0;
  while (circle_inside(region, a, hi, cfg)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 64.0) throw BracketError("sampled circle never leaves the region");
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (circle_inside(region, a, mid, cfg))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace starrad
