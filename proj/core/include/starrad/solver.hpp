#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starrad/polynomial.hpp"
#include "starrad/regions.hpp"
#include "starrad/seed_classes.hpp"

namespace starrad {

struct RadiusResult {
  double value = 0.0;
  SeedClass class_kind = SeedClass::K1;
  TargetRegion region;
  double bracket_lo = 0.0;  // final bisection bracket; straddles the root
  double bracket_hi = 0.0;
  double residual = 0.0;    // |g(value)|
  std::string equation_id;
  std::optional<double> closed_form;
};

// The containment gap g(r) = inradius(region, a(r)) - rho(r). Positive while
// the class disk fits, zero at the radius being solved for. g(0) is the
// inradius at center 1, which is positive for every region.
double containment_gap(SeedClass cls, const TargetRegion& region, double r);

// Smallest positive root of the containment gap, located by a 512-cell scan
// of (0, cap) and refined by bisection to the given bracket width. The cap is
// min(0.9, center_inverse(a_max) - 1e-9) so inradius never sees an
// inadmissible center. Throws BracketError when the scan finds no sign
// change. Bisection only: g is piecewise smooth across inradius branch
// points, so derivative-based refinement is not safe here.
RadiusResult solve_radius(SeedClass cls, const TargetRegion& region,
                          double bracket_width = 1e-13);

// solve_radius over StarlikeOfOrder(alpha) for each alpha; radii are
// monotonically non-increasing in alpha.
std::vector<RadiusResult> alpha_sweep(SeedClass cls,
                                      const std::vector<double>& alphas);

// One row per solved radius: the published equation (when one is printed in
// polynomial form), the published closed form and decimal value, and a flag
// for printed equations that contradict the containment-derived ground
// truth. Ground truth is always the containment gap; the printed equations
// are metadata that the tests cross-check where trustworthy.
struct EquationCatalogEntry {
  SeedClass class_kind = SeedClass::K1;
  TargetRegion region;
  bool plain_starlike = false;  // the three starlikeness rows
  std::optional<Polynomial> printed_equation;
  bool printed_equation_suspect = false;
  std::optional<double> closed_form;
  std::optional<double> paper_value;
  std::string id;
};

// All 30 entries: per class, the plain starlikeness row, the order-0 row and
// the eight named regions in presentation order. Built once, immutable.
const std::vector<EquationCatalogEntry>& catalog();

}  // namespace starrad
