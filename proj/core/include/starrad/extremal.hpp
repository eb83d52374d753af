#pragma once

#include <complex>

#include "starrad/regions.hpp"
#include "starrad/seed_classes.hpp"

namespace starrad {

// Closed-form zf'/f of the named extremal functions. F1, F2, F3 are the
// default witnesses of K1, K2, K3; F3hat and FPair are the alternates used
// where the boundary contact happens on the east edge of the class disk.
enum class ExtremalFunction { F1, F2, F3, F3hat, FPair };

// F1:    (1 + 4iz + 2z^2 - 4iz^3 + z^4) / (1 - z^4)
// F2:    (1 + 3iz + 3z^2 - 3iz^3) / (1 - z^4)
// F3:    (1 + 2iz + 2z^2 - 2iz^3 + z^4) / (1 - z^4)
// F3hat: (1 - z) / (1 + z)
// FPair: (z^2 - 4z + 1) / (1 - z^2)
// Throws std::domain_error at the poles (z^4 = 1, z = -1, z^2 = 1).
std::complex<double> logderiv(ExtremalFunction fn, std::complex<double> z);

// How much weight the witness evaluation carries.
//   Asserted:   the value must land on the region boundary; tests enforce
//               distance_to_boundary <= 1e-6.
//   ReportOnly: no boundary contact is expected of this witness; the
//               distance is informational.
//   OffBoundary: the natural witness provably misses the boundary at this
//               radius; tests pin the miss distance as a regression check.
enum class WitnessStatus { Asserted, ReportOnly, OffBoundary };

struct SharpnessReport {
  SeedClass class_kind = SeedClass::K1;
  TargetRegion region;
  ExtremalFunction witness = ExtremalFunction::F1;
  std::complex<double> boundary_z;  // where on |z| = radius the witness is read
  std::complex<double> value_w;     // logderiv(witness, boundary_z)
  double distance_to_boundary = 0.0;
  WitnessStatus status = WitnessStatus::ReportOnly;
};

// Evaluates the hard-coded witness table for (class, region) at the solved
// radius and measures the distance from the value to the region boundary.
// Never throws on large distances; doubtful entries must stay visible.
SharpnessReport verify_sharpness(SeedClass cls, const TargetRegion& region,
                                 double radius);

std::string_view witness_token(ExtremalFunction fn);

}  // namespace starrad
