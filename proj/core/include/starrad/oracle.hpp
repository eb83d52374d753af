#pragma once

#include "starrad/regions.hpp"
#include "starrad/seed_classes.hpp"

namespace starrad {

struct OracleConfig {
  int disk_samples = 2048;      // points sampled on the class disk circle
  int boundary_samples = 4096;  // polyline density for winding membership
  double bisection_tol = 1e-7;  // bracket width for radius recovery
};

// Throws std::domain_error unless disk_samples >= 256, boundary_samples >= 16
// and bisection_tol >= 1e-12.
void validate(const OracleConfig& cfg);

// True iff every sampled point of the circle |w - a(r)| = rho(r) is interior
// to the region. r = 0 degenerates to membership of the single point 1.
// Deliberately knows nothing about the inradius formulas; this is the
// independent check that catches transcription errors in them.
bool containment_holds(SeedClass cls, const TargetRegion& region, double r,
                       const OracleConfig& cfg = {});

// Recovers the radius by bisecting containment_holds: doubles r until
// containment fails, then shrinks the bracket to bisection_tol. Assumes the
// predicate is monotone below the plain starlikeness radius, which the
// property tests check separately.
double oracle_radius(SeedClass cls, const TargetRegion& region,
                     const OracleConfig& cfg = {});

// Recovers inradius(region, a) by bisecting "all sampled circle points are
// members" on the disk radius, to bracket width 1e-6.
double lemma_inradius_oracle(const TargetRegion& region, double a,
                             const OracleConfig& cfg = {});

}  // namespace starrad
