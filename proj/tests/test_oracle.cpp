#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "starrad/oracle.hpp"
#include "starrad/solver.hpp"

using namespace starrad;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate(OracleConfig{}));
  CHECK_THROWS_AS(validate(OracleConfig{255, 4096, 1e-7}), std::domain_error);
  CHECK_THROWS_AS(validate(OracleConfig{2048, 8, 1e-7}), std::domain_error);
  CHECK_THROWS_AS(validate(OracleConfig{2048, 4096, 1e-13}),
                  std::domain_error);
  CHECK_NOTHROW(validate(OracleConfig{256, 16, 1e-12}));
}

TEST_CASE("containment spot checks") {
  const TargetRegion lem = region_of(RegionKind::Lemniscate);
  CHECK(containment_holds(SeedClass::K1, lem, 0.09));
  CHECK(!containment_holds(SeedClass::K1, lem, 0.11));
  CHECK(containment_holds(SeedClass::K1, lem, 0.0));
  CHECK(containment_holds(SeedClass::K1, region_of(RegionKind::RL), 0.0));
  CHECK_THROWS_AS(containment_holds(SeedClass::K1, lem, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(containment_holds(SeedClass::K1, lem, -0.1),
                  std::domain_error);
}

TEST_CASE("containment is monotone around the solved radius") {
  const TargetRegion lune = region_of(RegionKind::Lune);
  const double r = solve_radius(SeedClass::K1, lune).value;
  for (int i = 0; i < 50; ++i) {
    const double below = r * (i + 0.5) / 50.0;
    CHECK(containment_holds(SeedClass::K1, lune, below));
  }
  for (int i = 0; i < 50; ++i) {
    const double above = r * 1.001 + (0.45 - r * 1.001) * i / 50.0;
    CHECK(!containment_holds(SeedClass::K1, lune, above));
  }
}

TEST_CASE("oracle recovers the solved radius") {
  // one entry per distinct inradius shape, spread over the classes
  const int picks[] = {2, 5, 13, 18, 24, 27, 29};
  for (int i : picks) {
    const auto& e = catalog()[i];
    CAPTURE(e.id);
    const double solved = solve_radius(e.class_kind, e.region).value;
    const double recovered = oracle_radius(e.class_kind, e.region);
    CHECK(std::abs(recovered - solved) <= 5e-4);
  }
}

TEST_CASE("oracle respects its bisection tolerance") {
  OracleConfig cfg;
  cfg.bisection_tol = 1e-4;
  const auto& e = catalog()[2];  // k1-lemniscate
  const double solved = solve_radius(e.class_kind, e.region).value;
  const double recovered = oracle_radius(e.class_kind, e.region, cfg);
  CHECK(std::abs(recovered - solved) <= 2e-4);
}

TEST_CASE("inradius lemmas agree with the sampled oracle") {
  const double e = std::numbers::e;
  const double mid = 0.5 * (e + 1.0 / e);
  CHECK(std::abs(lemma_inradius_oracle(region_of(RegionKind::Parabolic), 1.0) -
                 0.5) <= 1e-4);
  CHECK(std::abs(lemma_inradius_oracle(region_of(RegionKind::Exponential),
                                       mid) -
                 0.5 * (e - 1.0 / e)) <= 1e-4);
  CHECK(std::abs(lemma_inradius_oracle(region_of(RegionKind::Lune),
                                       std::sqrt(2.0)) -
                 1.0) <= 1e-4);
  CHECK(std::abs(lemma_inradius_oracle(region_of(RegionKind::Cardioid), 1.0) -
                 inradius(region_of(RegionKind::Cardioid), 1.0)) <= 1e-4);
  CHECK(std::abs(lemma_inradius_oracle(region_of(RegionKind::RL), 1.0) -
                 inradius(region_of(RegionKind::RL), 1.0)) <= 1e-4);
  CHECK(std::abs(lemma_inradius_oracle(region_of(RegionKind::Sine), 1.2) -
                 inradius(region_of(RegionKind::Sine), 1.2)) <= 1e-4);
  CHECK_THROWS_AS(lemma_inradius_oracle(region_of(RegionKind::Lune), 3.0),
                  std::domain_error);
}

TEST_SUITE_END();
