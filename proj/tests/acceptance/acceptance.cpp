// Acceptance gate. Each criterion prints exactly one PASS/FAIL line; the
// exit code is the number of failed criteria, so ctest fails if any does.
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "starrad/extremal.hpp"
#include "starrad/oracle.hpp"
#include "starrad/polynomial.hpp"
#include "starrad/regions.hpp"
#include "starrad/seed_classes.hpp"
#include "starrad/solver.hpp"

using namespace starrad;
using cd = std::complex<double>;

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Criterion {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (detail.empty()) detail = why;  // keep the first failure only
  }
};

std::vector<RadiusResult> solve_all() {
  std::vector<RadiusResult> out;
  for (const auto& e : catalog())
    out.push_back(solve_radius(e.class_kind, e.region));
  return out;
}

// [1] Every published decimal value is reproduced within 1e-5.
Criterion check_published_values(const std::vector<RadiusResult>& solved) {
  Criterion c;
  double worst = 0.0;
  for (size_t i = 0; i < catalog().size(); ++i) {
    const auto& e = catalog()[i];
    const double diff = std::fabs(solved[i].value - *e.paper_value);
    worst = std::max(worst, diff);
    if (diff > 1e-5)
      c.fail(e.id + " differs by " + sci(diff));
  }
  c.detail = c.ok ? "max diff " + sci(worst) : c.detail;
  return c;
}

// [2] The six radical closed forms match the solved radii within 1e-9.
Criterion check_closed_forms(const std::vector<RadiusResult>& solved) {
  Criterion c;
  int seen = 0;
  for (size_t i = 0; i < catalog().size(); ++i) {
    const auto& e = catalog()[i];
    if (!e.closed_form) continue;
    ++seen;
    const double diff = std::fabs(solved[i].value - *e.closed_form);
    if (diff > 1e-9)
      c.fail(e.id + " closed form differs by " + sci(diff));
  }
  if (seen != 6) c.fail("expected 6 closed forms, saw " + std::to_string(seen));
  return c;
}

// [3] The sampling oracle recovers every solved radius within 5e-4.
Criterion check_oracle_agreement(const std::vector<RadiusResult>& solved) {
  Criterion c;
  double worst = 0.0;
  for (size_t i = 0; i < catalog().size(); ++i) {
    const auto& e = catalog()[i];
    const double r = oracle_radius(e.class_kind, e.region);
    const double diff = std::fabs(r - solved[i].value);
    worst = std::max(worst, diff);
    if (diff > 5e-4)
      c.fail(e.id + " oracle differs by " + sci(diff));
  }
  if (c.ok) c.detail = "max diff " + sci(worst);
  return c;
}

// [4] Sharpness: 25 witnesses land on the boundary within 1e-6; the one
// witness that provably misses stays pinned inside its recorded miss band.
Criterion check_sharpness(const std::vector<RadiusResult>& solved) {
  Criterion c;
  int asserted = 0, report_only = 0, off_boundary = 0;
  for (size_t i = 0; i < catalog().size(); ++i) {
    const auto& e = catalog()[i];
    const SharpnessReport rep =
        verify_sharpness(e.class_kind, e.region, solved[i].value);
    switch (rep.status) {
      case WitnessStatus::Asserted:
        ++asserted;
        if (rep.distance_to_boundary > 1e-6)
          c.fail(e.id + " witness off boundary by " +
                 sci(rep.distance_to_boundary));
        break;
      case WitnessStatus::ReportOnly:
        ++report_only;
        break;
      case WitnessStatus::OffBoundary:
        ++off_boundary;
        if (rep.distance_to_boundary <= 1e-3 ||
            rep.distance_to_boundary >= 1e-1)
          c.fail(e.id + " miss drifted to " +
                 sci(rep.distance_to_boundary));
        break;
    }
  }
  if (asserted != 25 || report_only != 4 || off_boundary != 1)
    c.fail("witness census " + std::to_string(asserted) + "/" +
           std::to_string(report_only) + "/" + std::to_string(off_boundary) +
           ", expected 25/4/1");
  return c;
}

// The nine survey regions: the eight named ones plus one order slice.
std::vector<TargetRegion> survey_regions() {
  std::vector<TargetRegion> out;
  for (RegionKind kind : kAllRegionKinds)
    out.push_back(kind == RegionKind::StarlikeOfOrder ? starlike_of_order(0.3)
                                                      : region_of(kind));
  return out;
}

// Center window used by the lemma surveys: 2% inset for bounded regions, a
// fixed [lo+0.05, lo+3] slice for the two half-plane-like ones.
void survey_window(const TargetRegion& region, double* lo, double* hi) {
  const CenterInterval ci = admissible_centers(region);
  if (std::isinf(ci.hi)) {
    *lo = ci.lo + 0.05;
    *hi = ci.lo + 3.0;
  } else {
    const double w = ci.hi - ci.lo;
    *lo = ci.lo + 0.02 * w;
    *hi = ci.hi - 0.02 * w;
  }
}

// [5] Inradius lemmas: branch continuity at the split points, then soundness
// (the stated disk fits) and maximality (a 1% larger disk does not) at 100
// centers per region, then spot agreement with the bisection oracle.
Criterion check_inradius_lemmas() {
  Criterion c;

  int splits = 0;
  for (const TargetRegion& region : survey_regions()) {
    const auto bp = branch_break_point(region);
    if (!bp) continue;
    ++splits;
    const double gap =
        std::fabs(inradius_on_branch(region, BranchId::lower, *bp) -
                  inradius_on_branch(region, BranchId::upper, *bp));
    if (gap > 1e-12)
      c.fail(std::string(region_token(region.kind)) +
             " branch mismatch " + sci(gap));
  }
  if (splits != 6) c.fail("expected 6 branch splits");

  constexpr int kCenters = 100;
  constexpr int kSound = 256;
  constexpr int kMaximal = 2048;
  for (const TargetRegion& region : survey_regions()) {
    double lo = 0.0, hi = 0.0;
    survey_window(region, &lo, &hi);
    for (int i = 0; i < kCenters; ++i) {
      const double a = lo + (hi - lo) * (i + 0.5) / kCenters;
      const double s = inradius(region, a);

      const double s_in = s * (1.0 - 1e-3);
      for (int j = 0; j < kSound; ++j) {
        const double th = 2.0 * std::numbers::pi * j / kSound;
        if (!membership(region, a + s_in * std::polar(1.0, th))) {
          c.fail(std::string(region_token(region.kind)) + " not sound at a=" +
                 std::to_string(a));
          break;
        }
      }

      const double s_out = s * (1.0 + 1e-2);
      bool escaped = !membership(region, cd(a - s_out, 0.0)) ||
                     !membership(region, cd(a + s_out, 0.0));
      for (int j = 0; j < kMaximal && !escaped; ++j) {
        const double th = 2.0 * std::numbers::pi * j / kMaximal;
        escaped = !membership(region, a + s_out * std::polar(1.0, th));
      }
      if (!escaped)
        c.fail(std::string(region_token(region.kind)) +
               " not maximal at a=" + std::to_string(a));
    }

    for (int i = 0; i < 6; ++i) {
      const double a = lo + (hi - lo) * (i + 0.5) / 6;
      const double diff = std::fabs(lemma_inradius_oracle(region, a) -
                                    inradius(region, a));
      if (diff > 1e-4)
        c.fail(std::string(region_token(region.kind)) +
               " lemma/oracle differ by " + sci(diff) +
               " at a=" + std::to_string(a));
    }
  }
  return c;
}

// [6] The sine-region quartics factor exactly as (1+r^2) times a quadratic,
// coefficient by coefficient in double arithmetic.
Criterion check_sine_factorization() {
  Criterion c;
  const double s = std::sin(1.0);
  const Polynomial unit = Polynomial{1.0, 0.0, 1.0};
  const struct {
    const char* id;
    Polynomial quad;  // ascending: constant, linear, quadratic
  } cases[] = {
      {"k1-sine", Polynomial{-s, 4.0, 2.0 + s}},
      {"k2-sine", Polynomial{-s, 3.0, 3.0 + s}},
      {"k3-sine", Polynomial{-s, 2.0, 2.0 + s}},
  };
  for (const auto& t : cases) {
    const EquationCatalogEntry* entry = nullptr;
    for (const auto& e : catalog())
      if (e.id == t.id) entry = &e;
    if (!entry || !entry->printed_equation) {
      c.fail(std::string(t.id) + " has no printed equation");
      continue;
    }
    if (!(unit * t.quad == *entry->printed_equation))
      c.fail(std::string(t.id) + " factorization is not exact");
  }
  return c;
}

// [7] The class disk radius decomposes into the stated log-derivative bounds
// within 1e-12 across the radius range.
Criterion check_radius_composition() {
  Criterion c;
  double worst = 0.0;
  for (SeedClass cls : kAllClasses) {
    for (int i = 1; i <= 100; ++i) {
      const double r = 0.8 * i / 100;
      const double half_pair = 0.5 * caratheodory_logderiv_bound(0.0, r, 2);
      double composed = half_pair;
      switch (cls) {
        case SeedClass::K1:
          composed += 2.0 * caratheodory_logderiv_bound(0.0, r, 1);
          break;
        case SeedClass::K2:
          composed += caratheodory_logderiv_bound(0.0, r, 1) +
                      caratheodory_logderiv_bound(0.5, r, 1);
          break;
        case SeedClass::K3:
          composed += caratheodory_logderiv_bound(0.0, r, 1);
          break;
      }
      const double diff = std::fabs(disk_image(cls, r).radius - composed);
      worst = std::max(worst, diff);
      if (diff > 1e-12)
        c.fail(std::string(class_token(cls)) + " decomposition off by " +
               sci(diff) + " at r=" + std::to_string(r));
    }
  }
  if (c.ok) c.detail = "max diff " + sci(worst);
  return c;
}

int report(int index, const char* name, const Criterion& c) {
  std::printf("%s  [%d/7] %s%s%s\n", c.ok ? "PASS" : "FAIL", index, name,
              c.detail.empty() ? "" : ": ", c.detail.c_str());
  return c.ok ? 0 : 1;
}

}  // namespace

int main() {
  const std::vector<RadiusResult> solved = solve_all();
  int failures = 0;
  failures += report(1, "published radii reproduced within 1e-5",
                     check_published_values(solved));
  failures += report(2, "closed forms match within 1e-9",
                     check_closed_forms(solved));
  failures += report(3, "sampling oracle agrees within 5e-4",
                     check_oracle_agreement(solved));
  failures += report(4, "sharpness witnesses land on the boundary",
                     check_sharpness(solved));
  failures += report(5, "inradius lemmas sound, maximal and continuous",
                     check_inradius_lemmas());
  failures += report(6, "sine quartics factor exactly",
                     check_sine_factorization());
  failures += report(7, "disk radius composition holds within 1e-12",
                     check_radius_composition());
  return failures;
}
