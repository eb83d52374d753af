#include "starrad/solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace starrad {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kE = std::numbers::e;
const double kSin1 = std::sin(1.0);

std::optional<double> closed_form_for(SeedClass cls, RegionKind kind) {
  const double s = kSin1;
  if (kind == RegionKind::Lemniscate) {
    switch (cls) {
      case SeedClass::K1: return (std::sqrt(5.0) - 2.0) / (kSqrt2 + 1.0);
      case SeedClass::K2: return (kSqrt2 - 1.0) / (kSqrt2 + 2.0);
      case SeedClass::K3: return (kSqrt2 - 1.0) / (kSqrt2 + 1.0);
    }
  }
  if (kind == RegionKind::Sine) {
    switch (cls) {
      case SeedClass::K1:
        return (-2.0 + std::sqrt(4.0 + s * (2.0 + s))) / (2.0 + s);
      case SeedClass::K2: return s / (3.0 + s);
      case SeedClass::K3: return s / (2.0 + s);
    }
  }
  return std::nullopt;
}

std::string make_id(SeedClass cls, RegionKind kind, bool plain_starlike) {
  std::string id(class_token(cls));
  id += '-';
  id += plain_starlike ? std::string_view("starlike") : region_token(kind);
  return id;
}

}  // namespace

double containment_gap(SeedClass cls, const TargetRegion& region, double r) {
  const Disk d = disk_image(cls, r);
  return inradius(region, d.center) - d.radius;
}

RadiusResult solve_radius(SeedClass cls, const TargetRegion& region,
                          double bracket_width) {
  if (!(bracket_width > 0.0))
    throw std::domain_error("bracket width must be positive");

  RadiusResult out;
  out.class_kind = cls;
  out.region = region;

  if (region.kind == RegionKind::StarlikeOfOrder &&
      1.0 - region.alpha < std::numeric_limits<double>::epsilon()) {
    out.equation_id = "degenerate";
    return out;
  }

  const CenterInterval centers = admissible_centers(region);
  double cap = 0.9;
  if (std::isfinite(centers.hi))
    cap = std::min(cap, center_inverse(centers.hi) - 1e-9);

  const auto g = [&](double r) { return containment_gap(cls, region, r); };

  // g(0) = inradius at center 1 > 0 for every region, so scanning for the
  // first nonpositive cell endpoint brackets the smallest root
  constexpr int kCells = 512;
  double lo = 0.0, hi = 0.0;
  bool bracketed = false;
  for (int i = 1; i <= kCells; ++i) {
    const double x = cap * i / kCells;
    if (g(x) <= 0.0) {
      lo = cap * (i - 1) / kCells;
      hi = x;
      bracketed = true;
      break;
    }
  }
  if (!bracketed)
    throw BracketError("containment gap keeps its sign below the bracket cap");

  while (hi - lo > bracket_width) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }

  out.value = 0.5 * (lo + hi);
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.residual = std::abs(g(out.value));
  out.equation_id = make_id(cls, region.kind, false);
  out.closed_form = closed_form_for(cls, region.kind);
  return out;
}

std::vector<RadiusResult> alpha_sweep(SeedClass cls,
                                      const std::vector<double>& alphas) {
  std::vector<RadiusResult> out;
  out.reserve(alphas.size());
  for (double alpha : alphas)
    out.push_back(solve_radius(cls, starlike_of_order(alpha)));
  return out;
}

namespace {

EquationCatalogEntry entry(SeedClass cls, RegionKind kind, bool plain,
                           std::optional<Polynomial> poly, bool suspect,
                           double paper_value) {
  EquationCatalogEntry e;
  e.class_kind = cls;
  e.region = region_of(kind);
  e.plain_starlike = plain;
  e.printed_equation = std::move(poly);
  e.printed_equation_suspect = suspect;
  e.closed_form = closed_form_for(cls, kind);
  e.paper_value = paper_value;
  e.id = make_id(cls, kind, plain);
  return e;
}

std::vector<EquationCatalogEntry> build_catalog() {
  const double s = kSin1;
  const Polynomial star1{1.0, -4.0, -2.0, -4.0, 1.0};
  const Polynomial star2{1.0, -3.0, -3.0, -3.0};
  const Polynomial star3{1.0, -2.0, -2.0, -2.0, 1.0};

  std::vector<EquationCatalogEntry> v;
  v.reserve(30);

  // K1
  v.push_back(entry(SeedClass::K1, RegionKind::StarlikeOfOrder, true, star1,
                    false, 0.216845));
  v.push_back(entry(SeedClass::K1, RegionKind::StarlikeOfOrder, false, star1,
                    false, 0.216845));
  v.push_back(entry(SeedClass::K1, RegionKind::Lemniscate, false,
                    Polynomial{1.0 - kSqrt2, 4.0, 2.0, 4.0, 1.0 + kSqrt2},
                    false, 0.0977826));
  v.push_back(entry(SeedClass::K1, RegionKind::Parabolic, false,
                    Polynomial{1.0, -8.0, -4.0, -8.0, 3.0}, false, 0.116675));
  v.push_back(entry(SeedClass::K1, RegionKind::Exponential, false,
                    Polynomial{kE - 1.0, -4.0 * kE, -2.0 * kE, -4.0 * kE,
                               kE + 1.0},
                    false, 0.144684));
  v.push_back(entry(SeedClass::K1, RegionKind::Cardioid, false,
                    Polynomial{2.0, -12.0, -6.0, -12.0, 4.0}, false, 0.15182));
  v.push_back(entry(SeedClass::K1, RegionKind::Lune, false,
                    Polynomial{2.0 - kSqrt2, -4.0, -2.0, -4.0, kSqrt2}, false,
                    0.134993));
  v.push_back(entry(SeedClass::K1, RegionKind::Sine, false,
                    Polynomial{-s, 4.0, 2.0, 4.0, 2.0 + s}, false, 0.185835));
  // the published radical display for this radius is dimensionally
  // inconsistent; no equation is stored and the row is flagged
  v.push_back(entry(SeedClass::K1, RegionKind::RL, false, std::nullopt, true,
                    0.0687813));
  v.push_back(entry(SeedClass::K1, RegionKind::RationalR, false,
                    Polynomial{3.0 - 2.0 * kSqrt2, -4.0, -2.0, -4.0,
                               2.0 * kSqrt2 - 1.0},
                    false, 0.0419413));

  // K2
  v.push_back(entry(SeedClass::K2, RegionKind::StarlikeOfOrder, true, star2,
                    false, 0.253077));
  v.push_back(entry(SeedClass::K2, RegionKind::StarlikeOfOrder, false, star2,
                    false, 0.253077));
  // printed quartic does not have the closed form as a root (its smallest
  // root is 0.0419, not 0.1213); kept verbatim, flagged, never solved from
  v.push_back(entry(SeedClass::K2, RegionKind::Lemniscate, false,
                    Polynomial{3.0 - 2.0 * kSqrt2, -4.0, -2.0, -4.0,
                               kSqrt2 + 2.0},
                    true, 0.12132));
  v.push_back(entry(SeedClass::K2, RegionKind::Parabolic, false,
                    Polynomial{1.0, -6.0, -6.0, -6.0, 1.0}, false, 0.1432698));
  v.push_back(entry(SeedClass::K2, RegionKind::Exponential, false,
                    Polynomial{kE - 1.0, -3.0 * kE, -3.0 * kE, -3.0 * kE, 1.0},
                    false, 0.174887));
  v.push_back(entry(SeedClass::K2, RegionKind::Cardioid, false,
                    Polynomial{2.0, -9.0, -9.0, -9.0, 1.0}, false, 0.182815));
  v.push_back(entry(SeedClass::K2, RegionKind::Lune, false,
                    Polynomial{2.0 - kSqrt2, -3.0, -3.0, -3.0, kSqrt2 - 1.0},
                    false, 0.164039));
  v.push_back(entry(SeedClass::K2, RegionKind::Sine, false,
                    Polynomial{-s, 3.0, 3.0, 3.0, 3.0 + s}, false, 0.219049));
  v.push_back(entry(SeedClass::K2, RegionKind::RationalR, false,
                    Polynomial{3.0 - 2.0 * kSqrt2, -3.0, -3.0, -3.0,
                               2.0 * kSqrt2 - 2.0},
                    false, 0.0541073));
  v.push_back(entry(SeedClass::K2, RegionKind::RL, false, std::nullopt, false,
                    0.0870259));

  // K3
  v.push_back(entry(SeedClass::K3, RegionKind::StarlikeOfOrder, true, star3,
                    false, 0.346014));
  v.push_back(entry(SeedClass::K3, RegionKind::StarlikeOfOrder, false, star3,
                    false, 0.346014));
  v.push_back(entry(SeedClass::K3, RegionKind::Lemniscate, false,
                    Polynomial{1.0 - kSqrt2, 2.0, 2.0, 2.0, 1.0 + kSqrt2},
                    false, 0.171573));
  v.push_back(entry(SeedClass::K3, RegionKind::Parabolic, false,
                    Polynomial{1.0, -4.0, -4.0, -4.0, 3.0}, false, 0.2021347));
  v.push_back(entry(SeedClass::K3, RegionKind::Exponential, false,
                    Polynomial{kE - 1.0, -2.0 * kE, -2.0 * kE, -2.0 * kE,
                               kE + 1.0},
                    false, 0.244259));
  v.push_back(entry(SeedClass::K3, RegionKind::Cardioid, false,
                    Polynomial{1.0, -3.0, -3.0, -3.0, 2.0}, false, 0.254726));
  v.push_back(entry(SeedClass::K3, RegionKind::Lune, false,
                    Polynomial{2.0 - kSqrt2, -2.0, -2.0, -2.0, kSqrt2}, false,
                    0.229877));
  v.push_back(entry(SeedClass::K3, RegionKind::Sine, false,
                    Polynomial{-s, 2.0, 2.0, 2.0, 2.0 + s}, false, 0.296139));
  v.push_back(entry(SeedClass::K3, RegionKind::RationalR, false,
                    Polynomial{3.0 - 2.0 * kSqrt2, -2.0, -2.0, -2.0,
                               2.0 * kSqrt2 - 1.0},
                    false, 0.0790749));
  v.push_back(entry(SeedClass::K3, RegionKind::RL, false, std::nullopt, false,
                    0.125145));

  return v;
}

}  // namespace

const std::vector<EquationCatalogEntry>& catalog() {
  static const std::vector<EquationCatalogEntry> entries = build_catalog();
  return entries;
}

}  // namespace starrad
