#include "starrad/seed_classes.hpp"

#include <cmath>
#include <stdexcept>

namespace starrad {
namespace {

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("radius must lie in [0,1)");
}

}  // namespace

double disk_center(double r) {
  require_radius(r);
  double r4 = r * r * r * r;
  return (1.0 + r4) / (1.0 - r4);
}

double center_inverse(double a) {
  if (!(a >= 1.0)) throw std::domain_error("center path starts at 1");
  return std::pow((a - 1.0) / (a + 1.0), 0.25);
}

Disk mobius_disk(double r) {
  require_radius(r);
  double r2 = r * r;
  double r4 = r2 * r2;
  return {(1.0 + r4) / (1.0 - r4), 2.0 * r2 / (1.0 - r4)};
}

double caratheodory_logderiv_bound(double alpha, double r, int n) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::domain_error("alpha must lie in [0,1)");
  require_radius(r);
  if (n < 1) throw std::domain_error("expansion order must be positive");
  double rn = std::pow(r, n);
  return 2.0 * n * rn * (1.0 - alpha) /
         ((1.0 - rn) * (1.0 + (1.0 - 2.0 * alpha) * rn));
}

const Polynomial& spread_polynomial(SeedClass cls) {
  static const Polynomial k1{0.0, 4.0, 2.0, 4.0};
  static const Polynomial k2{0.0, 3.0, 3.0, 3.0, 1.0};
  static const Polynomial k3{0.0, 2.0, 2.0, 2.0};
  switch (cls) {
    case SeedClass::K1: return k1;
    case SeedClass::K2: return k2;
    case SeedClass::K3: return k3;
  }
  throw std::domain_error("unknown seed class");
}

Disk disk_image(SeedClass cls, double r) {
  require_radius(r);
  double r4 = r * r * r * r;
  return {(1.0 + r4) / (1.0 - r4), spread_polynomial(cls)(r) / (1.0 - r4)};
}

double lower_edge(SeedClass cls, double r) {
  Disk d = disk_image(cls, r);
  return d.center - d.radius;
}

std::string_view class_token(SeedClass cls) {
  switch (cls) {
    case SeedClass::K1: return "k1";
    case SeedClass::K2: return "k2";
    case SeedClass::K3: return "k3";
  }
  return "";
}

std::optional<SeedClass> parse_class(std::string_view token) {
  if (token == "k1") return SeedClass::K1;
  if (token == "k2") return SeedClass::K2;
  if (token == "k3") return SeedClass::K3;
  return std::nullopt;
}

}  // namespace starrad
