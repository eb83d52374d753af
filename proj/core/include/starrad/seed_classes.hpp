#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "starrad/polynomial.hpp"

namespace starrad {

// The three classes of normalized analytic functions whose zf'/f images are
// bounded by explicit disks. Every class shares the center path a(r); they
// differ only in the spread polynomial that fixes the disk radius.
enum class SeedClass { K1, K2, K3 };

inline constexpr std::array<SeedClass, 3> kAllClasses = {
    SeedClass::K1, SeedClass::K2, SeedClass::K3};

struct Disk {
  double center = 1.0;
  double radius = 0.0;
};

// a(r) = (1+r^4)/(1-r^4). Strictly increasing on [0,1), a(0) = 1.
double disk_center(double r);

// Inverse of disk_center on [1, inf): ((a-1)/(a+1))^(1/4).
double center_inverse(double a);

// Image of |z| <= r under (1+z^2)/(1-z^2): center a(r), radius 2r^2/(1-r^4).
Disk mobius_disk(double r);

// Sup of |z p'(z)/p(z)| over |z| <= r for p with positive real part shifted
// by alpha and expansion starting at z^n:
//   2 n r^n (1-alpha) / ((1-r^n)(1+(1-2 alpha) r^n)).
double caratheodory_logderiv_bound(double alpha, double r, int n);

// Spread polynomial s of the class; the disk radius is s(r)/(1-r^4).
//   K1: 2r(2r^2+r+2)   K2: r(r^3+3r^2+3r+3)   K3: 2r(r^2+r+1)
const Polynomial& spread_polynomial(SeedClass cls);

// The class disk at radius r: center a(r), radius s(r)/(1-r^4).
Disk disk_image(SeedClass cls, double r);

// center - radius of disk_image: the guaranteed minimum of Re zf'/f.
double lower_edge(SeedClass cls, double r);

std::string_view class_token(SeedClass cls);
std::optional<SeedClass> parse_class(std::string_view token);

}  // namespace starrad
