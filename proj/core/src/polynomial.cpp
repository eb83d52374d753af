#include "starrad/polynomial.hpp"

#include <cmath>
#include <utility>

namespace starrad {

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : coeffs_(coeffs) {
  normalize();
}

Polynomial::Polynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial::operator()(double x) const {
  double v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

double smallest_positive_root(const Polynomial& poly) {
  constexpr int kCells = 4096;
  constexpr double kRightEnd = 1.0 - 1e-14;  // the interval is open at 1

  double lo = 0.0, hi = 0.0;
  double flo = 0.0;
  bool bracketed = false;
  for (int i = 0; i < kCells; ++i) {
    double x0 = static_cast<double>(i) / kCells;
    double x1 = static_cast<double>(i + 1) / kCells;
    if (x1 > kRightEnd) x1 = kRightEnd;
    double f0 = poly(x0);
    if (f0 == 0.0 && x0 > 0.0) return x0;  // root on a grid point
    double f1 = poly(x1);
    if (f0 * f1 < 0.0) {
      lo = x0;
      hi = x1;
      flo = f0;
      bracketed = true;
      break;
    }
  }
  if (!bracketed)
    throw NoRootError("no sign change in (0,1)");

  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    double fm = poly(mid);
    if (fm == 0.0) return mid;
    if ((flo > 0.0) == (fm > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace starrad
