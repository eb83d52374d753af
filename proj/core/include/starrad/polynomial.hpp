#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace starrad {

// No sign change of the target function inside the search interval.
struct NoRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The containment gap never turned negative below the bracket cap.
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense real polynomial, coefficients in ascending degree order.
// Trailing zero coefficients are stripped on construction so that
// equality compares mathematical identity, not storage.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  double operator()(double x) const;
  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  Polynomial operator*(const Polynomial& rhs) const;
  bool operator==(const Polynomial& rhs) const = default;

 private:
  void normalize();
  std::vector<double> coeffs_;
};

// Least root of poly in the open interval (0,1), found by sign isolation on a
// uniform subdivision followed by bisection to bracket width 1e-13 (well past
// the 1e-12 accuracy contract). Throws NoRootError when the subdivision sees
// no sign change; even-order roots are invisible to this scheme by design.
double smallest_positive_root(const Polynomial& poly);

}  // namespace starrad
