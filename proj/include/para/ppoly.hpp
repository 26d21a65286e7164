#ifndef PARA_PPOLY_HPP
#define PARA_PPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "para/integers.hpp"

namespace para {

/// Polynomial in the statistics order p with exact integer coefficients.
/// Stored densely, coeffs[k] multiplying p^k, trailing zeros stripped.
class PPolynomial {
 public:
  PPolynomial() = default;
  PPolynomial(Integer constant);  // NOLINT: implicit by design
  PPolynomial(std::initializer_list<Integer> ascending_coeffs);
  explicit PPolynomial(std::vector<Integer> ascending_coeffs);

  static PPolynomial variable();  // the polynomial p

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t power) const;

  Integer eval(const Integer& p0) const;

  PPolynomial& operator+=(const PPolynomial& rhs);
  PPolynomial& operator-=(const PPolynomial& rhs);
  PPolynomial& operator*=(const PPolynomial& rhs);
  PPolynomial operator-() const;

  friend PPolynomial operator+(PPolynomial a, const PPolynomial& b) { return a += b; }
  friend PPolynomial operator-(PPolynomial a, const PPolynomial& b) { return a -= b; }
  friend PPolynomial operator*(PPolynomial a, const PPolynomial& b) { return a *= b; }
  friend bool operator==(const PPolynomial& a, const PPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Canonical text, ascending powers: "0", "1", "p", "2p - p^2", "-1 + p^2".
  std::string str() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// p(p-1)...(p-b+1): the number of injective assignments of b index blocks
/// into {1..p}. b = 0 gives the constant 1.
PPolynomial falling_factorial(int b);

/// Exact evaluation at a concrete order p0 >= 0.
Integer ppoly_eval(const PPolynomial& poly, const Integer& p0);

}  // namespace para

#endif
