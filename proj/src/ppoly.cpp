#include "para/ppoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace para {

PPolynomial::PPolynomial(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

PPolynomial::PPolynomial(std::initializer_list<Integer> ascending_coeffs)
    : coeffs_(ascending_coeffs) {
  normalize();
}

PPolynomial::PPolynomial(std::vector<Integer> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  normalize();
}

PPolynomial PPolynomial::variable() { return PPolynomial({Integer(0), Integer(1)}); }

Integer PPolynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

Integer PPolynomial::eval(const Integer& p0) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p0 + *it;
  return acc;
}

PPolynomial& PPolynomial::operator+=(const PPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

PPolynomial& PPolynomial::operator-=(const PPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

PPolynomial& PPolynomial::operator*=(const PPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

PPolynomial PPolynomial::operator-() const {
  PPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void PPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string PPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << "p";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

PPolynomial falling_factorial(int b) {
  if (b < 0) throw std::invalid_argument("falling_factorial: negative block count");
  PPolynomial acc{Integer(1)};
  const PPolynomial p = PPolynomial::variable();
  for (int i = 0; i < b; ++i) acc *= p - PPolynomial(Integer(i));
  return acc;
}

Integer ppoly_eval(const PPolynomial& poly, const Integer& p0) {
  if (p0 < 0) throw std::invalid_argument("ppoly_eval: order must be non-negative");
  return poly.eval(p0);
}

}  // namespace para
