#include "para/result.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace para {

std::string KernelFactor::str() const {
  switch (kind) {
    case Kind::ScalarFeynman:
      return "iDF(" + arg_a + "-" + arg_b + ")";
    case Kind::FermionFeynman:
      return "iSF(" + arg_a + "-" + arg_b + ")";
    case Kind::Kronecker:
      return "delta(" + arg_a + "," + arg_b + ")";
  }
  return {};
}

MaybeFactor make_kernel_factor(const ProductSpec& product, int i, int j) {
  if (i > j) std::swap(i, j);
  const Insertion& a = product.insertions.at(i - 1);
  const Insertion& b = product.insertions.at(j - 1);
  const FieldSpec& field = product.field_of(a);

  KernelFactor f;
  f.field = a.field;
  if (product.mode == ProductMode::OperatorString) {
    if (a.label == b.label) return {};  // delta between equal modes is 1
    f.kind = KernelFactor::Kind::Kronecker;
    f.arg_a = std::min(a.label, b.label);
    f.arg_b = std::max(a.label, b.label);
  } else if (field.kernel() == KernelKind::FermionFeynman) {
    f.kind = KernelFactor::Kind::FermionFeynman;
    // psi point minus psi-bar point
    f.arg_a = a.adjoint ? b.label : a.label;
    f.arg_b = a.adjoint ? a.label : b.label;
  } else {
    f.kind = KernelFactor::Kind::ScalarFeynman;
    f.arg_a = b.label;  // greater string position
    f.arg_b = a.label;
  }
  return {true, f};
}

std::string ResultTerm::str() const {
  std::ostringstream os;
  if (coupling_power >= 1) {
    os << "g";
    if (coupling_power > 1) os << "^" << coupling_power;
    os << " * ";
  }
  for (const auto& z : integration_points) os << "int[" << z << "] * ";

  int kernel_units = 0;
  for (const auto& f : factors)
    if (f.kind != KernelFactor::Kind::Kronecker) ++kernel_units;
  int extra_i = ((i_power - kernel_units) % 4 + 4) % 4;
  if (extra_i == 1)
    os << "i * ";
  else if (extra_i == 2)
    os << "i^2 * ";
  else if (extra_i == 3)
    os << "i^3 * ";

  std::string poly = coefficient.str();
  bool multi = coefficient.coeffs().size() > 1;
  os << (multi ? "(" + poly + ")" : poly);
  for (const auto& f : factors) os << " * " << f.str();
  return os.str();
}

void CorrelatorResult::add(ResultTerm term) {
  if (term.coefficient.is_zero()) return;
  std::sort(term.factors.begin(), term.factors.end());
  std::sort(term.integration_points.begin(), term.integration_points.end());
  terms_.push_back(std::move(term));
}

void CorrelatorResult::finalize() {
  using Key = std::tuple<std::vector<KernelFactor>, int, int, std::vector<std::string>>;
  std::map<Key, PPolynomial> merged;
  for (auto& t : terms_) {
    Key key{t.factors, t.i_power, t.coupling_power, t.integration_points};
    merged[key] += t.coefficient;
  }
  terms_.clear();
  for (auto& [key, coeff] : merged) {
    if (coeff.is_zero()) continue;
    ResultTerm t;
    t.factors = std::get<0>(key);
    t.i_power = std::get<1>(key);
    t.coupling_power = std::get<2>(key);
    t.integration_points = std::get<3>(key);
    t.coefficient = std::move(coeff);
    terms_.push_back(std::move(t));
  }
}

CorrelatorResult CorrelatorResult::unit() {
  CorrelatorResult r;
  ResultTerm t;
  t.coefficient = PPolynomial{Integer(1)};
  r.terms_.push_back(std::move(t));
  return r;
}

std::string CorrelatorResult::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].str();
  }
  return os.str();
}

bool operator==(const CorrelatorResult& a, const CorrelatorResult& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const ResultTerm& x = a.terms_[i];
    const ResultTerm& y = b.terms_[i];
    if (!(x.coefficient == y.coefficient) || x.i_power != y.i_power ||
        x.factors != y.factors || x.coupling_power != y.coupling_power ||
        x.integration_points != y.integration_points)
      return false;
  }
  return true;
}

}  // namespace para
