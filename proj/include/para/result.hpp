#ifndef PARA_RESULT_HPP
#define PARA_RESULT_HPP

#include <compare>
#include <string>
#include <vector>

#include "para/ppoly.hpp"
#include "para/product.hpp"

namespace para {

/// One propagator or Kronecker unit. For the Feynman kernels the printed
/// argument is arg_a - arg_b; Kronecker arguments are stored sorted.
struct KernelFactor {
  enum class Kind { ScalarFeynman, FermionFeynman, Kronecker };
  Kind kind = Kind::ScalarFeynman;
  int field = 0;
  std::string arg_a;
  std::string arg_b;

  std::string str() const;
  auto operator<=>(const KernelFactor&) const = default;
};

/// Builds the factor for contracting positions i < j of the product, with
/// the argument conventions fixed once for both engines: scalar kernels
/// print (greater-position point) - (smaller-position point); fermion
/// kernels print (psi point) - (psi-bar point). A Kronecker unit between
/// equal mode labels is the empty optional (the factor is 1).
struct MaybeFactor {
  bool present = false;
  KernelFactor factor;
};
MaybeFactor make_kernel_factor(const ProductSpec& product, int i, int j);

/// One canonical term: coefficient * i^i_power * product of factors, with an
/// optional vertex decoration (coupling power and integration points).
struct ResultTerm {
  PPolynomial coefficient;
  int i_power = 0;  // mod 4
  std::vector<KernelFactor> factors;  // sorted
  int coupling_power = 0;
  std::vector<std::string> integration_points;

  std::string str() const;
};

/// Canonically ordered, merged sum of terms. Zero coefficients are dropped;
/// an empty term list is the zero result.
class CorrelatorResult {
 public:
  void add(ResultTerm term);
  void finalize();  // merge like terms, drop zeros, sort

  static CorrelatorResult unit();
  static CorrelatorResult zero() { return {}; }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<ResultTerm>& terms() const { return terms_; }

  std::string str() const;
  friend bool operator==(const CorrelatorResult& a, const CorrelatorResult& b);

 private:
  std::vector<ResultTerm> terms_;
};

}  // namespace para

#endif
