#ifndef PARA_GENFUN_HPP
#define PARA_GENFUN_HPP

#include <optional>
#include <string>
#include <vector>

#include "para/integers.hpp"
#include "para/partition_sum.hpp"
#include "para/product.hpp"
#include "para/result.hpp"

namespace para::genfun {

/// Where a source slot got bound by a functional derivative.
struct Binding {
  int position = 0;  // insertion position, drives argument canonicalization
  std::string point;
  friend bool operator==(const Binding&, const Binding&) = default;
};

/// One propagator bilinear opened inside a monomial. The starred source
/// (J* / eta-bar) occupies slot 0, the plain source slot 1; neutral parabose
/// bilinears hold the plain source in both slots.
struct PendingKernel {
  int field = 0;
  std::optional<Binding> bound[2];
  bool complete() const { return bound[0].has_value() && bound[1].has_value(); }
};

/// A single source component inside a monomial. `block` is the symbolic
/// Green-index block it carries; `kernel`/`slot` tie bilinear factors to
/// their propagator, -1 for free-standing factors. A concrete `point`
/// restricts derivative matching to that point; integrated slots leave it
/// empty.
struct SourceFactor {
  int field = 0;
  bool starred = false;
  int block = 0;
  int kernel = -1;
  int slot = 0;
  std::optional<std::string> point;
  friend bool operator==(const SourceFactor&, const SourceFactor&) = default;
};

/// scalar * i^i_power * (ordered source factors) * (pending kernels), with
/// the crossing events accumulated so far. i_power is kept in {0,1}; the
/// sign of i^2 folds into the rational.
struct SourceMonomial {
  Rational scalar{1};
  int i_power = 0;
  std::vector<SourceFactor> factors;
  std::vector<PendingKernel> kernels;
  std::vector<CrossingEvent> events;

  void scale_by_i_power(int k);  // multiply by i^k, normalizing
};

/// Sum of source monomials over a fixed field table; like monomials merge
/// and zero monomials drop under normalize().
class FunctionalState {
 public:
  FunctionalState(std::vector<FieldSpec> fields, RelativeRules rules)
      : fields_(std::move(fields)), rules_(std::move(rules)) {}

  const std::vector<FieldSpec>& fields() const { return fields_; }
  const RelativeRules& rules() const { return rules_; }
  const std::vector<SourceMonomial>& monomials() const { return monomials_; }
  std::vector<SourceMonomial>& monomials() { return monomials_; }

  SignRule rule_between(int field_a, int field_b) const;

  /// Canonicalize factor order, fold events mod 2, merge equal monomials.
  void normalize();

 private:
  std::vector<FieldSpec> fields_;
  RelativeRules rules_;
  std::vector<SourceMonomial> monomials_;
};

/// Derivative with respect to one source species at a point. Matching a
/// factor identifies the derivative's summed Green index with the factor's
/// block; factors passed on the way contribute the graded exchange signs.
struct SourceDerivative {
  int field = 0;
  bool starred = false;  // species differentiated: J* / eta-bar when true
  std::string point;
  int position = 0;
};

/// Order-m term of exp(sum of source bilinears): every way of drawing m
/// bilinears from the field table, scalar (-i)^m / prod(multiplicity!), with
/// an extra 1/2 per neutral parabose bilinear (its two slots are
/// interchangeable and would otherwise double-count).
FunctionalState w_free_expansion(const std::vector<FieldSpec>& fields, int half_order,
                                 const RelativeRules& rules = {});

/// Left-acting graded functional derivative, Eq.-(25)-style: distributes
/// over every matching factor; monomials with no match are annihilated.
FunctionalState apply_derivative(const FunctionalState& state, const SourceDerivative& d);

/// Independent recomputation of the time-ordered VEV through the generating
/// functional: expand to half order n/2, differentiate rightmost insertion
/// first with a 1/i per derivative, then resolve Green-index block sums.
CorrelatorResult n_point(const ProductSpec& product);

/// n_point at a chosen expansion order; orders other than n/2 must yield
/// the zero result.
CorrelatorResult n_point_at_order(const ProductSpec& product, int half_order);

/// Source species differentiated for an insertion of the product.
SourceDerivative derivative_for(const ProductSpec& product, int position);

}  // namespace para::genfun

#endif
