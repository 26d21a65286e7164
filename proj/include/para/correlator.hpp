#ifndef PARA_CORRELATOR_HPP
#define PARA_CORRELATOR_HPP

#include "para/matching.hpp"
#include "para/partition_sum.hpp"
#include "para/result.hpp"

namespace para {

/// Green-index sum of the crossing signs of one matching, as an exact
/// polynomial in p. Every crossing of two contractions contributes the
/// same/different exchange sign of its field pair; vertex constraints (when
/// any) restrict the admissible index partitions.
PPolynomial matching_coefficient(const CrossingGraph& g, const ProductSpec& product,
                                 const BlockConstraints& constraints = {});

/// Single-field convenience overload used when the graph carries no field
/// annotations: all contractions follow `stat`.
PPolynomial matching_coefficient(const CrossingGraph& g, Statistics stat);

/// Graded time-ordering orientation of the matching: each parafermi pair
/// whose adjoint member sits at the smaller string position contributes the
/// same-index exchange sign (T psi-bar psi = -T psi psi-bar). Parabose pairs
/// and operator strings contribute +1.
int matching_orientation_sign(const ProductSpec& product, const Matching& m);

/// Vacuum expectation of the product as a sum over admissible matchings.
/// Empty products give the unit result, odd products the zero result.
CorrelatorResult evaluate(const ProductSpec& product);

/// Eq.-(11)-level evaluation: every insertion carries a fixed Green index,
/// contractions require equal indices and each crossing contributes the
/// concrete exchange sign. Coefficients are integers (degree-0 polynomials).
CorrelatorResult evaluate_green_components(const ProductSpec& product, int p0);

}  // namespace para

#endif
