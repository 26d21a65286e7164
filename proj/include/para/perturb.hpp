#ifndef PARA_PERTURB_HPP
#define PARA_PERTURB_HPP

#include <optional>
#include <string>
#include <vector>

#include "para/correlator.hpp"

namespace para::perturb {

/// Single interaction vertex at one integration point. The three admissible
/// shapes follow the locality analysis for para fields: index-diagonal
/// powers of a field bilinear, a nested product with every Green index used
/// exactly once, and the order-3 fermi-bose Yukawa coupling.
struct VertexSpec {
  enum class Kind { DiagonalPower, NestedAllDifferent, Yukawa };
  Kind kind = Kind::DiagonalPower;

  int field = -1;  // DiagonalPower
  int degree = 1;

  std::vector<int> nested_fields;  // NestedAllDifferent, one leg per field

  int fermi_field = -1;  // Yukawa
  int bose_field = -1;

  std::string coupling = "g";
  std::string point = "z";
};

struct VertexReport {
  bool admissible = true;
  std::vector<std::string> flags;
};

/// Flags index non-saturation (nested arity != concrete p) and even nested
/// degree; reports only, never throws.
VertexReport vertex_admissibility(const VertexSpec& v, std::optional<int> p_concrete);

/// Extended product used by the correction: the external insertions followed
/// by the vertex legs at the integration point.
ProductSpec extend_with_vertex(const ProductSpec& externals, const VertexSpec& v);

/// Order-g^1 correction: sum over matchings of the extended product with the
/// vertex's Green-index constraints folded into the block sum, one factor of
/// i*g and the integration marker per term. Yukawa discards the
/// self-contraction of its two fermion legs (the normal-ordering
/// subtraction).
CorrelatorResult first_order_correction(const ProductSpec& externals, const VertexSpec& v);

}  // namespace para::perturb

#endif
