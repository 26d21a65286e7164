#ifndef PARA_MATCHING_HPP
#define PARA_MATCHING_HPP

#include <utility>
#include <vector>

#include "para/product.hpp"

namespace para {

/// A perfect pairing of string positions (1-based, first < second), stored
/// sorted by first element.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Crossing structure of a matching: one vertex per contraction pair, one
/// edge per interleaving pair (i < k < j < l). The vertex order follows the
/// matching's pair order; `field` annotates each contraction's species.
struct CrossingGraph {
  struct Vertex {
    std::pair<int, int> pair;
    int field = 0;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // indices into vertices, a < b
};

bool pairs_cross(std::pair<int, int> a, std::pair<int, int> b);

/// Whether positions i < j of the product may be contracted: same field;
/// charged and parafermi fields join an adjoint with a non-adjoint; operator
/// strings contract an annihilator (left) with a creator (right); fixed Green
/// components must coincide.
bool admissible_pair(const ProductSpec& product, int i, int j);

/// All perfect matchings by admissible pairs, in lexicographic order.
/// Odd-length products have none.
std::vector<Matching> enumerate_matchings(const ProductSpec& product);

CrossingGraph crossing_edges(const Matching& m);
CrossingGraph crossing_edges(const Matching& m, const ProductSpec& product);

/// (2m-1)!! pair counts, for tests and sizing.
long double_factorial_odd(int n);

}  // namespace para

#endif
