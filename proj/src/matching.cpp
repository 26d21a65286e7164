#include "para/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace para {

bool pairs_cross(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

bool admissible_pair(const ProductSpec& product, int i, int j) {
  const Insertion& a = product.insertions.at(i - 1);
  const Insertion& b = product.insertions.at(j - 1);
  if (a.field != b.field) return false;
  const FieldSpec& field = product.field_of(a);

  if (product.mode == ProductMode::OperatorString) {
    if (a.op_kind != OpKind::Annihilator || b.op_kind != OpKind::Creator) return false;
  } else {
    const bool adjoint_pairing_required =
        field.charge == Charge::Charged || field.stat == Statistics::ParaFermi;
    if (adjoint_pairing_required && a.adjoint == b.adjoint) return false;
  }
  if (a.green && b.green && !(*a.green == *b.green)) return false;
  return true;
}

namespace {

void extend(const ProductSpec& product, std::vector<int>& partner, std::vector<Matching>& out,
            std::vector<std::pair<int, int>>& current) {
  const int n = static_cast<int>(partner.size());
  int first = 0;
  while (first < n && partner[first] != 0) ++first;
  if (first == n) {
    Matching m;
    m.pairs = current;
    out.push_back(std::move(m));
    return;
  }
  for (int second = first + 1; second < n; ++second) {
    if (partner[second] != 0) continue;
    if (!admissible_pair(product, first + 1, second + 1)) continue;
    partner[first] = second + 1;
    partner[second] = first + 1;
    current.emplace_back(first + 1, second + 1);
    extend(product, partner, out, current);
    current.pop_back();
    partner[first] = 0;
    partner[second] = 0;
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const ProductSpec& product) {
  product.validate();
  std::vector<Matching> out;
  if (product.size() % 2 != 0) return out;
  if (product.insertions.empty()) {
    out.push_back(Matching{});
    return out;
  }
  std::vector<int> partner(product.size(), 0);
  std::vector<std::pair<int, int>> current;
  extend(product, partner, out, current);
  return out;
}

CrossingGraph crossing_edges(const Matching& m) {
  CrossingGraph g;
  for (const auto& pr : m.pairs) g.vertices.push_back({pr, 0});
  for (std::size_t a = 0; a < m.pairs.size(); ++a)
    for (std::size_t b = a + 1; b < m.pairs.size(); ++b)
      if (pairs_cross(m.pairs[a], m.pairs[b]))
        g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return g;
}

CrossingGraph crossing_edges(const Matching& m, const ProductSpec& product) {
  CrossingGraph g = crossing_edges(m);
  for (auto& v : g.vertices) v.field = product.insertions.at(v.pair.first - 1).field;
  return g;
}

long double_factorial_odd(int n) {
  long acc = 1;
  for (int k = n; k > 1; k -= 2) acc *= k;
  return acc;
}

}  // namespace para
