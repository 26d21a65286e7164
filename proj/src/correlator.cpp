#include "para/correlator.hpp"

#include <stdexcept>

namespace para {

namespace {

std::vector<CrossingEvent> events_of(const CrossingGraph& g, const ProductSpec& product) {
  std::vector<CrossingEvent> events;
  events.reserve(g.edges.size());
  for (auto [a, b] : g.edges) {
    const int fa = g.vertices.at(a).field;
    const int fb = g.vertices.at(b).field;
    events.push_back({a, b, product.rule_between(fa, fb)});
  }
  return events;
}

ResultTerm term_for_matching(const ProductSpec& product, const Matching& m,
                             PPolynomial coefficient) {
  ResultTerm t;
  t.coefficient = std::move(coefficient);
  for (auto [i, j] : m.pairs) {
    if (product.mode == ProductMode::TimeOrdered) t.i_power = (t.i_power + 1) % 4;
    MaybeFactor f = make_kernel_factor(product, i, j);
    if (f.present) t.factors.push_back(std::move(f.factor));
  }
  return t;
}

}  // namespace

PPolynomial matching_coefficient(const CrossingGraph& g, const ProductSpec& product,
                                 const BlockConstraints& constraints) {
  return partition_sign_sum(static_cast<int>(g.vertices.size()), events_of(g, product),
                            constraints);
}

PPolynomial matching_coefficient(const CrossingGraph& g, Statistics stat) {
  std::vector<CrossingEvent> events;
  events.reserve(g.edges.size());
  for (auto [a, b] : g.edges) events.push_back({a, b, sign_rule(stat)});
  return partition_sign_sum(static_cast<int>(g.vertices.size()), events, {});
}

int matching_orientation_sign(const ProductSpec& product, const Matching& m) {
  if (product.mode != ProductMode::TimeOrdered) return 1;
  int sign = 1;
  for (auto [i, j] : m.pairs) {
    const Insertion& left = product.insertions.at(i - 1);
    if (left.adjoint) sign *= exchange_sign(product.field_of(left).stat, true);
  }
  return sign;
}

CorrelatorResult evaluate(const ProductSpec& product) {
  product.validate();
  if (product.insertions.empty()) return CorrelatorResult::unit();
  if (product.size() % 2 != 0) return CorrelatorResult::zero();

  CorrelatorResult result;
  for (const Matching& m : enumerate_matchings(product)) {
    CrossingGraph g = crossing_edges(m, product);
    PPolynomial coeff = matching_coefficient(g, product);
    if (matching_orientation_sign(product, m) < 0) coeff = -coeff;
    result.add(term_for_matching(product, m, std::move(coeff)));
  }
  result.finalize();
  return result;
}

CorrelatorResult evaluate_green_components(const ProductSpec& product, int p0) {
  product.validate();
  if (p0 < 1) throw std::invalid_argument("evaluate_green_components: order must be >= 1");
  for (const auto& ins : product.insertions) {
    if (!ins.green)
      throw std::invalid_argument("evaluate_green_components: missing Green index");
    if (ins.green->value < 1 || ins.green->value > p0)
      throw std::out_of_range("Green index " + std::to_string(ins.green->value) +
                              " outside 1.." + std::to_string(p0));
  }
  if (product.insertions.empty()) return CorrelatorResult::unit();
  if (product.size() % 2 != 0) return CorrelatorResult::zero();

  CorrelatorResult result;
  for (const Matching& m : enumerate_matchings(product)) {
    // admissible_pair already forced equal indices within each pair
    CrossingGraph g = crossing_edges(m, product);
    int sign = matching_orientation_sign(product, m);
    for (auto [a, b] : g.edges) {
      const auto& va = g.vertices.at(a);
      const auto& vb = g.vertices.at(b);
      const int idx_a = product.insertions.at(va.pair.first - 1).green->value;
      const int idx_b = product.insertions.at(vb.pair.first - 1).green->value;
      sign *= product.rule_between(va.field, vb.field).sign(idx_a == idx_b);
    }
    result.add(term_for_matching(product, m, PPolynomial{Integer(sign)}));
  }
  result.finalize();
  return result;
}

}  // namespace para
