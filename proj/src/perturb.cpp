#include "para/perturb.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace para::perturb {

namespace {

struct Legs {
  std::vector<int> positions;              // positions of the vertex legs
  std::vector<std::pair<int, int>> bilinear_pairs;  // leg positions sharing a block
  bool all_different = false;
  std::optional<std::pair<int, int>> forbidden_self;  // fermion bilinear legs
};

}  // namespace

VertexReport vertex_admissibility(const VertexSpec& v, std::optional<int> p_concrete) {
  VertexReport report;
  if (v.kind == VertexSpec::Kind::NestedAllDifferent) {
    const int arity = static_cast<int>(v.nested_fields.size());
    if (p_concrete && arity != *p_concrete) {
      report.admissible = false;
      report.flags.push_back("unsaturated: nested arity " + std::to_string(arity) +
                             " does not match order p=" + std::to_string(*p_concrete));
    }
    if (arity % 2 == 0) {
      report.admissible = false;
      report.flags.push_back("even degree: nested interaction of even arity is disallowed");
    }
  } else if (v.kind == VertexSpec::Kind::Yukawa) {
    if (p_concrete && *p_concrete != 3) {
      report.admissible = false;
      report.flags.push_back("Yukawa coupling requires order-3 fields");
    }
  }
  return report;
}

ProductSpec extend_with_vertex(const ProductSpec& externals, const VertexSpec& v) {
  if (externals.mode != ProductMode::TimeOrdered)
    throw std::invalid_argument("vertex corrections require a time-ordered product");
  ProductSpec extended = externals;
  auto leg = [&](int field, bool adjoint) {
    Insertion ins;
    ins.field = field;
    ins.adjoint = adjoint;
    ins.label = v.point;
    extended.insertions.push_back(ins);
  };
  switch (v.kind) {
    case VertexSpec::Kind::DiagonalPower: {
      const FieldSpec& f = extended.fields.at(static_cast<std::size_t>(v.field));
      const bool paired =
          f.charge == Charge::Charged || f.stat == Statistics::ParaFermi;
      for (int c = 0; c < v.degree; ++c) {
        leg(v.field, paired);
        leg(v.field, false);
      }
      break;
    }
    case VertexSpec::Kind::NestedAllDifferent:
      for (int field : v.nested_fields) leg(field, false);
      break;
    case VertexSpec::Kind::Yukawa:
      leg(v.fermi_field, true);   // psi-bar
      leg(v.fermi_field, false);  // psi
      leg(v.bose_field, false);   // phi
      break;
  }
  return extended;
}

CorrelatorResult first_order_correction(const ProductSpec& externals, const VertexSpec& v) {
  externals.validate();
  const ProductSpec extended = extend_with_vertex(externals, v);
  const int n_ext = static_cast<int>(externals.size());
  const int n_all = static_cast<int>(extended.size());

  Legs legs;
  for (int pos = n_ext + 1; pos <= n_all; ++pos) legs.positions.push_back(pos);
  switch (v.kind) {
    case VertexSpec::Kind::DiagonalPower:
      for (int c = 0; c < v.degree; ++c)
        legs.bilinear_pairs.emplace_back(n_ext + 2 * c + 1, n_ext + 2 * c + 2);
      break;
    case VertexSpec::Kind::NestedAllDifferent:
      legs.all_different = true;
      break;
    case VertexSpec::Kind::Yukawa:
      legs.all_different = true;
      legs.forbidden_self = {n_ext + 1, n_ext + 2};
      break;
  }

  CorrelatorResult result;
  for (const Matching& m : enumerate_matchings(extended)) {
    std::map<int, int> pair_of_position;
    for (std::size_t idx = 0; idx < m.pairs.size(); ++idx) {
      pair_of_position[m.pairs[idx].first] = static_cast<int>(idx);
      pair_of_position[m.pairs[idx].second] = static_cast<int>(idx);
    }
    if (legs.forbidden_self &&
        pair_of_position[legs.forbidden_self->first] ==
            pair_of_position[legs.forbidden_self->second])
      continue;

    BlockConstraints constraints;
    for (auto [a, b] : legs.bilinear_pairs)
      constraints.same.emplace_back(pair_of_position[a], pair_of_position[b]);
    if (legs.all_different)
      for (std::size_t i = 0; i < legs.positions.size(); ++i)
        for (std::size_t j = i + 1; j < legs.positions.size(); ++j)
          constraints.distinct.emplace_back(pair_of_position[legs.positions[i]],
                                            pair_of_position[legs.positions[j]]);

    CrossingGraph g = crossing_edges(m, extended);
    PPolynomial coeff = matching_coefficient(g, extended, constraints);
    if (matching_orientation_sign(extended, m) < 0) coeff = -coeff;
    if (coeff.is_zero()) continue;

    ResultTerm t;
    t.coefficient = std::move(coeff);
    t.coupling_power = 1;
    t.integration_points.push_back(v.point);
    t.i_power = (static_cast<int>(m.pairs.size()) + 1) % 4;  // one i per pair, one for i*g
    for (auto [i, j] : m.pairs) {
      MaybeFactor f = make_kernel_factor(extended, i, j);
      if (f.present) t.factors.push_back(std::move(f.factor));
    }
    result.add(std::move(t));
  }
  result.finalize();
  return result;
}

}  // namespace para::perturb
