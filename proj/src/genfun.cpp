#include "para/genfun.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace para::genfun {

namespace {

bool charged_form(const FieldSpec& f) {
  return f.stat == Statistics::ParaFermi || f.charge == Charge::Charged;
}

std::vector<CrossingEvent> reduce_events(std::vector<CrossingEvent> events) {
  std::map<std::tuple<int, int, int, int>, int> parity;
  for (const auto& e : events) {
    int a = std::min(e.a, e.b), b = std::max(e.a, e.b);
    ++parity[{a, b, e.rule.same, e.rule.different}];
  }
  std::vector<CrossingEvent> out;
  for (const auto& [key, count] : parity)
    if (count % 2 != 0)
      out.push_back({std::get<0>(key), std::get<1>(key),
                     SignRule{std::get<2>(key), std::get<3>(key)}});
  return out;
}

std::tuple<int, bool, int, int, int, std::string> factor_key(const SourceFactor& f) {
  return {f.field, f.starred, f.block, f.kernel, f.slot, f.point.value_or(std::string())};
}

}  // namespace

void SourceMonomial::scale_by_i_power(int k) {
  i_power += ((k % 4) + 4) % 4;
  while (i_power >= 2) {
    i_power -= 2;
    scalar = -scalar;
  }
}

SignRule FunctionalState::rule_between(int field_a, int field_b) const {
  const FieldSpec& fa = fields_.at(field_a);
  const FieldSpec& fb = fields_.at(field_b);
  if (field_a == field_b) return sign_rule(fa.stat);
  if (fa.name == fb.name) return sign_rule(fa.stat);
  return rules_.lookup(fa, fb);
}

void FunctionalState::normalize() {
  for (auto& m : monomials_) {
    m.events = reduce_events(std::move(m.events));
    // stable bubble toward canonical factor order, tracking graded signs
    bool moved = true;
    while (moved && m.scalar != Rational(0)) {
      moved = false;
      for (std::size_t i = 0; i + 1 < m.factors.size(); ++i) {
        SourceFactor& x = m.factors[i];
        SourceFactor& y = m.factors[i + 1];
        if (factor_key(y) > factor_key(x)) continue;
        if (factor_key(y) == factor_key(x)) {
          if (rule_between(x.field, y.field).same < 0) m.scalar = Rational(0);  // nilpotent
          continue;
        }
        SignRule rule = rule_between(x.field, y.field);
        if (x.block == y.block)
          m.scalar *= rule.same;
        else
          m.events.push_back({std::min(x.block, y.block), std::max(x.block, y.block), rule});
        std::swap(x, y);
        moved = true;
      }
    }
    m.events = reduce_events(std::move(m.events));
  }

  using Key = std::string;
  auto serialize = [](const SourceMonomial& m) {
    std::string s;
    auto put = [&s](long v) { s += std::to_string(v) + ","; };
    for (const auto& f : m.factors) {
      put(f.field);
      put(f.starred);
      put(f.block);
      put(f.kernel);
      put(f.slot);
      s += f.point.value_or("~") + ";";
    }
    s += "|";
    for (const auto& k : m.kernels) {
      put(k.field);
      for (const auto& b : k.bound) {
        if (b) {
          put(b->position);
          s += b->point + ",";
        } else {
          s += "~,";
        }
      }
      s += ";";
    }
    s += "|";
    for (const auto& e : m.events) {
      put(e.a);
      put(e.b);
      put(e.rule.same);
      put(e.rule.different);
    }
    return s;
  };

  std::map<Key, SourceMonomial> merged;
  for (auto& m : monomials_) {
    if (m.scalar == Rational(0)) continue;
    Key key = std::to_string(m.i_power) + "#" + serialize(m);
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(std::move(key), std::move(m));
    else
      it->second.scalar += m.scalar;
  }
  monomials_.clear();
  for (auto& [key, m] : merged)
    if (m.scalar != Rational(0)) monomials_.push_back(std::move(m));
}

FunctionalState w_free_expansion(const std::vector<FieldSpec>& fields, int half_order,
                                 const RelativeRules& rules) {
  if (half_order < 0) throw std::invalid_argument("w_free_expansion: negative order");
  FunctionalState state(fields, rules);

  // enumerate bilinear multiplicities per field summing to half_order
  std::vector<int> counts(fields.size(), 0);
  auto emit = [&state, &fields](const std::vector<int>& mult) {
    SourceMonomial m;
    int next_id = 0;
    for (std::size_t f = 0; f < fields.size(); ++f) {
      Integer fact = 1;
      for (int c = 2; c <= mult[f]; ++c) fact *= c;
      m.scalar /= Rational(fact);
      const bool charged = charged_form(fields[f]);
      for (int c = 0; c < mult[f]; ++c) {
        const int id = next_id++;
        m.kernels.push_back(PendingKernel{static_cast<int>(f), {}});
        if (!charged) m.scalar /= 2;
        m.factors.push_back({static_cast<int>(f), charged, id, id, 0, std::nullopt});
        m.factors.push_back({static_cast<int>(f), false, id, id, 1, std::nullopt});
        m.scale_by_i_power(3);  // one factor of -i per bilinear
      }
    }
    state.monomials().push_back(std::move(m));
  };

  std::function<void(std::size_t, int)> walk = [&](std::size_t f, int remaining) {
    if (f + 1 == counts.size() || counts.empty()) {
      if (!counts.empty()) counts[f] = remaining;
      emit(counts);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[f] = c;
      walk(f + 1, remaining - c);
    }
  };
  if (fields.empty()) {
    if (half_order == 0) state.monomials().push_back(SourceMonomial{});
  } else {
    walk(0, half_order);
  }
  return state;
}

FunctionalState apply_derivative(const FunctionalState& state, const SourceDerivative& d) {
  FunctionalState out(state.fields(), state.rules());
  for (const SourceMonomial& m : state.monomials()) {
    for (std::size_t j = 0; j < m.factors.size(); ++j) {
      const SourceFactor& f = m.factors[j];
      if (f.field != d.field || f.starred != d.starred) continue;
      if (f.point && *f.point != d.point) continue;

      SourceMonomial branch = m;
      for (std::size_t k = 0; k < j; ++k) {
        const SourceFactor& passed = m.factors[k];
        SignRule rule = state.rule_between(d.field, passed.field);
        if (passed.block == f.block)
          branch.scalar *= rule.same;
        else
          branch.events.push_back(
              {std::min(f.block, passed.block), std::max(f.block, passed.block), rule});
      }
      if (f.kernel >= 0)
        branch.kernels.at(f.kernel).bound[f.slot] = Binding{d.position, d.point};
      branch.factors.erase(branch.factors.begin() + static_cast<std::ptrdiff_t>(j));
      out.monomials().push_back(std::move(branch));
    }
    // no matching factor: the monomial is annihilated
  }
  return out;
}

SourceDerivative derivative_for(const ProductSpec& product, int position) {
  const Insertion& ins = product.insertions.at(position - 1);
  const FieldSpec& field = product.field_of(ins);
  SourceDerivative d;
  d.field = ins.field;
  d.starred = charged_form(field) ? !ins.adjoint : false;
  d.point = ins.label;
  d.position = position;
  return d;
}

CorrelatorResult n_point_at_order(const ProductSpec& product, int half_order) {
  product.validate();
  if (product.mode != ProductMode::TimeOrdered)
    throw std::invalid_argument("n_point: requires a time-ordered product");
  const int n = static_cast<int>(product.size());
  if (n == 0 && half_order == 0) return CorrelatorResult::unit();
  if (n % 2 != 0) return CorrelatorResult::zero();

  FunctionalState state = w_free_expansion(product.fields, half_order, product.relative_rules);
  for (int pos = n; pos >= 1; --pos)
    state = apply_derivative(state, derivative_for(product, pos));

  // 1/i per applied derivative; a parafermi adjoint insertion differentiates
  // the eta source sitting right of psi-bar, so pulling the field down costs
  // an extra anticommutation sign
  const int i_shift = 3 * n;
  int source_sign = 1;
  for (const auto& ins : product.insertions)
    if (ins.adjoint && product.field_of(ins).stat == Statistics::ParaFermi) source_sign = -source_sign;

  std::map<std::vector<KernelFactor>, std::vector<Rational>> accum;
  for (SourceMonomial m : state.monomials()) {
    if (!m.factors.empty()) continue;  // remaining sources set to zero
    m.scale_by_i_power(i_shift);

    std::vector<KernelFactor> factors;
    for (const auto& k : m.kernels) {
      if (!k.complete())
        throw std::logic_error("n_point: unbound kernel slot in surviving monomial");
      int i = std::min(k.bound[0]->position, k.bound[1]->position);
      int j = std::max(k.bound[0]->position, k.bound[1]->position);
      MaybeFactor f = make_kernel_factor(product, i, j);
      if (f.present) factors.push_back(std::move(f.factor));
    }
    std::sort(factors.begin(), factors.end());

    const int num_blocks = static_cast<int>(m.kernels.size());
    PPolynomial poly = partition_sign_sum(num_blocks, reduce_events(std::move(m.events)), {});

    // fold the residual i into the per-contraction units
    int extra = ((m.i_power - num_blocks) % 4 + 4) % 4;
    Rational scale = m.scalar;
    if (extra == 2)
      scale = -scale;
    else if (extra != 0)
      throw std::logic_error("n_point: residual imaginary scalar");

    auto& rational_poly = accum[factors];
    if (rational_poly.size() < poly.coeffs().size()) rational_poly.resize(poly.coeffs().size());
    for (std::size_t c = 0; c < poly.coeffs().size(); ++c)
      rational_poly[c] += scale * Rational(poly.coeffs()[c]);
  }

  CorrelatorResult result;
  for (auto& [factors, rational_poly] : accum) {
    std::vector<Integer> coeffs;
    coeffs.reserve(rational_poly.size());
    for (const auto& r : rational_poly) {
      if (r.denominator() != 1)
        throw std::logic_error("n_point: non-integral coefficient survived merging");
      coeffs.push_back(r.numerator());
    }
    ResultTerm t;
    t.coefficient = PPolynomial(std::move(coeffs));
    if (t.coefficient.is_zero()) continue;
    t.i_power = (n / 2) % 4;
    t.factors = factors;
    result.add(std::move(t));
  }
  result.finalize();
  return result;
}

CorrelatorResult n_point(const ProductSpec& product) {
  return n_point_at_order(product, static_cast<int>(product.size()) / 2);
}

}  // namespace para::genfun
