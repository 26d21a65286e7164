#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "para/correlator.hpp"
#include "para/genfun.hpp"
#include "oracle_helpers.hpp"

using namespace para;
using namespace para::genfun;

namespace {

const FieldSpec kNeutralBose{"phi", Statistics::ParaBose, Charge::Neutral};
const FieldSpec kChargedBose{"phi", Statistics::ParaBose, Charge::Charged};
const FieldSpec kFermi{"psi", Statistics::ParaFermi, Charge::Charged};

ProductSpec field_product(const FieldSpec& field,
                          const std::vector<std::pair<bool, std::string>>& factors) {
  ProductSpec prod;
  prod.fields.push_back(field);
  for (const auto& [adjoint, label] : factors)
    prod.insertions.push_back({0, adjoint, label, OpKind::TimeOrderedField, {}});
  return prod;
}

PPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<Integer> cs;
  for (long c : ascending) cs.push_back(Integer(c));
  return PPolynomial(std::move(cs));
}

}  // namespace

TEST_CASE("w_free_expansion order 0 is the unit state") {
  auto state = w_free_expansion({kChargedBose}, 0);
  REQUIRE(state.monomials().size() == 1);
  const auto& m = state.monomials()[0];
  CHECK(m.scalar == Rational(1));
  CHECK(m.i_power == 0);
  CHECK(m.factors.empty());
  CHECK(m.kernels.empty());
}

TEST_CASE("w_free_expansion order 1 of a charged field is a single -i bilinear") {
  auto state = w_free_expansion({kChargedBose}, 1);
  REQUIRE(state.monomials().size() == 1);
  const auto& m = state.monomials()[0];
  CHECK(m.scalar == Rational(-1));  // -i = -1 * i^1
  CHECK(m.i_power == 1);
  REQUIRE(m.factors.size() == 2);
  CHECK(m.factors[0].starred);
  CHECK(!m.factors[1].starred);
  CHECK(m.factors[0].block == m.factors[1].block);
  CHECK(m.kernels.size() == 1);
}

TEST_CASE("w_free_expansion order 2 carries the 1/2! and two kernels") {
  auto state = w_free_expansion({kChargedBose}, 2);
  REQUIRE(state.monomials().size() == 1);
  const auto& m = state.monomials()[0];
  CHECK(m.scalar == Rational(-1, 2));  // (-i)^2 / 2! = -1/2
  CHECK(m.i_power == 0);
  CHECK(m.factors.size() == 4);
  CHECK(m.kernels.size() == 2);
}

TEST_CASE("multi-field expansion sums the bilinears before exponentiation") {
  auto state = w_free_expansion({kChargedBose, kFermi}, 2);
  // compositions (2,0), (1,1), (0,2)
  CHECK(state.monomials().size() == 3);
}

TEST_CASE("matching a derivative against the exact factor gives the delta term") {
  FunctionalState state({kNeutralBose}, {});
  SourceMonomial m;
  m.factors.push_back({0, false, 0, -1, 0, std::string("x")});
  state.monomials().push_back(m);

  auto out = apply_derivative(state, SourceDerivative{0, false, "x", 1});
  REQUIRE(out.monomials().size() == 1);
  CHECK(out.monomials()[0].factors.empty());
  CHECK(out.monomials()[0].scalar == Rational(1));
}

TEST_CASE("passing a different-block factor records the exchange event") {
  // d/dJ [ J^(b1)(y) J^(b0)(x) ]: the match at x passes the b1 factor
  FunctionalState state({kNeutralBose}, {});
  SourceMonomial m;
  m.factors.push_back({0, false, 1, -1, 0, std::string("y")});
  m.factors.push_back({0, false, 0, -1, 0, std::string("x")});
  state.monomials().push_back(m);

  auto out = apply_derivative(state, SourceDerivative{0, false, "x", 1});
  REQUIRE(out.monomials().size() == 1);
  const auto& result = out.monomials()[0];
  REQUIRE(result.factors.size() == 1);
  CHECK(result.factors[0].point == std::string("y"));
  REQUIRE(result.events.size() == 1);
  CHECK(result.events[0].a == 0);
  CHECK(result.events[0].b == 1);
  CHECK(result.events[0].rule == sign_rule(Statistics::ParaBose));
  CHECK(result.scalar == Rational(1));
}

TEST_CASE("passing a same-block factor multiplies the numeric exchange sign") {
  // parafermi: d/d(eta) [ eta-bar^(b0)(y) eta^(b0)(x) ] picks up the -1
  FunctionalState state({kFermi}, {});
  SourceMonomial m;
  m.factors.push_back({0, true, 0, -1, 0, std::string("y")});
  m.factors.push_back({0, false, 0, -1, 0, std::string("x")});
  state.monomials().push_back(m);

  auto out = apply_derivative(state, SourceDerivative{0, false, "x", 1});
  REQUIRE(out.monomials().size() == 1);
  CHECK(out.monomials()[0].scalar == Rational(-1));
  CHECK(out.monomials()[0].events.empty());
}

TEST_CASE("a second derivative with nothing left to match annihilates") {
  FunctionalState state({kFermi}, {});
  SourceMonomial m;
  m.factors.push_back({0, false, 0, -1, 0, std::string("x")});
  state.monomials().push_back(m);

  auto once = apply_derivative(state, SourceDerivative{0, false, "x", 1});
  CHECK(once.monomials().size() == 1);
  auto twice = apply_derivative(once, SourceDerivative{0, false, "x", 2});
  CHECK(twice.monomials().empty());
}

TEST_CASE("grassmann squares vanish under canonicalization") {
  FunctionalState state({kFermi}, {});
  SourceMonomial m;
  m.factors.push_back({0, false, 0, -1, 0, std::string("x")});
  m.factors.push_back({0, false, 0, -1, 0, std::string("x")});
  state.monomials().push_back(m);
  state.normalize();
  CHECK(state.monomials().empty());
}

TEST_CASE("canonicalization is confluent under random pre-permutation") {
  std::mt19937 rng(555);
  std::vector<FieldSpec> fields{kNeutralBose, kFermi};
  for (int trial = 0; trial < 200; ++trial) {
    int len = std::uniform_int_distribution<int>(2, 8)(rng);
    SourceMonomial m;
    for (int i = 0; i < len; ++i) {
      SourceFactor f;
      f.field = std::uniform_int_distribution<int>(0, 1)(rng);
      f.starred = std::uniform_int_distribution<int>(0, 1)(rng) != 0;
      f.block = std::uniform_int_distribution<int>(0, 3)(rng);
      f.point = "x" + std::to_string(std::uniform_int_distribution<int>(1, 3)(rng));
      m.factors.push_back(std::move(f));
    }

    FunctionalState direct(fields, {});
    direct.monomials().push_back(m);
    direct.normalize();

    // apply a random sequence of adjacent transpositions by hand, tracking
    // the graded sign, then canonicalize and compare
    FunctionalState shuffled(fields, {});
    SourceMonomial s = m;
    int swaps = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int w = 0; w < swaps; ++w) {
      std::size_t i =
          static_cast<std::size_t>(std::uniform_int_distribution<int>(0, len - 2)(rng));
      SignRule rule = shuffled.rule_between(s.factors[i].field, s.factors[i + 1].field);
      if (s.factors[i].block == s.factors[i + 1].block)
        s.scalar *= Integer(rule.same);
      else
        s.events.push_back({std::min(s.factors[i].block, s.factors[i + 1].block),
                            std::max(s.factors[i].block, s.factors[i + 1].block), rule});
      std::swap(s.factors[i], s.factors[i + 1]);
    }
    shuffled.monomials().push_back(std::move(s));
    shuffled.normalize();

    REQUIRE(direct.monomials().size() == shuffled.monomials().size());
    if (!direct.monomials().empty()) {
      const auto& a = direct.monomials()[0];
      const auto& b = shuffled.monomials()[0];
      CHECK(a.scalar == b.scalar);
      CHECK(a.i_power == b.i_power);
      CHECK(a.factors == b.factors);
      REQUIRE(a.events.size() == b.events.size());
      for (std::size_t e = 0; e < a.events.size(); ++e) {
        CHECK(a.events[e].a == b.events[e].a);
        CHECK(a.events[e].b == b.events[e].b);
        CHECK(a.events[e].rule == b.events[e].rule);
      }
    }
  }
}

TEST_CASE("two-point neutral parabose through the generating functional") {
  auto result = genfun::n_point(field_product(kNeutralBose, {{false, "x2"}, {false, "x1"}}));
  REQUIRE(result.terms().size() == 1);
  CHECK(result.terms()[0].coefficient == poly({0, 1}));
  CHECK(result.terms()[0].i_power == 1);
  REQUIRE(result.terms()[0].factors.size() == 1);
  CHECK(result.terms()[0].factors[0].str() == "iDF(x1-x2)");
}

TEST_CASE("charged four-point through the generating functional") {
  auto result = genfun::n_point(
      field_product(kChargedBose, {{true, "x4"}, {true, "x3"}, {false, "x2"}, {false, "x1"}}));
  REQUIRE(result.terms().size() == 2);
  for (const auto& t : result.terms()) {
    REQUIRE(t.factors.size() == 2);
    std::string a = t.factors[0].str(), b = t.factors[1].str();
    if ((a == "iDF(x1-x3)" && b == "iDF(x2-x4)") || (a == "iDF(x2-x4)" && b == "iDF(x1-x3)"))
      CHECK(t.coefficient == poly({0, 2, -1}));
    else
      CHECK(t.coefficient == poly({0, 0, 1}));
  }
}

TEST_CASE("parafermi four-point reproduces the displayed relative sign") {
  auto result = genfun::n_point(
      field_product(kFermi, {{false, "x4"}, {false, "x3"}, {true, "x2"}, {true, "x1"}}));
  REQUIRE(result.terms().size() == 2);
  bool saw_plain = false, saw_crossed = false;
  for (const auto& t : result.terms()) {
    REQUIRE(t.factors.size() == 2);
    std::string a = t.factors[0].str(), b = t.factors[1].str();
    if ((a == "iSF(x3-x2)" && b == "iSF(x4-x1)") || (a == "iSF(x4-x1)" && b == "iSF(x3-x2)")) {
      CHECK(t.coefficient == poly({0, 0, 1}));
      saw_plain = true;
    } else {
      CHECK(t.coefficient == poly({0, -2, 1}));
      saw_crossed = true;
    }
  }
  CHECK(saw_plain);
  CHECK(saw_crossed);
}

TEST_CASE("series orders away from n/2 contribute nothing") {
  for (const FieldSpec& field : {kNeutralBose, kChargedBose}) {
    auto prod =
        field.charge == Charge::Neutral
            ? field_product(field, {{false, "x4"}, {false, "x3"}, {false, "x2"}, {false, "x1"}})
            : field_product(field, {{true, "x4"}, {true, "x3"}, {false, "x2"}, {false, "x1"}});
    CHECK(!genfun::n_point_at_order(prod, 2).is_zero());
    CHECK(genfun::n_point_at_order(prod, 1).is_zero());
    CHECK(genfun::n_point_at_order(prod, 3).is_zero());
  }
}

TEST_CASE("applying four derivatives to the order-2 expansion reproduces the 4-point") {
  auto prod =
      field_product(kNeutralBose, {{false, "x4"}, {false, "x3"}, {false, "x2"}, {false, "x1"}});
  CHECK(genfun::n_point(prod) == evaluate(prod));
}

TEST_CASE("odd products give the zero result") {
  auto prod = field_product(kNeutralBose, {{false, "x3"}, {false, "x2"}, {false, "x1"}});
  CHECK(genfun::n_point(prod).is_zero());
}

TEST_CASE("engine equivalence on randomized mixed products") {
  std::mt19937 rng(987654);
  int nontrivial = 0;
  for (int trial = 0; trial < 120; ++trial) {
    ProductSpec prod = testing::random_product(rng);
    CorrelatorResult canonical = evaluate(prod);
    CorrelatorResult functional = genfun::n_point(prod);
    CHECK(canonical == functional);
    if (!canonical.is_zero()) ++nontrivial;
  }
  CHECK(nontrivial > 40);  // the generator must not collapse to trivial cases
}
