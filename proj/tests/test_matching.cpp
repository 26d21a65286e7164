#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "para/matching.hpp"
#include "para/partition_sum.hpp"
#include "oracle_helpers.hpp"

using namespace para;

namespace {

ProductSpec neutral_parabose(int n) {
  ProductSpec prod;
  prod.fields.push_back({"phi", Statistics::ParaBose, Charge::Neutral});
  for (int i = 0; i < n; ++i)
    prod.insertions.push_back({0, false, "x" + std::to_string(n - i), OpKind::TimeOrderedField, {}});
  return prod;
}

}  // namespace

TEST_CASE("two neutral insertions have the single pairing") {
  auto ms = enumerate_matchings(neutral_parabose(2));
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].pairs == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("charged four-point keeps exactly the adjoint-connecting pairings") {
  // positions left to right: phi*(x4) phi*(x3) phi(x2) phi(x1)
  ProductSpec prod;
  prod.fields.push_back({"phi", Statistics::ParaBose, Charge::Charged});
  prod.insertions.push_back({0, true, "x4", OpKind::TimeOrderedField, {}});
  prod.insertions.push_back({0, true, "x3", OpKind::TimeOrderedField, {}});
  prod.insertions.push_back({0, false, "x2", OpKind::TimeOrderedField, {}});
  prod.insertions.push_back({0, false, "x1", OpKind::TimeOrderedField, {}});
  auto ms = enumerate_matchings(prod);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].pairs == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(ms[1].pairs == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
}

TEST_CASE("odd-length products have no matchings") {
  CHECK(enumerate_matchings(neutral_parabose(3)).empty());
}

TEST_CASE("crossing edge structure") {
  Matching nested{{{1, 4}, {2, 3}}};
  Matching disjoint{{{1, 2}, {3, 4}}};
  Matching crossed{{{1, 3}, {2, 4}}};
  CHECK(crossing_edges(disjoint).edges.empty());
  CHECK(crossing_edges(nested).edges.empty());
  REQUIRE(crossing_edges(crossed).edges.size() == 1);
  CHECK(crossing_edges(crossed).edges[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("neutral 2m-point has (2m-1)!! matchings") {
  for (int m = 1; m <= 4; ++m) {
    auto ms = enumerate_matchings(neutral_parabose(2 * m));
    CHECK(static_cast<long>(ms.size()) == double_factorial_odd(2 * m - 1));
  }
}

TEST_CASE("operator strings contract annihilators with creators to the right") {
  ProductSpec prod;
  prod.fields.push_back({"a", Statistics::ParaBose, Charge::Neutral});
  prod.mode = ProductMode::OperatorString;
  prod.insertions.push_back({0, false, "k", OpKind::Annihilator, {}});
  prod.insertions.push_back({0, true, "l", OpKind::Creator, {}});
  CHECK(enumerate_matchings(prod).size() == 1);

  std::swap(prod.insertions[0], prod.insertions[1]);  // a+_k a_l: nothing to contract
  CHECK(enumerate_matchings(prod).empty());
}

TEST_CASE("fixed Green components only contract on equal indices") {
  ProductSpec prod = neutral_parabose(2);
  prod.insertions[0].green = GreenIndex{1};
  prod.insertions[1].green = GreenIndex{2};
  CHECK(enumerate_matchings(prod).empty());
  prod.insertions[1].green = GreenIndex{1};
  CHECK(enumerate_matchings(prod).size() == 1);
}

TEST_CASE("permutation parity equals crossing-count parity") {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& matching : enumerate_matchings(neutral_parabose(2 * m))) {
      int crossings = static_cast<int>(crossing_edges(matching).edges.size());
      CHECK(testing::permutation_parity(matching) == (crossings % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("partition sum agrees with raw assignment enumeration") {
  std::mt19937 rng(20240602);
  for (int trial = 0; trial < 60; ++trial) {
    int blocks = std::uniform_int_distribution<int>(1, 5)(rng);
    int num_events = std::uniform_int_distribution<int>(0, blocks * 2)(rng);
    std::vector<CrossingEvent> events;
    for (int e = 0; e < num_events; ++e) {
      int a = std::uniform_int_distribution<int>(0, blocks - 1)(rng);
      int b = std::uniform_int_distribution<int>(0, blocks - 1)(rng);
      if (a == b) continue;
      SignRule rule = std::uniform_int_distribution<int>(0, 1)(rng)
                          ? sign_rule(Statistics::ParaBose)
                          : sign_rule(Statistics::ParaFermi);
      events.push_back({a, b, rule});
    }
    BlockConstraints cs;
    if (blocks >= 2 && trial % 3 == 0) cs.distinct.emplace_back(0, 1);
    if (blocks >= 3 && trial % 4 == 0) cs.same.emplace_back(1, 2);

    PPolynomial poly = partition_sign_sum(blocks, events, cs);
    CHECK(poly.degree() <= blocks);
    for (int p0 = 0; p0 <= blocks + 1; ++p0)
      CHECK(ppoly_eval(poly, Integer(p0)) == assignment_sign_sum(blocks, events, cs, Integer(p0)));
  }
}
