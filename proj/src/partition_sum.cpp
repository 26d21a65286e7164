#include "para/partition_sum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace para {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

struct Reduced {
  int num_classes = 0;
  bool infeasible = false;
  int constant_sign = 1;                  // events internal to one class
  std::vector<CrossingEvent> events;      // endpoints in class ids
  std::vector<std::pair<int, int>> distinct;
};

Reduced reduce(int num_blocks, const std::vector<CrossingEvent>& events,
               const BlockConstraints& constraints) {
  DisjointSets ds(num_blocks);
  for (auto [a, b] : constraints.same) ds.unite(a, b);

  std::vector<int> class_of(num_blocks, -1);
  Reduced r;
  for (int i = 0; i < num_blocks; ++i) {
    int root = ds.find(i);
    if (class_of[root] < 0) class_of[root] = r.num_classes++;
    class_of[i] = class_of[root];
  }
  for (auto [a, b] : constraints.distinct) {
    int ca = class_of.at(a), cb = class_of.at(b);
    if (ca == cb) {
      r.infeasible = true;
      return r;
    }
    r.distinct.emplace_back(ca, cb);
  }
  for (const auto& e : events) {
    int ca = class_of.at(e.a), cb = class_of.at(e.b);
    if (ca == cb)
      r.constant_sign *= e.rule.same;
    else
      r.events.push_back({ca, cb, e.rule});
  }
  return r;
}

}  // namespace

namespace {

// Restricted-growth-string walk over set partitions of m elements.
void for_each_partition(int level, int max_used, std::vector<int>& rgs,
                        const std::function<void(const std::vector<int>&, int)>& visit) {
  const int m = static_cast<int>(rgs.size());
  if (level == m) {
    visit(rgs, max_used + 1);
    return;
  }
  for (int c = 0; c <= max_used + 1; ++c) {
    rgs[level] = c;
    for_each_partition(level + 1, std::max(max_used, c), rgs, visit);
  }
}

}  // namespace

PPolynomial partition_sign_sum(int num_blocks, const std::vector<CrossingEvent>& events,
                               const BlockConstraints& constraints) {
  if (num_blocks < 0) throw std::invalid_argument("partition_sign_sum: negative block count");
  Reduced r = reduce(num_blocks, events, constraints);
  if (r.infeasible) return PPolynomial{};
  if (r.num_classes == 0) return PPolynomial{Integer(r.constant_sign)};

  PPolynomial total;
  std::vector<int> rgs(static_cast<std::size_t>(r.num_classes), 0);
  for_each_partition(0, -1, rgs, [&](const std::vector<int>& part, int num_classes) {
    for (auto [a, b] : r.distinct)
      if (part[a] == part[b]) return;
    int sign = r.constant_sign;
    for (const auto& e : r.events) sign *= e.rule.sign(part[e.a] == part[e.b]);
    PPolynomial term = falling_factorial(num_classes);
    total += sign < 0 ? -term : term;
  });
  return total;
}

Integer assignment_sign_sum(int num_blocks, const std::vector<CrossingEvent>& events,
                            const BlockConstraints& constraints, const Integer& p0) {
  if (p0 < 0) throw std::invalid_argument("assignment_sign_sum: order must be non-negative");
  const long p = p0.convert_to<long>();
  std::vector<long> idx(static_cast<std::size_t>(num_blocks), 1);
  if (num_blocks == 0) return Integer(1);
  if (p == 0) return Integer(0);

  Integer total = 0;
  while (true) {
    bool ok = true;
    for (auto [a, b] : constraints.same)
      if (idx[a] != idx[b]) ok = false;
    for (auto [a, b] : constraints.distinct)
      if (idx[a] == idx[b]) ok = false;
    if (ok) {
      int sign = 1;
      for (const auto& e : events) sign *= e.rule.sign(idx[e.a] == idx[e.b]);
      total += sign;
    }
    int pos = num_blocks - 1;
    while (pos >= 0 && idx[pos] == p) idx[pos--] = 1;
    if (pos < 0) break;
    ++idx[pos];
  }
  return total;
}

}  // namespace para
