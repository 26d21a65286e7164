#ifndef PARA_PARTITION_SUM_HPP
#define PARA_PARTITION_SUM_HPP

#include <utility>
#include <vector>

#include "para/ppoly.hpp"
#include "para/statistics.hpp"

namespace para {

/// One crossing between the contractions carrying blocks a and b. The rule
/// resolves to `same` when the blocks receive equal Green indices and to
/// `different` otherwise.
struct CrossingEvent {
  int a = 0;
  int b = 0;
  SignRule rule;
};

/// Vertex-induced restrictions on how blocks may share Green indices.
struct BlockConstraints {
  std::vector<std::pair<int, int>> same;      // blocks forced to one index
  std::vector<std::pair<int, int>> distinct;  // blocks forced to differ
};

/// Sum over set partitions pi of the blocks of
///   falling_factorial(|pi|) * prod_events sign(event, pi),
/// which is the exact Green-index sum of the crossing signs: partitions group
/// blocks by shared index value and the falling factorial counts injective
/// value choices. Constraints prune the partitions.
PPolynomial partition_sign_sum(int num_blocks, const std::vector<CrossingEvent>& events,
                               const BlockConstraints& constraints = {});

/// Brute-force reference at concrete order p0: sums the sign products over
/// every assignment of {1..p0} to the blocks. Exponential; test oracle and
/// cross-check only.
Integer assignment_sign_sum(int num_blocks, const std::vector<CrossingEvent>& events,
                            const BlockConstraints& constraints, const Integer& p0);

}  // namespace para

#endif
