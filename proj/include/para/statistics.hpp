#ifndef PARA_STATISTICS_HPP
#define PARA_STATISTICS_HPP

#include <string>

namespace para {

enum class Statistics { ParaBose, ParaFermi };

/// Sign picked up when two Green components are exchanged: +-(2*delta - 1)
/// with the upper sign for parabose, lower for parafermi.
inline int exchange_sign(Statistics stat, bool same_index) {
  const int base = same_index ? 1 : -1;
  return stat == Statistics::ParaBose ? base : -base;
}

/// Exchange signs between two contraction blocks as a function of whether
/// their Green indices coincide.
struct SignRule {
  int same = 1;
  int different = -1;

  int sign(bool same_index) const { return same_index ? same : different; }
  friend bool operator==(const SignRule&, const SignRule&) = default;
};

inline SignRule sign_rule(Statistics stat) {
  return SignRule{exchange_sign(stat, true), exchange_sign(stat, false)};
}

/// Green-ansatz component label, 1-based. Valid range 1..p for concrete p.
struct GreenIndex {
  int value = 1;
  friend bool operator==(const GreenIndex&, const GreenIndex&) = default;
};

inline std::string to_string(Statistics stat) {
  return stat == Statistics::ParaBose ? "parabose" : "parafermi";
}

}  // namespace para

#endif
