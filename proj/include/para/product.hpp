#ifndef PARA_PRODUCT_HPP
#define PARA_PRODUCT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "para/statistics.hpp"

namespace para {

enum class Charge { Neutral, Charged };
enum class KernelKind { ScalarFeynman, FermionFeynman };

/// A declared field species. Parafermi fields always contract through the
/// fermionic kernel and only against their adjoints.
struct FieldSpec {
  std::string name;
  Statistics stat = Statistics::ParaBose;
  Charge charge = Charge::Neutral;

  KernelKind kernel() const {
    return stat == Statistics::ParaFermi ? KernelKind::FermionFeynman
                                         : KernelKind::ScalarFeynman;
  }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

enum class OpKind { TimeOrderedField, Annihilator, Creator };

/// One factor of the product under the vacuum expectation. `label` is a
/// spacetime point in time-ordered mode and a mode label in operator mode.
struct Insertion {
  int field = 0;  // index into ProductSpec::fields
  bool adjoint = false;
  std::string label;
  OpKind op_kind = OpKind::TimeOrderedField;
  std::optional<GreenIndex> green;  // fixed component, when working at Eq.-(11) level
};

enum class ProductMode { TimeOrdered, OperatorString };

/// Relative exchange rules between contraction blocks of two distinct
/// fields. The built-in table uses the parabose rule unless both fields are
/// parafermi; explicit entries override it.
class RelativeRules {
 public:
  void set(const std::string& a, const std::string& b, SignRule rule) {
    table_[key(a, b)] = rule;
  }
  void disable_defaults() { use_defaults_ = false; }

  SignRule lookup(const FieldSpec& a, const FieldSpec& b) const {
    auto it = table_.find(key(a.name, b.name));
    if (it != table_.end()) return it->second;
    if (!use_defaults_)
      throw std::invalid_argument("no relative exchange rule declared for field pair " + a.name +
                                  ", " + b.name);
    if (a.stat == Statistics::ParaFermi && b.stat == Statistics::ParaFermi)
      return sign_rule(Statistics::ParaFermi);
    return sign_rule(Statistics::ParaBose);
  }

  const std::map<std::pair<std::string, std::string>, SignRule>& entries() const {
    return table_;
  }

 private:
  static std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  }
  std::map<std::pair<std::string, std::string>, SignRule> table_;
  bool use_defaults_ = true;
};

/// Ordered list of insertions; position 1 is the leftmost factor.
struct ProductSpec {
  std::vector<FieldSpec> fields;
  std::vector<Insertion> insertions;
  ProductMode mode = ProductMode::TimeOrdered;
  RelativeRules relative_rules;

  std::size_t size() const { return insertions.size(); }
  const FieldSpec& field_of(const Insertion& ins) const { return fields.at(ins.field); }

  /// Exchange rule between the contractions of insertions a and b.
  SignRule rule_between(int field_a, int field_b) const {
    const FieldSpec& fa = fields.at(field_a);
    const FieldSpec& fb = fields.at(field_b);
    if (field_a == field_b) return sign_rule(fa.stat);
    return relative_rules.lookup(fa, fb);
  }

  void validate() const {
    for (const auto& ins : insertions) {
      if (ins.field < 0 || static_cast<std::size_t>(ins.field) >= fields.size())
        throw std::invalid_argument("insertion references undeclared field");
      const bool operator_kind = ins.op_kind != OpKind::TimeOrderedField;
      if ((mode == ProductMode::OperatorString) != operator_kind)
        throw std::invalid_argument("insertion operator kind does not match product mode");
    }
  }
};

}  // namespace para

#endif
