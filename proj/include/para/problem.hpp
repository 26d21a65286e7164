#ifndef PARA_PROBLEM_HPP
#define PARA_PROBLEM_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "para/correlator.hpp"
#include "para/perturb.hpp"

namespace para::cli {

/// Parse failure with a position. `line` counts from 1 within the problem
/// file; expression errors carry the 1-based column inside the correlator
/// expression string and line 0.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };
  ParseError(Kind kind, int line, int column, const std::string& message)
      : std::runtime_error(message), kind(kind), line(line), column(column) {}
  Kind kind;
  int line;
  int column;
};

struct CrossCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Engine { Pairing, GenFun, Both };
enum class OutputFormat { Text, Json };

struct OracleConfig {
  int modes = 1;
  int cutoff = 4;
  friend bool operator==(const OracleConfig&, const OracleConfig&) = default;
};

/// Parsed problem file: field declarations, the correlator expression, and
/// the run options.
struct ProblemFile {
  std::vector<FieldSpec> fields;
  std::string correlator_expr;
  ProductMode mode = ProductMode::TimeOrdered;
  Engine engine = Engine::Both;
  std::optional<int> p;
  std::optional<OracleConfig> oracle;
  std::optional<perturb::VertexSpec> vertex;
  std::vector<std::tuple<std::string, std::string, int, int>> relative_rule_entries;
  std::size_t max_dimension = std::size_t(1) << 16;

  /// Expression resolved against the declarations.
  ProductSpec product() const;
};

bool operator==(const ProblemFile& a, const ProblemFile& b);

ProblemFile parse_problem(const std::string& text);
std::string emit_problem(const ProblemFile& problem);

struct OracleComparison {
  int p = 0;
  int modes = 0;
  int cutoff = 0;
  double matrix_value = 0.0;
  Integer symbolic_value;
  bool ok = true;
};

struct ResultDocument {
  std::string engine;  // provenance: pairing | genfun | both
  ProductMode mode = ProductMode::TimeOrdered;
  std::optional<int> p;
  CorrelatorResult result;
  bool cross_checked = false;
  bool cross_check_ok = true;
  std::optional<OracleComparison> oracle;
};

bool operator==(const ResultDocument& a, const ResultDocument& b);

/// Dispatches the problem to the engines, cross-checks when asked, runs the
/// Fock oracle for operator strings with concrete p, and never weakens a
/// mismatch: failures are recorded in the document.
ResultDocument run(const ProblemFile& problem);

std::string emit(const ResultDocument& doc, OutputFormat format);
ResultDocument parse_result_document(const std::string& json_text);

}  // namespace para::cli

#endif
