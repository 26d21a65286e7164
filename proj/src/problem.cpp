#include "para/problem.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "para/fock.hpp"
#include "para/genfun.hpp"

namespace para::cli {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail_expr(int column, ParseError::Kind kind, const std::string& message) {
  throw ParseError(kind, 0, column, "correlator expression, column " + std::to_string(column) +
                                        ": " + message);
}

int find_field(const std::vector<FieldSpec>& fields, const std::string& name) {
  for (std::size_t i = 0; i < fields.size(); ++i)
    if (fields[i].name == name) return static_cast<int>(i);
  return -1;
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> split_tokens(const std::string& expr) {
  std::vector<Token> words;
  std::size_t i = 0;
  while (i < expr.size()) {
    if (std::isspace(static_cast<unsigned char>(expr[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < expr.size() && !std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    words.push_back({expr.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return words;
}

Insertion parse_time_ordered_word(const std::vector<FieldSpec>& fields, const Token& word) {
  const std::string& text = word.text;
  std::size_t i = 0;
  while (i < text.size() && ident_char(text[i])) ++i;
  if (i == 0) fail_expr(word.column, ParseError::Kind::Syntax, "expected field name");
  std::string name = text.substr(0, i);

  Insertion ins;
  int field = find_field(fields, name);
  if (field < 0 && name.size() > 3 && name.substr(name.size() - 3) == "bar") {
    int base = find_field(fields, name.substr(0, name.size() - 3));
    if (base >= 0 && fields[static_cast<std::size_t>(base)].stat == Statistics::ParaFermi) {
      field = base;
      ins.adjoint = true;
    }
  }
  if (field < 0)
    fail_expr(word.column, ParseError::Kind::Semantic, "undeclared field '" + name + "'");
  ins.field = field;

  if (i < text.size() && text[i] == '*') {
    if (ins.adjoint)
      fail_expr(word.column + static_cast<int>(i), ParseError::Kind::Syntax,
                "'*' after an already-adjoint name");
    ins.adjoint = true;
    ++i;
  }
  if (i >= text.size() || text[i] != '(')
    fail_expr(word.column + static_cast<int>(i), ParseError::Kind::Syntax,
              "expected '(' after field name");
  ++i;
  std::size_t label_start = i;
  while (i < text.size() && text[i] != ')') {
    if (!ident_char(text[i]))
      fail_expr(word.column + static_cast<int>(i), ParseError::Kind::Syntax,
                "invalid character in point label");
    ++i;
  }
  if (i >= text.size())
    fail_expr(word.column + static_cast<int>(i), ParseError::Kind::Syntax,
              "missing closing ')'");
  if (i == label_start)
    fail_expr(word.column + static_cast<int>(i), ParseError::Kind::Syntax, "empty point label");
  ins.label = text.substr(label_start, i - label_start);
  ++i;
  if (i != text.size())
    fail_expr(word.column + static_cast<int>(i), ParseError::Kind::Syntax,
              "unexpected trailing characters");
  ins.op_kind = OpKind::TimeOrderedField;
  return ins;
}

Insertion parse_operator_word(const std::vector<FieldSpec>& fields, const Token& word) {
  const std::string& text = word.text;
  // longest declared field name that prefixes the word
  int field = -1;
  std::size_t best = 0;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string& name = fields[i].name;
    if (name.size() > best && text.size() > name.size() && text.compare(0, name.size(), name) == 0) {
      field = static_cast<int>(i);
      best = name.size();
    }
  }
  if (field < 0)
    fail_expr(word.column, ParseError::Kind::Semantic,
              "no declared field matches operator token '" + text + "'");
  std::size_t i = best;
  Insertion ins;
  ins.field = field;
  ins.op_kind = OpKind::Annihilator;
  if (text.compare(i, 3, "dag") == 0) {
    ins.op_kind = OpKind::Creator;
    ins.adjoint = true;
    i += 3;
  }
  if (i >= text.size() || text[i] != '_')
    fail_expr(word.column + static_cast<int>(i), ParseError::Kind::Syntax,
              "expected '_' before mode label");
  ++i;
  if (i >= text.size())
    fail_expr(word.column + static_cast<int>(i), ParseError::Kind::Syntax, "empty mode label");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!ident_char(text[j]))
      fail_expr(word.column + static_cast<int>(j), ParseError::Kind::Syntax,
                "invalid character in mode label");
  ins.label = text.substr(i);
  return ins;
}

}  // namespace

ProductSpec ProblemFile::product() const {
  ProductSpec prod;
  prod.fields = fields;
  prod.mode = mode;
  for (const auto& [a, b, same, diff] : relative_rule_entries)
    prod.relative_rules.set(a, b, SignRule{same, diff});

  std::set<std::string> seen_points;
  for (const Token& word : split_tokens(correlator_expr)) {
    Insertion ins = mode == ProductMode::OperatorString
                        ? parse_operator_word(fields, word)
                        : parse_time_ordered_word(fields, word);
    if (mode == ProductMode::TimeOrdered && !seen_points.insert(ins.label).second)
      fail_expr(word.column, ParseError::Kind::Semantic,
                "duplicate point label '" + ins.label + "'");
    prod.insertions.push_back(std::move(ins));
  }
  if (prod.insertions.empty())
    throw ParseError(ParseError::Kind::Semantic, 0, 1, "correlator expression is empty");
  return prod;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  auto vertex_tuple = [](const std::optional<perturb::VertexSpec>& v) {
    if (!v) return std::tuple(false, 0, -1, 0, std::vector<int>{}, -1, -1, std::string(),
                              std::string());
    return std::tuple(true, static_cast<int>(v->kind), v->field, v->degree, v->nested_fields,
                      v->fermi_field, v->bose_field, v->coupling, v->point);
  };
  return a.fields == b.fields && a.correlator_expr == b.correlator_expr && a.mode == b.mode &&
         a.engine == b.engine && a.p == b.p &&
         a.oracle == b.oracle && vertex_tuple(a.vertex) == vertex_tuple(b.vertex) &&
         a.relative_rule_entries == b.relative_rule_entries &&
         a.max_dimension == b.max_dimension;
}

namespace {

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

[[noreturn]] void fail_file(const std::string& message) {
  throw ParseError(ParseError::Kind::Semantic, 1, 1, message);
}

const ordered_json& expect(const ordered_json& j, const std::string& key) {
  if (!j.contains(key)) fail_file("missing required key '" + key + "'");
  return j.at(key);
}

std::string expect_string(const ordered_json& j, const std::string& key) {
  const auto& v = expect(j, key);
  if (!v.is_string()) fail_file("key '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseError::Kind::Syntax, line_of_offset(text, e.byte), 1,
                     std::string("JSON syntax error: ") + e.what());
  }
  if (!j.is_object()) fail_file("problem file must be a JSON object");

  ProblemFile pf;
  const auto& jfields = expect(j, "fields");
  if (!jfields.is_array() || jfields.empty()) fail_file("'fields' must be a non-empty array");
  for (const auto& jf : jfields) {
    FieldSpec f;
    f.name = expect_string(jf, "name");
    if (f.name.empty() || !std::all_of(f.name.begin(), f.name.end(), ident_char))
      fail_file("invalid field name '" + f.name + "'");
    std::string stat = expect_string(jf, "statistics");
    if (stat == "parabose")
      f.stat = Statistics::ParaBose;
    else if (stat == "parafermi")
      f.stat = Statistics::ParaFermi;
    else
      fail_file("unknown statistics '" + stat + "' (parabose | parafermi)");
    std::string charge = jf.contains("charge") ? jf.at("charge").get<std::string>() : "neutral";
    if (charge == "neutral")
      f.charge = Charge::Neutral;
    else if (charge == "charged")
      f.charge = Charge::Charged;
    else
      fail_file("unknown charge '" + charge + "' (neutral | charged)");
    if (find_field(pf.fields, f.name) >= 0) fail_file("duplicate field name '" + f.name + "'");
    pf.fields.push_back(std::move(f));
  }

  if (j.contains("mode")) {
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "time_ordered")
      pf.mode = ProductMode::TimeOrdered;
    else if (mode == "operator_string")
      pf.mode = ProductMode::OperatorString;
    else
      fail_file("unknown mode '" + mode + "' (time_ordered | operator_string)");
  }

  pf.correlator_expr = expect_string(j, "correlator");

  if (j.contains("engine")) {
    std::string engine = j.at("engine").get<std::string>();
    if (engine == "pairing")
      pf.engine = Engine::Pairing;
    else if (engine == "genfun")
      pf.engine = Engine::GenFun;
    else if (engine == "both")
      pf.engine = Engine::Both;
    else
      fail_file("unknown engine '" + engine + "' (pairing | genfun | both)");
  }

  if (j.contains("p")) {
    if (!j.at("p").is_number_integer() || j.at("p").get<long long>() < 1)
      fail_file("'p' must be a positive integer");
    pf.p = static_cast<int>(j.at("p").get<long long>());
  }

  if (j.contains("oracle")) {
    const auto& jo = j.at("oracle");
    OracleConfig oc;
    if (jo.contains("modes")) oc.modes = jo.at("modes").get<int>();
    if (jo.contains("cutoff")) oc.cutoff = jo.at("cutoff").get<int>();
    if (oc.modes < 1) fail_file("oracle 'modes' must be >= 1");
    if (oc.cutoff < 1) fail_file("oracle 'cutoff' must be >= 1");
    pf.oracle = oc;
  }

  if (j.contains("relative_rules")) {
    for (const auto& jr : j.at("relative_rules")) {
      std::string a = jr.at("fields").at(0).get<std::string>();
      std::string b = jr.at("fields").at(1).get<std::string>();
      if (find_field(pf.fields, a) < 0 || find_field(pf.fields, b) < 0)
        fail_file("relative rule references undeclared field");
      int same = jr.at("same").get<int>();
      int diff = jr.at("different").get<int>();
      if (std::abs(same) != 1 || std::abs(diff) != 1)
        fail_file("relative rule signs must be +1 or -1");
      if (a > b) std::swap(a, b);
      pf.relative_rule_entries.emplace_back(a, b, same, diff);
    }
    std::sort(pf.relative_rule_entries.begin(), pf.relative_rule_entries.end());
  }

  if (j.contains("vertex")) {
    const auto& jv = j.at("vertex");
    perturb::VertexSpec v;
    std::string kind = expect_string(jv, "kind");
    if (kind == "diagonal_power") {
      v.kind = perturb::VertexSpec::Kind::DiagonalPower;
      v.field = find_field(pf.fields, expect_string(jv, "field"));
      if (v.field < 0) fail_file("vertex references undeclared field");
      v.degree = jv.contains("degree") ? jv.at("degree").get<int>() : 1;
      if (v.degree < 1) fail_file("vertex degree must be >= 1");
    } else if (kind == "nested_all_different") {
      v.kind = perturb::VertexSpec::Kind::NestedAllDifferent;
      for (const auto& jn : expect(jv, "fields")) {
        int f = find_field(pf.fields, jn.get<std::string>());
        if (f < 0) fail_file("vertex references undeclared field");
        v.nested_fields.push_back(f);
      }
      if (v.nested_fields.empty()) fail_file("nested vertex needs at least one field");
    } else if (kind == "yukawa") {
      v.kind = perturb::VertexSpec::Kind::Yukawa;
      v.fermi_field = find_field(pf.fields, expect_string(jv, "fermi"));
      v.bose_field = find_field(pf.fields, expect_string(jv, "bose"));
      if (v.fermi_field < 0 || v.bose_field < 0) fail_file("vertex references undeclared field");
      if (pf.fields[static_cast<std::size_t>(v.fermi_field)].stat != Statistics::ParaFermi)
        fail_file("yukawa 'fermi' field must be parafermi");
      if (pf.fields[static_cast<std::size_t>(v.bose_field)].stat != Statistics::ParaBose)
        fail_file("yukawa 'bose' field must be parabose");
    } else {
      fail_file("unknown vertex kind '" + kind + "'");
    }
    if (jv.contains("coupling")) v.coupling = jv.at("coupling").get<std::string>();
    if (jv.contains("point")) v.point = jv.at("point").get<std::string>();
    pf.vertex = std::move(v);
  }

  if (j.contains("max_dim")) {
    long long lim = j.at("max_dim").get<long long>();
    if (lim < 2) fail_file("'max_dim' must be >= 2");
    pf.max_dimension = static_cast<std::size_t>(lim);
  }

  pf.product();  // validates expression and declarations
  return pf;
}

std::string emit_problem(const ProblemFile& pf) {
  ordered_json j;
  j["fields"] = ordered_json::array();
  for (const auto& f : pf.fields) {
    ordered_json jf;
    jf["name"] = f.name;
    jf["statistics"] = to_string(f.stat);
    jf["charge"] = f.charge == Charge::Charged ? "charged" : "neutral";
    j["fields"].push_back(std::move(jf));
  }
  j["mode"] = pf.mode == ProductMode::OperatorString ? "operator_string" : "time_ordered";
  j["correlator"] = pf.correlator_expr;
  j["engine"] = pf.engine == Engine::Pairing  ? "pairing"
                : pf.engine == Engine::GenFun ? "genfun"
                                              : "both";
  if (pf.p) j["p"] = *pf.p;
  if (pf.oracle) {
    j["oracle"] = ordered_json{{"modes", pf.oracle->modes}, {"cutoff", pf.oracle->cutoff}};
  }
  if (!pf.relative_rule_entries.empty()) {
    j["relative_rules"] = ordered_json::array();
    for (const auto& [a, b, same, diff] : pf.relative_rule_entries)
      j["relative_rules"].push_back(
          ordered_json{{"fields", {a, b}}, {"same", same}, {"different", diff}});
  }
  if (pf.vertex) {
    const auto& v = *pf.vertex;
    ordered_json jv;
    switch (v.kind) {
      case perturb::VertexSpec::Kind::DiagonalPower:
        jv["kind"] = "diagonal_power";
        jv["field"] = pf.fields.at(static_cast<std::size_t>(v.field)).name;
        jv["degree"] = v.degree;
        break;
      case perturb::VertexSpec::Kind::NestedAllDifferent: {
        jv["kind"] = "nested_all_different";
        jv["fields"] = ordered_json::array();
        for (int f : v.nested_fields)
          jv["fields"].push_back(pf.fields.at(static_cast<std::size_t>(f)).name);
        break;
      }
      case perturb::VertexSpec::Kind::Yukawa:
        jv["kind"] = "yukawa";
        jv["fermi"] = pf.fields.at(static_cast<std::size_t>(v.fermi_field)).name;
        jv["bose"] = pf.fields.at(static_cast<std::size_t>(v.bose_field)).name;
        break;
    }
    jv["coupling"] = v.coupling;
    jv["point"] = v.point;
    j["vertex"] = std::move(jv);
  }
  if (pf.max_dimension != (std::size_t(1) << 16)) j["max_dim"] = pf.max_dimension;
  return j.dump(2) + "\n";
}

namespace {

Integer evaluate_operator_term_at(const ResultTerm& term, int p) {
  for (const auto& f : term.factors) {
    if (f.kind != KernelFactor::Kind::Kronecker)
      throw std::logic_error("operator-string term with a propagator factor");
    // numeric mode labels: delta vanishes between distinct modes
    if (f.arg_a != f.arg_b) {
      try {
        if (std::stol(f.arg_a) == std::stol(f.arg_b)) continue;
      } catch (const std::exception&) {
      }
      return Integer(0);
    }
  }
  return ppoly_eval(term.coefficient, Integer(p));
}

OracleComparison run_oracle(const ProblemFile& pf, const ProductSpec& product,
                            const CorrelatorResult& symbolic) {
  if (pf.mode != ProductMode::OperatorString)
    fail_file("the Fock oracle applies to operator_string problems only");
  if (!pf.p) fail_file("the Fock oracle needs a concrete p");

  int field = product.insertions.front().field;
  for (const auto& ins : product.insertions)
    if (ins.field != field) fail_file("the Fock oracle supports a single operator species");

  fock::FockConfig cfg;
  cfg.stat = product.fields.at(static_cast<std::size_t>(field)).stat;
  cfg.p = *pf.p;
  cfg.modes = pf.oracle->modes;
  cfg.bose_cutoff = pf.oracle->cutoff;
  cfg.max_dimension = pf.max_dimension;

  std::vector<fock::OpSpec> string;
  for (const auto& ins : product.insertions) {
    int mode = 0;
    try {
      mode = std::stoi(ins.label);
    } catch (const std::exception&) {
      fail_file("oracle mode labels must be integers, got '" + ins.label + "'");
    }
    if (mode < 1 || mode > cfg.modes)
      fail_file("mode label " + ins.label + " outside 1.." + std::to_string(cfg.modes));
    string.push_back({ins.op_kind == OpKind::Creator, mode});
  }

  OracleComparison cmp;
  cmp.p = cfg.p;
  cmp.modes = cfg.modes;
  cmp.cutoff = cfg.bose_cutoff;
  const std::complex<double> value = fock::vev(cfg, string);
  cmp.matrix_value = value.real();
  for (const auto& term : symbolic.terms())
    cmp.symbolic_value += evaluate_operator_term_at(term, cfg.p);
  const double delta =
      std::abs(value - std::complex<double>(cmp.symbolic_value.convert_to<double>(), 0.0));
  cmp.ok = delta <= 1e-9;
  return cmp;
}

}  // namespace

ResultDocument run(const ProblemFile& problem) {
  const ProductSpec product = problem.product();
  ResultDocument doc;
  doc.mode = problem.mode;
  doc.p = problem.p;

  if (problem.vertex) {
    doc.engine = "pairing";
    doc.result = perturb::first_order_correction(product, *problem.vertex);
  } else {
    Engine engine = problem.engine;
    if (problem.mode == ProductMode::OperatorString) engine = Engine::Pairing;
    switch (engine) {
      case Engine::Pairing:
        doc.engine = "pairing";
        doc.result = evaluate(product);
        break;
      case Engine::GenFun:
        doc.engine = "genfun";
        doc.result = genfun::n_point(product);
        break;
      case Engine::Both: {
        doc.engine = "both";
        doc.result = evaluate(product);
        CorrelatorResult other = genfun::n_point(product);
        doc.cross_checked = true;
        doc.cross_check_ok = doc.result == other;
        break;
      }
    }
  }

  if (problem.oracle && !problem.vertex) doc.oracle = run_oracle(problem, product, doc.result);
  return doc;
}

namespace {

long long to_longlong(const Integer& v) {
  if (v > Integer(std::numeric_limits<long long>::max()) ||
      v < Integer(std::numeric_limits<long long>::min()))
    throw std::overflow_error("coefficient too large for JSON output");
  return v.convert_to<long long>();
}

std::string kind_name(KernelFactor::Kind kind) {
  switch (kind) {
    case KernelFactor::Kind::ScalarFeynman:
      return "DF";
    case KernelFactor::Kind::FermionFeynman:
      return "SF";
    case KernelFactor::Kind::Kronecker:
      return "delta";
  }
  return {};
}

KernelFactor::Kind kind_of_name(const std::string& name) {
  if (name == "DF") return KernelFactor::Kind::ScalarFeynman;
  if (name == "SF") return KernelFactor::Kind::FermionFeynman;
  if (name == "delta") return KernelFactor::Kind::Kronecker;
  throw std::invalid_argument("unknown kernel kind '" + name + "'");
}

std::string text_of(const ResultDocument& doc) {
  std::ostringstream os;
  if (doc.result.is_zero()) {
    os << "0";
  } else if (doc.p) {
    std::vector<std::string> parts;
    for (ResultTerm t : doc.result.terms()) {
      t.coefficient = PPolynomial(ppoly_eval(t.coefficient, Integer(*doc.p)));
      if (t.coefficient.is_zero()) continue;
      parts.push_back(t.str());
    }
    if (parts.empty()) {
      os << "0";
    } else {
      for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i];
    }
  } else {
    os << doc.result.str();
  }
  os << "\n";
  if (doc.cross_checked)
    os << "cross-check (pairing vs genfun): " << (doc.cross_check_ok ? "ok" : "MISMATCH") << "\n";
  if (doc.oracle) {
    const auto& o = *doc.oracle;
    os << "oracle (p=" << o.p << ", modes=" << o.modes << ", cutoff=" << o.cutoff
       << "): matrix=" << o.matrix_value << " symbolic=" << o.symbolic_value << " -> "
       << (o.ok ? "ok" : "MISMATCH") << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit(const ResultDocument& doc, OutputFormat format) {
  if (format == OutputFormat::Text) return text_of(doc);

  ordered_json j;
  j["engine"] = doc.engine;
  j["mode"] = doc.mode == ProductMode::OperatorString ? "operator_string" : "time_ordered";
  if (doc.p) j["p"] = *doc.p;
  j["terms"] = ordered_json::array();
  for (const auto& t : doc.result.terms()) {
    ordered_json jt;
    jt["coefficient"] = ordered_json::array();
    for (const auto& c : t.coefficient.coeffs()) jt["coefficient"].push_back(to_longlong(c));
    if (doc.p) jt["coefficient_at_p"] = to_longlong(ppoly_eval(t.coefficient, Integer(*doc.p)));
    jt["i_power"] = t.i_power;
    jt["factors"] = ordered_json::array();
    for (const auto& f : t.factors)
      jt["factors"].push_back(
          ordered_json{{"kernel", kind_name(f.kind)}, {"args", {f.arg_a, f.arg_b}}});
    if (t.coupling_power > 0) jt["coupling_power"] = t.coupling_power;
    if (!t.integration_points.empty()) jt["integration_points"] = t.integration_points;
    j["terms"].push_back(std::move(jt));
  }
  if (doc.cross_checked)
    j["cross_check"] = ordered_json{{"engines", "pairing vs genfun"}, {"ok", doc.cross_check_ok}};
  if (doc.oracle) {
    const auto& o = *doc.oracle;
    j["oracle"] = ordered_json{{"p", o.p},
                               {"modes", o.modes},
                               {"cutoff", o.cutoff},
                               {"matrix_value", o.matrix_value},
                               {"symbolic_value", to_longlong(o.symbolic_value)},
                               {"ok", o.ok}};
  }
  return j.dump(2) + "\n";
}

ResultDocument parse_result_document(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  ResultDocument doc;
  doc.engine = j.at("engine").get<std::string>();
  doc.mode = j.at("mode").get<std::string>() == "operator_string" ? ProductMode::OperatorString
                                                                  : ProductMode::TimeOrdered;
  if (j.contains("p")) doc.p = j.at("p").get<int>();
  for (const auto& jt : j.at("terms")) {
    ResultTerm t;
    std::vector<Integer> coeffs;
    for (const auto& c : jt.at("coefficient")) coeffs.push_back(Integer(c.get<long long>()));
    t.coefficient = PPolynomial(std::move(coeffs));
    t.i_power = jt.at("i_power").get<int>();
    for (const auto& jf : jt.at("factors")) {
      KernelFactor f;
      f.kind = kind_of_name(jf.at("kernel").get<std::string>());
      f.arg_a = jf.at("args").at(0).get<std::string>();
      f.arg_b = jf.at("args").at(1).get<std::string>();
      t.factors.push_back(std::move(f));
    }
    if (jt.contains("coupling_power")) t.coupling_power = jt.at("coupling_power").get<int>();
    if (jt.contains("integration_points"))
      for (const auto& z : jt.at("integration_points"))
        t.integration_points.push_back(z.get<std::string>());
    doc.result.add(std::move(t));
  }
  doc.result.finalize();
  if (j.contains("cross_check")) {
    doc.cross_checked = true;
    doc.cross_check_ok = j.at("cross_check").at("ok").get<bool>();
  }
  if (j.contains("oracle")) {
    OracleComparison o;
    const auto& jo = j.at("oracle");
    o.p = jo.at("p").get<int>();
    o.modes = jo.at("modes").get<int>();
    o.cutoff = jo.at("cutoff").get<int>();
    o.matrix_value = jo.at("matrix_value").get<double>();
    o.symbolic_value = Integer(jo.at("symbolic_value").get<long long>());
    o.ok = jo.at("ok").get<bool>();
    doc.oracle = o;
  }
  return doc;
}

bool operator==(const ResultDocument& a, const ResultDocument& b) {
  auto oracle_tuple = [](const std::optional<OracleComparison>& o) {
    if (!o) return std::tuple(false, 0, 0, 0, 0.0, Integer(0), true);
    return std::tuple(true, o->p, o->modes, o->cutoff, o->matrix_value, o->symbolic_value, o->ok);
  };
  return a.engine == b.engine && a.mode == b.mode && a.p == b.p && a.result == b.result &&
         a.cross_checked == b.cross_checked && a.cross_check_ok == b.cross_check_ok &&
         oracle_tuple(a.oracle) == oracle_tuple(b.oracle);
}

}  // namespace para::cli
