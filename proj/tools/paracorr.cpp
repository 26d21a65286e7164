#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "para/fock.hpp"
#include "para/problem.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCrossCheck = 2;
constexpr int kExitResourceLimit = 3;

int run_eval(const std::string& input, const std::string& engine_flag, int p_flag,
             bool oracle_flag, const std::string& format_flag, long long max_dim_flag) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot open input file '" << input << "'\n";
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  try {
    para::cli::ProblemFile problem = para::cli::parse_problem(buffer.str());
    if (!engine_flag.empty()) {
      if (engine_flag == "pairing")
        problem.engine = para::cli::Engine::Pairing;
      else if (engine_flag == "genfun")
        problem.engine = para::cli::Engine::GenFun;
      else if (engine_flag == "both")
        problem.engine = para::cli::Engine::Both;
    }
    if (p_flag > 0) problem.p = p_flag;
    if (oracle_flag && !problem.oracle) problem.oracle = para::cli::OracleConfig{};
    if (max_dim_flag > 0) problem.max_dimension = static_cast<std::size_t>(max_dim_flag);

    para::cli::ResultDocument doc = para::cli::run(problem);
    std::cout << para::cli::emit(doc, format_flag == "json" ? para::cli::OutputFormat::Json
                                                            : para::cli::OutputFormat::Text);
    if (doc.cross_checked && !doc.cross_check_ok) {
      std::cerr << "error: engine cross-check mismatch\n";
      return kExitCrossCheck;
    }
    if (doc.oracle && !doc.oracle->ok) {
      std::cerr << "error: Fock oracle disagrees with the symbolic result\n";
      return kExitCrossCheck;
    }
    return kExitOk;
  } catch (const para::cli::ParseError& e) {
    std::cerr << input << ":" << e.line << ":" << e.column << ": "
              << (e.kind == para::cli::ParseError::Kind::Syntax ? "syntax error"
                                                                : "validation error")
              << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const para::fock::DimensionLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paracorr: vacuum expectation values of parabose/parafermi field products"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate a correlator problem file");
  std::string input;
  std::string engine;
  std::string format = "text";
  int p = 0;
  bool oracle = false;
  long long max_dim = 0;
  eval->add_option("--input", input, "problem file (JSON)")->required();
  eval->add_option("--engine", engine, "pairing | genfun | both")
      ->check(CLI::IsMember({"pairing", "genfun", "both"}));
  eval->add_option("--p", p, "evaluate coefficients at a concrete order p >= 1")
      ->check(CLI::PositiveNumber);
  eval->add_flag("--oracle", oracle, "run the finite Fock-space oracle (operator strings)");
  eval->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  eval->add_option("--max-dim", max_dim, "Fock dimension limit")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  return run_eval(input, engine, p, oracle, format, max_dim);
}
