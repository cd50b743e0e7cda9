// Command-line front end. Exit codes: 0 success, 1 catalog mismatch,
// 2 invalid input, 3 theorem violation or failed property.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "germ/analysis.hpp"
#include "germ/catalog.hpp"
#include "germ/errors.hpp"
#include "germ/parse.hpp"
#include "germ/report.hpp"
#include "germ/suites.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kViolation = 3 };

struct Options {
  std::string format = "text";
  std::uint64_t truncation = 12;
  unsigned radical_cap = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  unsigned threads = 0;
  bool timings = true;
};

int run_analyze(const Options& o, const std::string& expression, const std::string& vars) {
  const germ::Ring ring = germ::make_ring(germ::parse_variable_list(vars));
  const germ::GermInput input(germ::parse_expression(expression, ring));
  const germ::AnalysisReport report =
      germ::analyze(input, {.radical_cap = o.radical_cap, .truncation_degree = o.truncation});
  if (o.format == "json") {
    std::cout << germ::report_to_json(report, o.timings).dump(2) << "\n";
  } else {
    std::cout << germ::report_to_text(report, o.timings);
  }
  return kOk;
}

int run_verify(const Options& o, const std::string& suite, const germ::SuiteConfig& bounds) {
  germ::SuiteConfig config = bounds;
  config.trials = o.trials;
  config.seed = o.seed;
  config.truncation = o.truncation;
  config.radical_cap = o.radical_cap;
  config.threads = o.threads;
  const auto summaries = germ::run_suite(suite, config);
  if (o.format == "json") {
    std::cout << germ::summaries_to_json(summaries, config).dump(2) << "\n";
  } else {
    std::cout << germ::summaries_to_text(summaries);
  }
  for (const auto& s : summaries)
    if (!s.ok()) return kViolation;
  return kOk;
}

int run_catalog(const Options& o, const std::string& path) {
  const auto entries = germ::load_catalog(path);
  const germ::CatalogValidation v =
      germ::validate_catalog(entries, {.radical_cap = o.radical_cap, .truncation_degree = o.truncation});
  if (o.format == "json") {
    std::cout << germ::validation_to_json(v).dump(2) << "\n";
  } else {
    std::cout << v.entries << " entries, " << v.mismatches.size() << " mismatches\n";
    for (const auto& m : v.mismatches)
      std::cout << "  " << m.entry << ": " << m.field << " expected " << m.expected << ", got " << m.actual << "\n";
    for (const auto& name : v.isolated_dimension_failures)
      std::cout << "  " << name << ": isolated dimension bound fails\n";
  }
  if (!v.isolated_dimension_failures.empty()) return kViolation;
  return v.mismatches.empty() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local analysis of polynomial germs at the origin over Q"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--truncation", o.truncation, "Truncation degree D for nonlinear coordinate changes")
      ->check(CLI::Range(1, 64));
  app.add_option("--radical-cap", o.radical_cap, "Largest k tried for f^k in the gradient ideal (0: n)");
  app.add_option("--seed", o.seed, "Seed for random suites");
  app.add_option("--trials", o.trials, "Trials per random suite");
  app.add_option("--threads", o.threads, "Worker threads (0: all cores); output does not depend on it");
  app.add_flag("!--no-timings", o.timings, "Omit stage timings from analyze output");

  std::string expression, vars, suite, path;
  auto* analyze = app.add_subcommand("analyze", "Analyze one germ")->fallthrough();
  analyze->add_option("expression", expression, "Polynomial, e.g. \"y^2 - x^3\"")->required();
  analyze->add_option("--vars", vars, "Comma-separated variable names")->required();

  germ::SuiteConfig bounds;
  auto* verify = app.add_subcommand("verify", "Run a randomized property suite")->fallthrough();
  std::vector<std::string> suites = germ::suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-degree", bounds.max_degree)->check(CLI::Range(1, 8));
  verify->add_option("--max-terms", bounds.max_terms)->check(CLI::Range(1, 8));
  verify->add_option("--max-vars", bounds.max_vars)->check(CLI::Range(1, 4));
  verify->add_option("--oracle-degree", bounds.oracle_degree)->check(CLI::Range(1, 16));

  auto* catalog = app.add_subcommand("catalog", "Check a catalog of germs against expected verdicts")->fallthrough();
  catalog->add_option("path", path, "Catalog JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*analyze) return run_analyze(o, expression, vars);
    if (*verify) return run_verify(o, suite, bounds);
    return run_catalog(o, path);
  } catch (const germ::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kViolation;
  } catch (const germ::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
