#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace germ {

struct SuiteConfig {
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  unsigned max_degree = 4;
  unsigned max_terms = 4;
  unsigned max_vars = 3;
  /// Truncation degree D for nonlinear coordinate changes.
  std::uint64_t truncation = 12;
  /// Degree of the truncated oracle in the oracle-agreement suite.
  std::uint64_t oracle_degree = 10;
  /// 0 means "number of variables of the trial".
  unsigned radical_cap = 0;
  /// Worker threads; 0 uses the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

struct TrialFailure {
  std::size_t trial = 0;
  /// Smallest failing input found by dropping terms.
  std::string counterexample;
  std::string detail;
};

struct SuiteSummary {
  std::string suite;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::vector<TrialFailure> failures;
  /// Suite-specific counters (e.g. radical exponent histogram).
  std::map<std::string, std::size_t> stats;

  bool ok() const { return failures.empty(); }
};

/// Names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws std::invalid_argument
/// for an unknown name. Identical configs give identical summaries.
std::vector<SuiteSummary> run_suite(const std::string& name, const SuiteConfig& config);

nlohmann::ordered_json summaries_to_json(const std::vector<SuiteSummary>& summaries, const SuiteConfig& config);
std::string summaries_to_text(const std::vector<SuiteSummary>& summaries);

}  // namespace germ
