#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "germ/analysis.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// Verdicts a catalog entry commits to. Absent fields are not checked.
struct ExpectedVerdicts {
  std::optional<bool> smooth;
  std::optional<bool> reduced_regular;
  std::optional<std::size_t> jacobian_mu;
  std::optional<bool> principal_gradient;
  std::optional<unsigned> radical_exponent;
  /// Field name -> how the expected value was derived.
  std::map<std::string, std::string> provenance;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> vars;
  std::string expression;
  bool squarefree = false;
  bool homogeneous = false;
  ExpectedVerdicts expected;
  Polynomial f;
};

/// Malformed catalog; `entry` is the 0-based index of the offending entry, if any.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(const std::string& message, std::optional<std::size_t> entry)
      : std::runtime_error(message), entry_(entry) {}
  std::optional<std::size_t> entry() const noexcept { return entry_; }

 private:
  std::optional<std::size_t> entry_;
};

/// Parses and checks a catalog document: a JSON array of entries. Rejects
/// unparsable expressions, unknown flags, a "homogeneous" flag on an
/// inhomogeneous germ, and self-contradictory expectations (smooth without
/// reduced_regular, smooth with a nonzero jacobian_mu, reduced_regular that
/// disagrees with jacobian_mu <= 1).
std::vector<CatalogEntry> parse_catalog(const nlohmann::json& document);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

struct CatalogMismatch {
  std::string entry;
  std::string field;
  std::string expected;
  std::string actual;
};

struct CatalogValidation {
  std::size_t entries = 0;
  std::vector<CatalogMismatch> mismatches;
  /// Squarefree entries that failed the isolated-dimension check.
  std::vector<std::string> isolated_dimension_failures;

  bool ok() const { return mismatches.empty() && isolated_dimension_failures.empty(); }
};

/// Re-analyzes every entry and compares against its expectations.
CatalogValidation validate_catalog(const std::vector<CatalogEntry>& entries, const AnalysisOptions& options = {});

nlohmann::ordered_json validation_to_json(const CatalogValidation& v);

}  // namespace germ
