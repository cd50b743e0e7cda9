// The shipped catalog must hold exactly the verdicts the truncated oracle
// derives, and the engine must reproduce them.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germ/catalog.hpp"
#include "support/oracle_verdicts.hpp"

using namespace germ;

namespace {

const std::vector<CatalogEntry>& catalog() {
  static const auto entries = load_catalog(GERM_CATALOG_PATH);
  return entries;
}

}  // namespace

TEST_CASE("catalog covers the required families") {
  const auto& entries = catalog();
  CHECK(entries.size() >= 12);
  std::vector<std::string> expressions;
  for (const auto& e : entries) expressions.push_back(e.expression);
  for (const char* required : {"x1", "x1^2", "x1^3", "x1^4", "y^2 - x^3", "y^2 - x^2 - x^3", "x^2*y^2", "x*y",
                               "(x + y^2)^2", "(x + y^2)^3"})
    CHECK_MESSAGE(std::find(expressions.begin(), expressions.end(), required) != expressions.end(), required);
}

TEST_CASE("stored verdicts are the oracle's") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto v = germ::testing::oracle_verdicts(e.f, 10);
    CHECK(e.expected.smooth == v.smooth);
    CHECK(e.expected.reduced_regular == v.reduced_regular);
    CHECK(e.expected.jacobian_mu == v.jacobian_mu);
    CHECK(e.expected.principal_gradient == v.principal_gradient);
    CHECK(e.expected.radical_exponent == v.radical_exponent);
    for (const char* field : {"smooth", "reduced_regular", "jacobian_mu", "principal_gradient"})
      CHECK(e.expected.provenance.count(field) == 1);
  }
}

TEST_CASE("engine reproduces the catalog") {
  const CatalogValidation v = validate_catalog(catalog());
  CHECK(v.entries == catalog().size());
  for (const auto& m : v.mismatches) FAIL_CHECK(m.entry << ": " << m.field << " expected " << m.expected << ", got " << m.actual);
  CHECK(v.isolated_dimension_failures.empty());
}
