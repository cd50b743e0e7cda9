#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germ/catalog.hpp"
#include "germ/errors.hpp"
#include "germ/report.hpp"
#include "germ/suites.hpp"
#include "support/fixtures.hpp"

using namespace germ;
using germ::testing::P;

namespace {

std::size_t parse_error_position(std::string_view text, const Ring& ring) {
  try {
    parse_expression(text, ring);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << std::string(text));
  return 0;
}

nlohmann::json entry(std::string name, std::string f, nlohmann::json expected = nlohmann::json::object()) {
  return {{"name", std::move(name)}, {"vars", {"x", "y"}}, {"f", std::move(f)}, {"flags", nlohmann::json::array()},
          {"expected", std::move(expected)}};
}

}  // namespace

TEST_CASE("expression grammar") {
  const Ring R = germ::testing::xy();
  const Polynomial cusp = P("y^2 - x^3", R);
  CHECK(cusp == Polynomial::term(R, Monomial{0, 2}, 1) - Polynomial::term(R, Monomial{3, 0}, 1));
  CHECK(P("(x + y^2)^2", R) == P("x^2 + 2*x*y^2 + y^4", R));
  CHECK(P("  -1/2 x y ", R) == P("-1/2*x*y", R));
  CHECK(P("2(x+1)", R) == P("2*x + 2", R));
  CHECK(P("-x^2", R) == P("-(x^2)", R));
  CHECK(P("x^0", R) == P("1", R));
  CHECK(P("4/6", R) == P("2/3", R));
  CHECK(P("x - - y", R) == P("x + y", R));

  CHECK_THROWS_WITH_AS(P("y^2 - z", R), doctest::Contains("z"), ParseError);
  CHECK(parse_error_position("x+", R) == 2);
  CHECK(parse_error_position("x^-1", R) == 2);
  CHECK(parse_error_position("x^1/2", R) == 3);
  CHECK(parse_error_position("2 3", R) == 2);
  CHECK(parse_error_position("(x", R) == 2);
  CHECK(parse_error_position("1/0", R) == 2);
  CHECK_THROWS_AS(P("", R), ParseError);
  CHECK_THROWS_AS(P("x $ y", R), ParseError);

  CHECK(parse_variable_list(" x , y,z") == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("catalog parsing") {
  nlohmann::json doc = nlohmann::json::array();
  doc.push_back(entry("cusp", "y^2 - x^3", {{"reduced_regular", false}, {"principal_gradient", "absent"}}));
  const auto entries = parse_catalog(doc);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].expected.reduced_regular == false);
  CHECK(entries[0].expected.principal_gradient == false);
  const CatalogValidation v = validate_catalog(entries);
  CHECK(v.ok());
  CHECK(v.entries == 1);

  nlohmann::json wrong = nlohmann::json::array();
  wrong.push_back(entry("cusp", "y^2 - x^3", {{"reduced_regular", true}}));
  const CatalogValidation bad = validate_catalog(parse_catalog(wrong));
  REQUIRE(bad.mismatches.size() == 1);
  CHECK(bad.mismatches[0].field == "reduced_regular");
}

TEST_CASE("malformed catalogs name the entry") {
  nlohmann::json doc = nlohmann::json::array();
  doc.push_back(entry("fine", "x*y"));
  doc.push_back(entry("broken", "x +* y"));
  try {
    parse_catalog(doc);
    FAIL("accepted an unparsable entry");
  } catch (const CatalogError& e) {
    CHECK(e.entry() == 1u);
    CHECK(std::string(e.what()).find("broken") != std::string::npos);
  }

  nlohmann::json inconsistent = nlohmann::json::array();
  inconsistent.push_back(entry("odd", "x", {{"smooth", true}, {"reduced_regular", false}}));
  CHECK_THROWS_AS(parse_catalog(inconsistent), CatalogError);

  nlohmann::json mu = nlohmann::json::array();
  mu.push_back(entry("odd", "x*y", {{"reduced_regular", true}, {"jacobian_mu", 2}}));
  CHECK_THROWS_AS(parse_catalog(mu), CatalogError);

  nlohmann::json flag = entry("f", "x + y^2");
  flag["flags"] = {"homogeneous"};
  CHECK_THROWS_AS(parse_catalog(nlohmann::json::array({flag})), CatalogError);
  flag["flags"] = {"smooth"};
  CHECK_THROWS_AS(parse_catalog(nlohmann::json::array({flag})), CatalogError);

  CHECK_THROWS_AS(parse_catalog(nlohmann::json::object()), CatalogError);
}

TEST_CASE("report serialization") {
  const Ring R = germ::testing::xy();
  const AnalysisReport report = analyze(GermInput(P("x^2*y^2", R)));
  const auto json = report_to_json(report, false);
  CHECK(json["schema"] == 1);
  CHECK(json["reduced_regular"] == false);
  CHECK(json["jacobian_mu"] == 2);
  CHECK(json["principal_gradient"].is_null());
  CHECK_FALSE(json.contains("timings"));
  CHECK(report_to_json(report, true).contains("timings"));
  CHECK(report_to_json(analyze(GermInput(P("x^2*y^2", R))), false).dump() == json.dump());
  CHECK(report_to_text(report, false).find("reduced_regular") != std::string::npos);
}

TEST_CASE("suites") {
  SuiteConfig config;
  config.trials = 12;
  config.seed = 5;
  const auto summaries = run_suite("all", config);
  CHECK(summaries.size() == suite_names().size());
  for (const auto& s : summaries) {
    CHECK_MESSAGE(s.ok(), s.suite);
    CHECK(s.trials == 12);
    CHECK(s.passes == 12);
  }

  // Independent of thread count and repeatable byte for byte.
  SuiteConfig serial = config;
  serial.threads = 1;
  SuiteConfig wide = config;
  wide.threads = 4;
  CHECK(summaries_to_json(run_suite("all", serial), config).dump() ==
        summaries_to_json(run_suite("all", wide), config).dump());

  config.trials = 0;
  for (const auto& s : run_suite("all", config)) CHECK(s.trials == 0);
  CHECK_THROWS_AS(run_suite("nonsense", config), std::invalid_argument);
}
