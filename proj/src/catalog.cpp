#include "germ/catalog.hpp"

#include <fstream>

#include "germ/errors.hpp"
#include "germ/parse.hpp"
#include "germ/report.hpp"

namespace germ {

namespace {

CatalogEntry parse_entry(const nlohmann::json& j, std::size_t index) {
  auto fail = [&](const std::string& what) -> CatalogError {
    std::string label = "entry " + std::to_string(index);
    if (j.is_object() && j.contains("name") && j["name"].is_string())
      label += " ('" + j["name"].get<std::string>() + "')";
    return CatalogError(label + ": " + what, index);
  };
  if (!j.is_object()) throw fail("not an object");
  for (const char* key : {"name", "vars", "f"})
    if (!j.contains(key)) throw fail(std::string("missing field '") + key + "'");

  try {
    const Ring ring = make_ring(j.at("vars").get<std::vector<std::string>>());
    CatalogEntry e{j.at("name").get<std::string>(), ring->names(), j.at("f").get<std::string>(),
                   false, false, {}, Polynomial(ring)};
    try {
      e.f = parse_expression(e.expression, ring);
    } catch (const ParseError& err) {
      throw fail(std::string("expression does not parse: ") + err.what());
    }

    for (const auto& flag : j.value("flags", std::vector<std::string>{})) {
      if (flag == "squarefree") {
        e.squarefree = true;
      } else if (flag == "homogeneous") {
        e.homogeneous = true;
      } else {
        throw fail("unknown flag '" + flag + "'");
      }
    }
    if (e.homogeneous && !e.f.is_homogeneous()) throw fail("flagged homogeneous but is not");

    const auto expected = j.value("expected", nlohmann::json::object());
    auto& ex = e.expected;
    if (expected.contains("smooth")) ex.smooth = expected["smooth"].get<bool>();
    if (expected.contains("reduced_regular")) ex.reduced_regular = expected["reduced_regular"].get<bool>();
    if (expected.contains("jacobian_mu")) ex.jacobian_mu = expected["jacobian_mu"].get<std::size_t>();
    if (expected.contains("principal_gradient")) {
      const auto v = expected["principal_gradient"].get<std::string>();
      if (v != "present" && v != "absent") throw fail("principal_gradient must be \"present\" or \"absent\"");
      ex.principal_gradient = v == "present";
    }
    if (expected.contains("radical_exponent")) ex.radical_exponent = expected["radical_exponent"].get<unsigned>();
    ex.provenance = j.value("provenance", std::map<std::string, std::string>{});

    if (ex.smooth.value_or(false) && ex.reduced_regular == false)
      throw fail("inconsistent expectations: smooth but not reduced_regular");
    if (ex.smooth.value_or(false) && ex.jacobian_mu.value_or(0) != 0)
      throw fail("inconsistent expectations: smooth with nonzero jacobian_mu");
    if (ex.reduced_regular && ex.jacobian_mu && *ex.reduced_regular != (*ex.jacobian_mu <= 1))
      throw fail("inconsistent expectations: reduced_regular disagrees with jacobian_mu");
    return e;
  } catch (const nlohmann::json::exception& err) {
    throw fail(std::string("malformed field: ") + err.what());
  } catch (const std::invalid_argument& err) {
    throw fail(err.what());
  }
}

template <class T>
void compare(CatalogValidation& v, const std::string& entry, const char* field, const std::optional<T>& expected,
             const T& actual) {
  if (expected && *expected != actual) {
    auto str = [](const T& x) {
      if constexpr (std::is_same_v<T, bool>) return std::string(x ? "true" : "false");
      else return std::to_string(x);
    };
    v.mismatches.push_back({entry, field, str(*expected), str(actual)});
  }
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const nlohmann::json& document) {
  if (!document.is_array()) throw CatalogError("catalog must be a JSON array of entries", std::nullopt);
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < document.size(); ++i) out.push_back(parse_entry(document[i], i));
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog " + path.string(), std::nullopt);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& err) {
    throw CatalogError("catalog is not valid JSON: " + std::string(err.what()), std::nullopt);
  }
  return parse_catalog(doc);
}

CatalogValidation validate_catalog(const std::vector<CatalogEntry>& entries, const AnalysisOptions& options) {
  CatalogValidation v;
  v.entries = entries.size();
  for (const auto& e : entries) {
    const AnalysisReport r = analyze(GermInput(e.f), options);
    compare(v, e.name, "smooth", e.expected.smooth, r.smooth);
    compare(v, e.name, "reduced_regular", e.expected.reduced_regular, r.reduced_regular);
    compare(v, e.name, "jacobian_mu", e.expected.jacobian_mu, r.jacobian_mu);
    compare(v, e.name, "principal_gradient", e.expected.principal_gradient, r.principal_gradient.has_value());
    if (r.radical_exponent) compare(v, e.name, "radical_exponent", e.expected.radical_exponent, *r.radical_exponent);
    if (e.squarefree && !isolated_dimension_check(e.f, SquarefreeWitness::asserted()))
      v.isolated_dimension_failures.push_back(e.name);
  }
  return v;
}

nlohmann::ordered_json validation_to_json(const CatalogValidation& v) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["entries"] = v.entries;
  auto& mm = j["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& m : v.mismatches)
    mm.push_back({{"entry", m.entry}, {"field", m.field}, {"expected", m.expected}, {"actual", m.actual}});
  j["isolated_dimension_failures"] = v.isolated_dimension_failures;
  j["ok"] = v.ok();
  return j;
}

}  // namespace germ
