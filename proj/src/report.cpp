#include "germ/report.hpp"

#include <cstdio>
#include <sstream>

#include "germ/polynomial_format.hpp"

namespace germ {

namespace {

std::string ideal_text(const std::vector<Polynomial>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(gens[i]);
  }
  return out + ")";
}

std::string milliseconds(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

nlohmann::ordered_json report_to_json(const AnalysisReport& r, bool include_timings) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["germ"] = {{"vars", r.germ.ring()->names()}, {"f", to_string(r.germ.f())}};
  auto& grad = j["gradient_gens"] = nlohmann::ordered_json::array();
  for (const auto& p : r.gradient_gens.components()) grad.push_back(to_string(p));
  auto& jac = j["jacobian_gens"] = nlohmann::ordered_json::array();
  for (const auto& p : r.jacobian_gens.generators()) jac.push_back(to_string(p));
  j["smooth"] = r.smooth;
  j["jacobian_mu"] = r.jacobian_mu;
  j["reduced_regular"] = r.reduced_regular;
  j["principal_gradient"] = r.principal_gradient ? nlohmann::ordered_json(to_string(*r.principal_gradient)) : nullptr;
  j["radical_exponent"] = r.radical_exponent ? nlohmann::ordered_json(*r.radical_exponent) : nullptr;
  j["diagnostics"] = r.diagnostics;
  if (include_timings) {
    auto& t = j["timings"] = nlohmann::ordered_json::object();
    for (const auto& [stage, ms] : r.timings) t[stage] = ms;
  }
  return j;
}

std::string report_to_text(const AnalysisReport& r, bool include_timings) {
  std::ostringstream out;
  std::string vars;
  for (const auto& v : r.germ.ring()->names()) vars += (vars.empty() ? "" : ", ") + v;
  out << "germ                " << to_string(r.germ.f()) << "   over (" << vars << ")\n"
      << "gradient            " << ideal_text(r.gradient_gens.components()) << "\n"
      << "jacobian            " << ideal_text(r.jacobian_gens.generators()) << "\n"
      << "smooth              " << (r.smooth ? "true" : "false") << "\n"
      << "jacobian_mu         " << r.jacobian_mu << "\n"
      << "reduced_regular     " << (r.reduced_regular ? "true" : "false") << "\n"
      << "principal_gradient  " << (r.principal_gradient ? to_string(*r.principal_gradient) : "absent") << "\n"
      << "radical_exponent    "
      << (r.radical_exponent ? std::to_string(*r.radical_exponent) : std::string("none")) << "\n";
  if (!r.diagnostics.empty()) {
    out << "diagnostics\n";
    for (const auto& d : r.diagnostics) out << "  - " << d << "\n";
  }
  if (include_timings && !r.timings.empty()) {
    out << "timings (ms)       ";
    for (const auto& [stage, ms] : r.timings) out << " " << stage << "=" << milliseconds(ms);
    out << "\n";
  }
  return out.str();
}

}  // namespace germ
