#pragma once

#include <string>

#include <json.hpp>

#include "germ/analysis.hpp"

namespace germ {

inline constexpr int kSchemaVersion = 1;

/// Stable JSON form of a report; keys appear in declaration order of AnalysisReport.
nlohmann::ordered_json report_to_json(const AnalysisReport& report, bool include_timings = true);

/// Aligned human-readable block.
std::string report_to_text(const AnalysisReport& report, bool include_timings = true);

}  // namespace germ
