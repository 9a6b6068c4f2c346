#pragma once

#include <string>

#include <json.hpp>

#include "config.hpp"
#include "subword/certify.hpp"

namespace subword::cli {

nlohmann::ordered_json report_json(const AnalysisReport& r);

std::string csv_header();
std::string csv_row(const AnalysisReport& r);
std::string text_report(const AnalysisReport& r);

/// One record in the requested format, without a trailing newline. JSON is compact.
std::string render(const AnalysisReport& r, OutputFormat f);

ClassifyOptions classify_options(const RunConfig& c);

}  // namespace subword::cli
