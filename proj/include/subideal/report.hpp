#pragma once

/**
 * @file report.hpp
 * @brief Machine-readable (JSON) and plain-text forms of engine results.
 *
 * Object keys are emitted in sorted order and numbers through one fixed
 * formatter, so equal results serialize to identical bytes.
 */

#include "subideal/classifier.hpp"
#include "subideal/oracle.hpp"

#include <json.hpp>

#include <string>

namespace subideal {

/// Bumped whenever the grammar or any report field changes.
inline constexpr const char* kReportSchema = "subideal-report/1";

nlohmann::json to_json(const IndexRange& r);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const SoftnessResult& r);
nlohmann::json to_json(const SubidealReport& r);
nlohmann::json to_json(const OracleReport& r);
nlohmann::json to_json(const EngineConfig& cfg);

std::string render_text(const Verdict& v);
std::string render_text(const SoftnessResult& r);
std::string render_text(const SubidealReport& r);
std::string render_text(const OracleReport& r);

} // namespace subideal
