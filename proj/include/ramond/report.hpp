#pragma once

// Versioned JSON reports. The body is deterministic for a given config;
// wall times live in the footer, which carries an FNV-1a digest of the
// serialized body.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "ramond/suite.hpp"

namespace ramond {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json check_json(const CheckResult& c);
nlohmann::json section_json(const Section& s);

std::uint64_t fnv1a64(const std::string& bytes);

/// {"schema_version", "body": {command, config, status, sections}, "footer":
/// {body_fnv1a64, wall_time_ms}}. The digest covers body.dump().
nlohmann::json make_report(const std::string& command, const nlohmann::json& config,
                           const std::vector<Section>& sections);

} // namespace ramond
