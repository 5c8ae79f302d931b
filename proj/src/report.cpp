#include "ramond/report.hpp"

#include <cstdio>

namespace ramond {

nlohmann::json check_json(const CheckResult& c)
{
    nlohmann::json details = nlohmann::json::object();
    for (const auto& [k, v] : c.details)
        details[k] = v;
    return {
        {"id", c.id},
        {"anchor", c.anchor},
        {"instance", c.instance},
        {"status", std::string(status_name(c.status()))},
        {"checked", c.checked},
        {"failed", c.failed},
        {"skipped", c.skipped},
        {"failures", c.failures},
        {"details", details},
    };
}

nlohmann::json section_json(const Section& s)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : s.checks)
        checks.push_back(check_json(c));
    return {
        {"criterion", s.criterion},
        {"name", s.name},
        {"status", s.passed() ? "pass" : "fail"},
        {"checked", s.checked()},
        {"failed", s.failed()},
        {"checks", checks},
    };
}

std::uint64_t fnv1a64(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

nlohmann::json make_report(const std::string& command, const nlohmann::json& config,
                           const std::vector<Section>& sections)
{
    nlohmann::json secs = nlohmann::json::array();
    nlohmann::json times = nlohmann::json::object();
    bool ok = true;
    double total = 0;
    for (const auto& s : sections) {
        secs.push_back(section_json(s));
        ok = ok && s.passed();
        times[s.name] = s.wall_ms;
        total += s.wall_ms;
    }
    nlohmann::json body = {
        {"command", command},
        {"config", config},
        {"status", ok ? "pass" : "fail"},
        {"sections", secs},
    };
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(fnv1a64(body.dump())));
    return {
        {"schema_version", kReportSchemaVersion},
        {"body", body},
        {"footer", {{"body_fnv1a64", digest}, {"wall_time_ms", times}, {"total_wall_time_ms", total}}},
    };
}

} // namespace ramond
