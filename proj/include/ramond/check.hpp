#pragma once

// Outcome record shared by every verification routine.

#include <string>
#include <vector>

namespace ramond {

enum class Status { Pass, Fail, SkippedLeakage };
std::string_view status_name(Status s);

struct CheckResult {
    std::string id;
    std::string anchor;
    std::string instance;
    long checked = 0;
    long failed = 0;
    long skipped = 0;
    /// First few failing instances, each with its residual.
    std::vector<std::string> failures;
    /// Free-form facts a check wants to surface (dimensions, witnesses).
    std::vector<std::pair<std::string, std::string>> details;

    Status status() const;
    bool passed() const { return failed == 0; }
    void record_failure(std::string what);
    void detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
    /// Sums counts and keeps failures of `other`.
    void absorb(const CheckResult& other);
};

} // namespace ramond
