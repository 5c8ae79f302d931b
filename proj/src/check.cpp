#include "ramond/check.hpp"

namespace ramond {

namespace {
constexpr std::size_t kMaxFailures = 8;
}

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::SkippedLeakage: return "skipped-leakage";
    }
    return "?";
}

Status CheckResult::status() const
{
    if (failed > 0)
        return Status::Fail;
    if (checked == 0 && skipped > 0)
        return Status::SkippedLeakage;
    return Status::Pass;
}

void CheckResult::record_failure(std::string what)
{
    ++failed;
    if (failures.size() < kMaxFailures)
        failures.push_back(std::move(what));
}

void CheckResult::absorb(const CheckResult& other)
{
    checked += other.checked;
    failed += other.failed;
    skipped += other.skipped;
    for (const auto& f : other.failures)
        if (failures.size() < kMaxFailures)
            failures.push_back(f);
}

} // namespace ramond
