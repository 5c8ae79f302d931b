#pragma once

// The acceptance suite: nine criteria, each a section of CheckResults.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramond/algebra.hpp"
#include "ramond/check.hpp"

namespace ramond {

struct Section {
    int criterion = 0;
    std::string name;
    std::vector<CheckResult> checks;
    double wall_ms = 0;

    bool passed() const;
    long checked() const;
    long failed() const;
};

/// Options shared by every criterion. `table` feeds the bracket-dependent
/// checks of criteria 1-4, which is how mutations reach the suite.
struct SuiteOptions {
    BracketTable table = BracketTable::standard();
    /// Criteria to run; nullopt means all nine.
    std::optional<std::set<int>> select;
    /// Called after each section completes.
    std::function<void(const Section&)> on_section;
};

std::string criterion_name(int criterion);
Section run_criterion(int criterion, const BracketTable& table = BracketTable::standard());
std::vector<Section> run_suite(const SuiteOptions& opts);

/// 1 or 3 for the first of criteria 1, 3 that fails under `table`, else 0.
/// Criterion 3 is only run when criterion 1 passes.
int mutation_caught_by(const BracketTable& table);

/// Every anchor a CheckResult produced by this library may carry.
const std::set<std::string>& known_anchors();

} // namespace ramond
