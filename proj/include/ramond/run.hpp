#pragma once

// Command execution behind the CLI: configuration schema and dispatch.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ramond/modules.hpp"
#include "ramond/suite.hpp"

namespace ramond {

/// Every command option. Field names match the config-file keys with
/// '_' written as '-'.
struct RunConfig {
    std::string command;
    std::string algebra = "R";
    std::string family = "laurent";
    std::string alpha = "0";
    std::string lambda = "2";
    std::string f = "t";
    int n = 2;
    std::string poles = "0";
    std::string residues = "1/2";
    std::string b = "symbolic";
    int t_bound = 4;
    int aux_bound = 3;
    int pole_bound = 2;
    int mode_bound = 2;
    int max_rounds = 64;
    std::string seed = "t^0";
    bool expect_filled = true;
    std::string candidate = "even-plus-dt-odd";
    std::string map = "phi";
    std::string target_b = "2";
    std::string hom_parity = "even";
    std::optional<int> expect_dim;
    /// Criteria for report-all; nullopt runs all nine, empty runs none.
    std::optional<std::vector<int>> select;
    std::string mutate;
    std::string output;
};

const std::vector<std::string>& command_names();
/// Config-file keys.
const std::vector<std::string>& config_keys();

/// Overlays the keys of `j` onto `cfg`. Unknown keys and mistyped values
/// are ConfigErrors.
void apply_config_json(RunConfig& cfg, const nlohmann::json& j);
void apply_config_file(RunConfig& cfg, const std::string& path);
nlohmann::json config_json(const RunConfig& cfg);

/// Parameters available to symbolic configs.
RingPtr cli_ring();
ActionConfig action_config(const RunConfig& cfg);
WindowSpec window_spec(const RunConfig& cfg);
BracketTable bracket_table(const RunConfig& cfg);

struct RunOutcome {
    int exit_code = 0;
    nlohmann::json report;
};

/// Executes cfg.command; exit code 0 iff every check passes, 1 otherwise.
/// ConfigError, DomainError and InvariantError propagate.
RunOutcome run(const RunConfig& cfg);

} // namespace ramond
