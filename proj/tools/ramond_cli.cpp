// ramond: verification CLI. Exit status 0 pass, 1 fail, 2 configuration
// error, 3 internal invariant breach.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ramond/run.hpp"

namespace {

std::vector<int> parse_select(const std::string& text)
{
    std::vector<int> out;
    if (text.empty() || text == "none")
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ramond::ConfigError("--select expects comma-separated criteria, got '" + text + "'");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of Ramond-algebra modules"};
    app.require_subcommand(1);

    ramond::RunConfig cli;
    std::string config_path, select, expect_filled;
    int expect_dim = 0;
    // Flag overlays applied after the config file, in declaration order.
    std::vector<std::pair<CLI::Option*, std::function<void(ramond::RunConfig&)>>> overlays;
    auto text = [&](const char* name, std::string ramond::RunConfig::*field, const char* help) {
        auto* o = app.add_option(name, cli.*field, help);
        overlays.emplace_back(o, [&cli, field](ramond::RunConfig& c) { c.*field = cli.*field; });
    };
    auto integer = [&](const char* name, int ramond::RunConfig::*field, const char* help) {
        auto* o = app.add_option(name, cli.*field, help);
        overlays.emplace_back(o, [&cli, field](ramond::RunConfig& c) { c.*field = cli.*field; });
    };

    app.add_option("--config", config_path, "JSON config file; flags override its keys");
    text("--algebra", &ramond::RunConfig::algebra, "R or T");
    text("--family", &ramond::RunConfig::family, "laurent, omega, degree-two, degree-n, fraction");
    text("--alpha", &ramond::RunConfig::alpha, "Laurent polynomial alpha(t) (laurent); scalar alpha (psi-rank-two)");
    text("--lambda", &ramond::RunConfig::lambda, "scalar lambda (omega, psi-rank-two)");
    text("--f", &ramond::RunConfig::f, "Laurent polynomial f(t) (degree-two)");
    integer("--n", &ramond::RunConfig::n, "degree n (degree-n)");
    text("--poles", &ramond::RunConfig::poles, "comma-separated poles, first is 0 (fraction)");
    text("--residues", &ramond::RunConfig::residues, "comma-separated residues (fraction)");
    text("--b", &ramond::RunConfig::b, "twist parameter: scalar or 'symbolic'");
    integer("--t-bound", &ramond::RunConfig::t_bound, "window |t-power| bound");
    integer("--aux-bound", &ramond::RunConfig::aux_bound, "window aux bound (D_t or d/dt power)");
    integer("--pole-bound", &ramond::RunConfig::pole_bound, "window pole-order bound");
    integer("--mode-bound", &ramond::RunConfig::mode_bound, "generator |mode| bound");
    integer("--max-rounds", &ramond::RunConfig::max_rounds, "orbit round limit");
    text("--seed", &ramond::RunConfig::seed, "seed vector (probe-orbit)");
    text("--candidate", &ramond::RunConfig::candidate, "constant, even, even-plus-dt-odd (probe-submodule)");
    text("--map", &ramond::RunConfig::map,
         "phi, phi-inverse, psi-quotient, psi-rank-two, psi-rank-two-literal, pi, hom, witness (check-iso)");
    text("--target-b", &ramond::RunConfig::target_b, "target twist for --map hom");
    text("--hom-parity", &ramond::RunConfig::hom_parity, "even, odd, any (--map hom)");
    text("--mutate", &ramond::RunConfig::mutate, "flip one structure constant, e.g. LL_C");
    text("--output", &ramond::RunConfig::output, "report file (default stdout)");
    auto* expect_filled_opt = app.add_option("--expect-filled", expect_filled, "true or false (probe-orbit)")
                                  ->check(CLI::IsMember({"true", "false"}));
    auto* expect_dim_opt = app.add_option("--expect-dim", expect_dim, "expected Hom dimension (--map hom)");
    auto* select_opt = app.add_option("--select", select, "criteria for report-all, e.g. 1,3,7 or none");

    for (const auto& name : ramond::command_names())
        app.add_subcommand(name)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ramond::RunConfig cfg;
        cfg.command = app.get_subcommands().front()->get_name();
        if (!config_path.empty())
            ramond::apply_config_file(cfg, config_path);
        for (auto& [opt, apply] : overlays)
            if (opt->count())
                apply(cfg);
        if (expect_filled_opt->count())
            cfg.expect_filled = expect_filled == "true";
        if (expect_dim_opt->count())
            cfg.expect_dim = expect_dim;
        if (select_opt->count())
            cfg.select = parse_select(select);

        ramond::RunOutcome out = ramond::run(cfg);
        const std::string doc = out.report.dump(2) + "\n";
        if (cfg.output.empty()) {
            std::cout << doc;
        } else {
            std::ofstream f(cfg.output);
            if (!f)
                throw ramond::ConfigError("cannot write " + cfg.output);
            f << doc;
            std::cout << cfg.command << ": " << out.report["body"]["status"].get<std::string>() << " ("
                      << cfg.output << ")\n";
        }
        return out.exit_code;
    } catch (const ramond::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const ramond::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const ramond::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
