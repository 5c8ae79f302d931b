#include "ramond/run.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "ramond/intertwiners.hpp"
#include "ramond/probes.hpp"
#include "ramond/report.hpp"

namespace ramond {

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = {
        "verify-algebra", "verify-module",    "verify-twist", "verify-phi", "probe-orbit",
        "probe-submodule", "probe-identities", "check-iso",    "report-all",
    };
    return names;
}

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys = {
        "algebra",   "family",     "alpha",      "lambda",     "f",          "n",           "poles",
        "residues",  "b",          "t-bound",    "aux-bound",  "pole-bound", "mode-bound",  "max-rounds",
        "seed",      "expect-filled", "candidate", "map",      "target-b",   "hom-parity",  "expect-dim",
        "select",    "mutate",     "output",
    };
    return keys;
}

namespace {

std::string as_text(const nlohmann::json& v, const std::string& key)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long>());
    throw ConfigError("config key '" + key + "' expects a string");
}

int as_int(const nlohmann::json& v, const std::string& key)
{
    if (!v.is_number_integer())
        throw ConfigError("config key '" + key + "' expects an integer");
    return v.get<int>();
}

std::vector<Rational> parse_rational_list(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_rational(item));
    return out;
}

std::vector<Section> single(const std::string& name, std::vector<CheckResult> checks)
{
    Section s;
    s.name = name;
    s.checks = std::move(checks);
    return {std::move(s)};
}

Vector seed_vector(const RunConfig& cfg, const ActionConfig& ac)
{
    if (ac.family->tag == FamilyTag::OmegaLambda && cfg.seed == "t^0")
        return parse_vector("Dt^0", ac.family);
    return parse_vector(cfg.seed, ac.family);
}

std::vector<CheckResult> check_iso(const RunConfig& cfg)
{
    const WindowSpec w = window_spec(cfg);
    const int mb = cfg.mode_bound;
    const std::string& m = cfg.map;
    if (m == "phi" || m == "phi-inverse") {
        auto fam = action_config(cfg).family;
        MapSpec phi = phi_map(fam);
        MapSpec inv = phi_inverse_map(fam);
        if (m == "phi")
            return {check_intertwiner(phi, mb, w), check_inverse(phi, inv, w)};
        return {check_intertwiner(inv, mb, w), check_inverse(inv, phi, w)};
    }
    if (m == "psi-quotient")
        return {check_intertwiner(psi_quotient_map(), mb, w)};
    if (m == "psi-rank-two" || m == "psi-rank-two-literal") {
        auto r = cli_ring();
        return {check_intertwiner(
            psi_rank_two_map(parse_scalar(cfg.lambda, r), parse_scalar(cfg.alpha, r), m == "psi-rank-two-literal"), mb,
            w)};
    }
    if (m == "pi") {
        MapSpec p = parity_change_map(ModuleRef::of(action_config(cfg)));
        return {check_intertwiner(p, mb, w), check_inverse(p, parity_change_map(p.target), w)};
    }
    if (m == "hom") {
        ActionConfig src = action_config(cfg);
        ActionConfig tgt = src;
        tgt.b = parse_scalar(cfg.target_b, cli_ring());
        std::size_t lo = 0;
        std::optional<std::size_t> hi;
        if (cfg.expect_dim) {
            lo = static_cast<std::size_t>(*cfg.expect_dim);
            hi = lo;
        } else if (src.b == tgt.b) {
            lo = 1;
        } else {
            hi = 0;
        }
        return {hom_dimension_check(ModuleRef::of(src), ModuleRef::of(tgt), mb, w, parse_hom_parity(cfg.hom_parity),
                                    lo, hi)};
    }
    if (m == "witness")
        return {witness_non_isomorphism_T(mb, w)};
    throw ConfigError("unknown map '" + m +
                      "' (expected phi, phi-inverse, psi-quotient, psi-rank-two, psi-rank-two-literal, pi, hom, "
                      "witness)");
}

} // namespace

void apply_config_json(RunConfig& cfg, const nlohmann::json& j)
{
    if (!j.is_object())
        throw ConfigError("config must be a JSON object");
    for (const auto& [key, v] : j.items()) {
        if (key == "algebra") cfg.algebra = as_text(v, key);
        else if (key == "family") cfg.family = as_text(v, key);
        else if (key == "alpha") cfg.alpha = as_text(v, key);
        else if (key == "lambda") cfg.lambda = as_text(v, key);
        else if (key == "f") cfg.f = as_text(v, key);
        else if (key == "n") cfg.n = as_int(v, key);
        else if (key == "poles") cfg.poles = as_text(v, key);
        else if (key == "residues") cfg.residues = as_text(v, key);
        else if (key == "b") cfg.b = as_text(v, key);
        else if (key == "t-bound") cfg.t_bound = as_int(v, key);
        else if (key == "aux-bound") cfg.aux_bound = as_int(v, key);
        else if (key == "pole-bound") cfg.pole_bound = as_int(v, key);
        else if (key == "mode-bound") cfg.mode_bound = as_int(v, key);
        else if (key == "max-rounds") cfg.max_rounds = as_int(v, key);
        else if (key == "seed") cfg.seed = as_text(v, key);
        else if (key == "expect-filled") {
            if (!v.is_boolean())
                throw ConfigError("config key 'expect-filled' expects a boolean");
            cfg.expect_filled = v.get<bool>();
        }
        else if (key == "candidate") cfg.candidate = as_text(v, key);
        else if (key == "map") cfg.map = as_text(v, key);
        else if (key == "target-b") cfg.target_b = as_text(v, key);
        else if (key == "hom-parity") cfg.hom_parity = as_text(v, key);
        else if (key == "expect-dim") {
            if (v.is_null())
                cfg.expect_dim.reset();
            else
                cfg.expect_dim = as_int(v, key);
        }
        else if (key == "select") {
            if (v.is_null()) {
                cfg.select.reset();
                continue;
            }
            if (!v.is_array())
                throw ConfigError("config key 'select' expects an array of criteria");
            cfg.select.emplace();
            for (const auto& x : v)
                cfg.select->push_back(as_int(x, key));
        }
        else if (key == "mutate") cfg.mutate = as_text(v, key);
        else if (key == "output") cfg.output = as_text(v, key);
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file " + path + ": " + e.what());
    }
    apply_config_json(cfg, j);
}

nlohmann::json config_json(const RunConfig& cfg)
{
    nlohmann::json j = {
        {"algebra", cfg.algebra},   {"family", cfg.family},       {"alpha", cfg.alpha},
        {"lambda", cfg.lambda},     {"f", cfg.f},                 {"n", cfg.n},
        {"poles", cfg.poles},       {"residues", cfg.residues},   {"b", cfg.b},
        {"t-bound", cfg.t_bound},   {"aux-bound", cfg.aux_bound}, {"pole-bound", cfg.pole_bound},
        {"mode-bound", cfg.mode_bound}, {"max-rounds", cfg.max_rounds}, {"seed", cfg.seed},
        {"expect-filled", cfg.expect_filled}, {"candidate", cfg.candidate}, {"map", cfg.map},
        {"target-b", cfg.target_b}, {"hom-parity", cfg.hom_parity}, {"mutate", cfg.mutate},
    };
    j["select"] = cfg.select ? nlohmann::json(*cfg.select) : nlohmann::json(nullptr);
    j["expect-dim"] = cfg.expect_dim ? nlohmann::json(*cfg.expect_dim) : nlohmann::json(nullptr);
    return j;
}

RingPtr cli_ring()
{
    static const RingPtr ring = ParamRing::standard({"b", "alpha", "lambda", "mu", "f0", "f1", "f2", "fm1"});
    return ring;
}

ActionConfig action_config(const RunConfig& cfg)
{
    auto r = cli_ring();
    ActionConfig ac;
    ac.algebra = parse_algebra(cfg.algebra);
    if (cfg.family == "laurent")
        ac.family = FamilySpec::laurent(parse_laurent(cfg.alpha, r), r);
    else if (cfg.family == "omega")
        ac.family = FamilySpec::omega(parse_scalar(cfg.lambda, r), r);
    else if (cfg.family == "degree-two")
        ac.family = FamilySpec::degree_two(parse_laurent(cfg.f, r), r);
    else if (cfg.family == "degree-n")
        ac.family = FamilySpec::degree_n(cfg.n, r);
    else if (cfg.family == "fraction")
        ac.family = FamilySpec::fraction(parse_rational_list(cfg.poles), parse_rational_list(cfg.residues), r);
    else
        throw ConfigError("unknown family '" + cfg.family +
                          "' (expected laurent, omega, degree-two, degree-n, fraction)");
    ac.b = cfg.b == "symbolic" ? SymScalar::param(r, "b") : parse_scalar(cfg.b, r);
    ac.validate();
    return ac;
}

WindowSpec window_spec(const RunConfig& cfg)
{
    if (cfg.t_bound < 0 || cfg.aux_bound < 0 || cfg.pole_bound < 0 || cfg.mode_bound < 0 || cfg.max_rounds < 0)
        throw ConfigError("window bounds must be nonnegative");
    WindowSpec w;
    w.t_bound = cfg.t_bound;
    w.aux_bound = cfg.aux_bound;
    w.pole_bound = cfg.pole_bound;
    w.mode_bound = cfg.mode_bound;
    return w;
}

BracketTable bracket_table(const RunConfig& cfg)
{
    return cfg.mutate.empty() ? BracketTable::standard() : BracketTable::standard().flipped(cfg.mutate);
}

RunOutcome run(const RunConfig& cfg)
{
    const std::string& c = cfg.command;
    const BracketTable table = bracket_table(cfg);
    const int mb = cfg.mode_bound;
    std::vector<Section> sections;
    const auto start = std::chrono::steady_clock::now();
    if (c == "report-all") {
        SuiteOptions opts;
        opts.table = table;
        if (cfg.select) {
            opts.select.emplace();
            for (int s : *cfg.select) {
                criterion_name(s);
                opts.select->insert(s);
            }
        }
        sections = run_suite(opts);
    } else if (c == "verify-algebra") {
        Algebra a = parse_algebra(cfg.algebra);
        sections = single(c, {check_super_jacobi(a, mb, table), check_super_antisymmetry(a, mb, table)});
    } else if (c == "verify-phi") {
        sections = single(c, {check_phi_homomorphism(mb, table), check_phi_injective(mb)});
    } else if (c == "check-iso") {
        sections = single(c, check_iso(cfg));
    } else {
        ActionConfig ac = action_config(cfg);
        WindowSpec w = window_spec(cfg);
        if (c == "verify-module") {
            std::vector<CheckResult> checks = {check_module_axiom(ac, mb, w, table),
                                               check_display_agreement(ac, mb, w)};
            if (ac.algebra == Algebra::T)
                checks.push_back(check_restriction_consistency(ac, mb, w));
            sections = single(c, std::move(checks));
        } else if (c == "verify-twist") {
            sections = single(c, {sigma_twist_check(ac.b, ac.family, mb, w, table),
                                  check_realization(ac.family, mb, w, table)});
        } else if (c == "probe-orbit") {
            Vector seed = seed_vector(cfg, ac);
            sections = single(c, {orbit_report(ac, seed, w, cfg.max_rounds, cfg.expect_filled),
                                  restricted_contrast(ac, seed, mb, cfg.expect_filled)});
        } else if (c == "probe-submodule") {
            std::vector<Vector> cand;
            std::string anchor = "submodule structure";
            if (cfg.candidate == "constant") {
                cand = candidate_constant(ac);
                anchor = "trivial submodule C";
            } else if (cfg.candidate == "even") {
                cand = candidate_even_part(ac, w);
            } else if (cfg.candidate == "even-plus-dt-odd") {
                cand = candidate_even_plus_dt_odd(ac, w);
                anchor = ac.family->tag == FamilyTag::LaurentSeries ? "unique irreducible submodule for b = 1/2"
                                                                     : "submodule M_{A,1/2} even + D_t odd";
            } else {
                throw ConfigError("unknown candidate '" + cfg.candidate +
                                  "' (expected constant, even, even-plus-dt-odd)");
            }
            sections = single(c, {submodule_closure(ac, cand, w, anchor)});
        } else if (c == "probe-identities") {
            sections = single(c, {check_k_identities(ac, mb, w)});
        } else {
            throw ConfigError("unknown command '" + c + "'");
        }
    }
    if (c != "report-all")
        sections.front().wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    RunOutcome out;
    out.report = make_report(c, config_json(cfg), sections);
    out.exit_code = out.report["body"]["status"] == "pass" ? 0 : 1;
    return out;
}

} // namespace ramond
