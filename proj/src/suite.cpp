#include "ramond/suite.hpp"

#include <chrono>

#include "ramond/intertwiners.hpp"
#include "ramond/probes.hpp"

namespace ramond {

bool Section::passed() const
{
    for (const auto& c : checks)
        if (!c.passed())
            return false;
    return true;
}

long Section::checked() const
{
    long n = 0;
    for (const auto& c : checks)
        n += c.checked;
    return n;
}

long Section::failed() const
{
    long n = 0;
    for (const auto& c : checks)
        n += c.failed;
    return n;
}

namespace {

struct Carrier {
    FamilyPtr family;
    WindowSpec window;
};

WindowSpec window(int t_bound, int mode_bound, int aux_bound = 0, int pole_bound = 0)
{
    WindowSpec w;
    w.t_bound = t_bound;
    w.mode_bound = mode_bound;
    w.aux_bound = aux_bound;
    w.pole_bound = pole_bound;
    return w;
}

RingPtr symbolic_ring() { return ParamRing::standard({"b", "alpha", "lambda", "f0", "f1", "fm1"}); }

// One representative of each family, symbolic wherever the payload allows.
std::vector<Carrier> symbolic_carriers(const RingPtr& r)
{
    return {
        {FamilySpec::laurent(parse_laurent("alpha + t", r), r), window(2, 0)},
        {FamilySpec::omega(SymScalar::param(r, "lambda"), r), window(0, 0, 3)},
        {FamilySpec::degree_two(parse_laurent("f0 + f1*t + fm1*t^-1", r), r), window(2, 0, 1)},
        {FamilySpec::degree_n(2, r), window(2, 0, 1)},
        {FamilySpec::fraction({0, 1}, {rat(1, 2), rat(1, 2)}, r), window(2, 0, 0, 2)},
    };
}

ActionConfig config(Algebra a, FamilyPtr f, SymScalar b)
{
    ActionConfig c;
    c.algebra = a;
    c.family = std::move(f);
    c.b = std::move(b);
    return c;
}

std::vector<CheckResult> criterion_1(const BracketTable& table)
{
    std::vector<CheckResult> out;
    for (Algebra a : {Algebra::R, Algebra::T}) {
        out.push_back(check_super_jacobi(a, 4, table));
        out.push_back(check_super_antisymmetry(a, 4, table));
    }
    return out;
}

std::vector<CheckResult> criterion_2(const BracketTable& table)
{
    auto r = symbolic_ring();
    return {check_realization(FamilySpec::laurent(parse_laurent("alpha + t", r), r), 3, window(3, 3), table)};
}

std::vector<CheckResult> criterion_3(const BracketTable& table, bool stop_at_failure = false)
{
    auto r = symbolic_ring();
    auto b = SymScalar::param(r, "b");
    std::vector<CheckResult> out;
    for (const auto& c : symbolic_carriers(r))
        for (Algebra a : {Algebra::R, Algebra::T}) {
            out.push_back(check_module_axiom(config(a, c.family, b), 3, c.window, table));
            if (stop_at_failure && !out.back().passed())
                return out;
        }
    return out;
}

std::vector<CheckResult> criterion_4(const BracketTable& table)
{
    auto r = symbolic_ring();
    auto b = SymScalar::param(r, "b");
    std::vector<CheckResult> out;
    auto carriers = symbolic_carriers(r);
    out.push_back(sigma_twist_check(b, carriers[0].family, 3, window(2, 3), table));
    out.push_back(check_phi_homomorphism(3, table));
    out.push_back(check_phi_injective(3));
    for (const auto& c : carriers)
        out.push_back(check_restriction_consistency(config(Algebra::T, c.family, b), 4, c.window));
    return out;
}

std::vector<CheckResult> criterion_5()
{
    auto r = symbolic_ring();
    auto b = SymScalar::param(r, "b");
    std::vector<CheckResult> out;
    for (const auto& c : symbolic_carriers(r))
        out.push_back(check_k_identities(config(Algebra::R, c.family, b), 3, c.window));
    return out;
}

std::vector<CheckResult> criterion_6()
{
    std::vector<CheckResult> out;
    auto zero = FamilySpec::laurent({}, nullptr);
    auto triv = config(Algebra::R, zero, 0);
    auto w = window(6, 2);
    out.push_back(submodule_closure(triv, candidate_constant(triv), w, "trivial submodule C"));
    out.back().detail("candidate", "t^0");

    auto alpha_t = FamilySpec::laurent(parse_laurent("t", nullptr), nullptr);
    auto half = config(Algebra::R, alpha_t, rat(1, 2));
    out.push_back(submodule_closure(half, candidate_even_plus_dt_odd(half, w), w,
                                    "unique irreducible submodule for b = 1/2"));
    out.back().detail("candidate", "span{t^i, (alpha + i) xi t^i}");

    auto omega = FamilySpec::omega(2, nullptr);
    auto ow = window(0, 2, 5);
    auto ohalf = config(Algebra::R, omega, rat(1, 2));
    out.push_back(submodule_closure(ohalf, candidate_even_plus_dt_odd(ohalf, ow), ow,
                                    "submodule M_{A,1/2} even + D_t odd"));
    out.back().detail("candidate", "even part + D_t (odd part)");
    return out;
}

std::vector<CheckResult> criterion_7()
{
    struct Case {
        FamilyPtr family;
        const char* seed;
    };
    const Case cases[] = {
        {FamilySpec::laurent(parse_laurent("1/2", nullptr), nullptr), "t^0"},
        {FamilySpec::omega(2, nullptr), "Dt^0"},
        {FamilySpec::degree_two(parse_laurent("t", nullptr), nullptr), "t^0"},
        {FamilySpec::degree_n(2, nullptr), "t^0"},
        {FamilySpec::fraction({0, 1}, {rat(1, 2), rat(1, 2)}, nullptr), "t^0"},
    };
    const WindowSpec w = window(6, 2, 5, 2);
    std::vector<CheckResult> out;
    for (const auto& c : cases)
        for (const Rational& b : {rat(1, 3), rat(2), rat(-1)})
            out.push_back(orbit_report(config(Algebra::R, c.family, b), parse_vector(c.seed, c.family), w, 64, true));
    return out;
}

std::vector<CheckResult> criterion_8()
{
    std::vector<CheckResult> out;
    auto r = symbolic_ring();
    auto omega = FamilySpec::omega(SymScalar::param(r, "lambda"), r);
    auto ow = window(0, 3, 4);
    out.push_back(check_intertwiner(phi_map(omega), 3, ow));
    out.push_back(check_intertwiner(phi_inverse_map(omega), 3, ow));
    out.push_back(check_inverse(phi_map(omega), phi_inverse_map(omega), ow));
    auto lau = FamilySpec::laurent(parse_laurent("1/2", nullptr), nullptr);
    out.push_back(check_intertwiner(phi_map(lau), 3, window(4, 3)));
    out.push_back(check_intertwiner(psi_quotient_map(), 3, window(4, 3)));
    out.push_back(check_intertwiner(psi_rank_two_map(SymScalar::param(r, "lambda"), SymScalar::param(r, "alpha")), 3,
                                    window(0, 3, 4)));

    auto om2 = FamilySpec::omega(2, nullptr);
    out.push_back(hom_dimension_check(ModuleRef::of(config(Algebra::R, om2, rat(1, 3))),
                                      ModuleRef::of(config(Algebra::R, om2, 2)), 2, window(0, 2, 5), HomParity::Any, 0,
                                      0));
    out.push_back(witness_non_isomorphism_T(2, window(4, 2)));
    return out;
}

std::vector<CheckResult> criterion_9()
{
    std::set<std::string> names;
    for (Algebra a : {Algebra::R, Algebra::T})
        for (const auto& n : BracketTable::names(a))
            names.insert(n);
    std::vector<CheckResult> out;
    for (const auto& n : names) {
        CheckResult res;
        res.id = "mutation." + n;
        res.anchor = "structure constants";
        res.instance = "flipped sign of " + n;
        res.checked = 1;
        int by = mutation_caught_by(BracketTable::standard().flipped(n));
        if (by == 0)
            res.record_failure("flipping " + n + " leaves criteria 1 and 3 passing");
        else
            res.detail("caught_by", "criterion " + std::to_string(by));
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace

std::string criterion_name(int criterion)
{
    switch (criterion) {
    case 1: return "super-Jacobi identity";
    case 2: return "Witt superalgebra realization";
    case 3: return "module axioms";
    case 4: return "twist, embedding and restriction";
    case 5: return "k-polynomial identities";
    case 6: return "submodule structure";
    case 7: return "irreducibility evidence";
    case 8: return "intertwiners";
    case 9: return "mutation sensitivity";
    }
    throw ConfigError("unknown criterion " + std::to_string(criterion) + " (expected 1-9)");
}

Section run_criterion(int criterion, const BracketTable& table)
{
    Section s;
    s.criterion = criterion;
    s.name = criterion_name(criterion);
    auto start = std::chrono::steady_clock::now();
    switch (criterion) {
    case 1: s.checks = criterion_1(table); break;
    case 2: s.checks = criterion_2(table); break;
    case 3: s.checks = criterion_3(table); break;
    case 4: s.checks = criterion_4(table); break;
    case 5: s.checks = criterion_5(); break;
    case 6: s.checks = criterion_6(); break;
    case 7: s.checks = criterion_7(); break;
    case 8: s.checks = criterion_8(); break;
    case 9: s.checks = criterion_9(); break;
    }
    s.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return s;
}

std::vector<Section> run_suite(const SuiteOptions& opts)
{
    std::vector<Section> out;
    for (int c = 1; c <= 9; ++c) {
        if (opts.select && !opts.select->count(c))
            continue;
        out.push_back(run_criterion(c, opts.table));
        if (opts.on_section)
            opts.on_section(out.back());
    }
    return out;
}

int mutation_caught_by(const BracketTable& table)
{
    for (const auto& c : criterion_1(table))
        if (!c.passed())
            return 1;
    for (const auto& c : criterion_3(table, true))
        if (!c.passed())
            return 3;
    return 0;
}

const std::set<std::string>& known_anchors()
{
    static const std::set<std::string> anchors = {
        "structure constants",
        "embedding of R into T",
        "Witt superalgebra realization",
        "twist sigma_b",
        "V_{A,b} is a T-module",
        "M_{A,b} is an R-module",
        "M_{A,b} as restriction of V_{A,b}",
        "irreducibility of M_{A,b}",
        "irreducibility of V_{A,b}",
        "submodule structure",
        "trivial submodule C",
        "unique irreducible submodule for b = 1/2",
        "submodule M_{A,1/2} even + D_t odd",
        "k-polynomial identities in the irreducibility argument",
        "contrast with restricted modules",
        "isomorphism M_{A,1/2} even + D_t odd = Pi(M_{A,0})",
        "isomorphism M_{A,1/2} even + D_t odd = M_t",
        "isomorphism Omega_R(mu, alpha) = Omega_R(lambda, 1/2 - b)",
        "parity change",
        "isomorphism classification",
        "V_{A,1/2} even + D_t odd is not isomorphic to Pi(V_{A,0})",
    };
    return anchors;
}

} // namespace ramond
