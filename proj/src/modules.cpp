#include "ramond/modules.hpp"

namespace ramond {

using Kind = Generator::Kind;

// ---------------------------------------------------------------- config

void ActionConfig::validate() const
{
    if (!family)
        throw ConfigError("action config without a carrier family");
    common_ring(family->ring, b.ring());
    if (drop_constant) {
        if (family->tag != FamilyTag::LaurentSeries || !family->alpha.empty())
            throw ConfigError("the constant quotient needs the laurent family with alpha = 0");
        if (!b.is_zero())
            throw ConfigError("the constant quotient needs b = 0");
    }
}

std::string ActionConfig::describe() const
{
    std::string mod = algebra == Algebra::R ? "M" : "V";
    std::string s = std::string(algebra_name(algebra)) + "-module " + mod + "_{A,b} A=" + family->describe() +
                    " b=" + b.to_string();
    if (drop_constant)
        s += " modulo C t^0";
    return s;
}

bool ActionConfig::is_numeric() const { return family->is_numeric() && b.is_constant(); }

ActionConfig ActionConfig::substituted(const Bindings& bindings) const
{
    ActionConfig c = *this;
    c.family = family->substituted(bindings);
    c.b = b.substitute(bindings);
    return c;
}

ActionConfig ActionConfig::over(Algebra a) const
{
    ActionConfig c = *this;
    c.algebra = a;
    return c;
}

namespace {

void check_algebra(const Generator& x, const ActionConfig& cfg)
{
    if (x.algebra != cfg.algebra)
        throw ConfigError("generator " + to_string(x) + " does not belong to the " +
                          std::string(algebra_name(cfg.algebra)) + " module");
}

void drop_constant_term(Vector& v)
{
    SymScalar c = v.coeff(BasisIndex::power(0, 0));
    if (!c.is_zero())
        v.add_term(BasisIndex::power(0, 0), -c);
}

} // namespace

// ---------------------------------------------------------------- generic route

Vector act(const Generator& x, const Vector& v, const ActionConfig& cfg)
{
    check_algebra(x, cfg);
    if (x.kind == Kind::C || v.is_zero())
        return Vector(v.family());
    Vector out = weyl_op_apply(twisted(x, cfg.b), v, *cfg.family);
    if (cfg.drop_constant)
        drop_constant_term(out);
    return out;
}

Vector act(const AlgebraElement& x, const Vector& v, const ActionConfig& cfg)
{
    Vector out(v.family());
    for (const auto& [g, c] : x.terms())
        out += c * act(g, v, cfg);
    return out;
}

// ---------------------------------------------------------------- display route

namespace {

// Polynomial in D_t as coefficient list; (D_t + a) * p.
std::vector<SymScalar> mul_linear(const std::vector<SymScalar>& p, const SymScalar& a)
{
    std::vector<SymScalar> out(p.size() + 1, SymScalar(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] += a * p[i];
    }
    return out;
}

Vector omega_vector(const std::vector<SymScalar>& p, int parity, const SymScalar& scale)
{
    Vector out;
    for (std::size_t i = 0; i < p.size(); ++i)
        out.add_term(BasisIndex::power(0, parity, static_cast<int>(i)), scale * p[i]);
    return out;
}

// lambda^m (D_t - m)^n
std::vector<SymScalar> omega_shift(int m, int n)
{
    std::vector<SymScalar> p{SymScalar(1)};
    for (int i = 0; i < n; ++i)
        p = mul_linear(p, SymScalar(-m));
    return p;
}

// t^m u, for even basis element u (given with its parity).
Vector display_t(const FamilySpec& fam, const BasisIndex& u, int m)
{
    switch (fam.tag) {
    case FamilyTag::OmegaLambda: return omega_vector(omega_shift(m, u.aux), u.parity, fam.lambda.pow(m));
    case FamilyTag::Fraction: return fraction_mul_tpow(fam, u, m);
    default: {
        BasisIndex r = u;
        r.tpow += m;
        return Vector::basis(r);
    }
    }
}

// Sum_i alpha_i f / (t - b_i) for Fraction.
Vector fraction_log_derivative_term(const FamilySpec& fam, const BasisIndex& u)
{
    Vector out;
    for (int i = 0; i <= fam.extra_poles(); ++i)
        if (fam.residues[static_cast<std::size_t>(i)] != 0)
            out += SymScalar(fam.residues[static_cast<std::size_t>(i)]) * fraction_mul_pole(fam, u, i);
    return out;
}

// t^m (D_t + c) u in closed form for each family.
Vector display_shifted(const FamilySpec& fam, const BasisIndex& u, int m, const SymScalar& c)
{
    const int r = u.parity;
    switch (fam.tag) {
    case FamilyTag::LaurentSeries: {
        // (alpha(t) + n + c) t^(m+n)
        Vector out;
        for (const auto& [deg, a] : fam.alpha)
            out.add_term(BasisIndex::power(u.tpow + m + deg, r), a);
        out.add_term(BasisIndex::power(u.tpow + m, r), SymScalar(u.tpow) + c);
        return out;
    }
    case FamilyTag::OmegaLambda: {
        // lambda^m (D_t - m + c) (D_t - m)^n
        auto p = mul_linear(omega_shift(m, u.aux), SymScalar(-m) + c);
        return omega_vector(p, r, fam.lambda.pow(m));
    }
    case FamilyTag::DegreeTwo: {
        // t^(m+n) D_t + (n + c) t^(m+n)  and  t^(m+n) f(t) + (n + c) t^(m+n) D_t
        Vector out;
        const int k = u.tpow + m;
        if (u.aux == 0) {
            out.add_term(BasisIndex::power(k, r, 1), 1);
        } else {
            for (const auto& [deg, a] : fam.f)
                out.add_term(BasisIndex::power(k + deg, r, 0), a);
        }
        out.add_term(BasisIndex::power(k, r, u.aux), SymScalar(u.tpow) + c);
        return out;
    }
    case FamilyTag::DegreeN: {
        // (p + c) t^(m+p) D^a + t^(m+p+1) D^(a+1), the last factor reducing to t^(m+p+2) at a = n-1
        Vector out;
        out.add_term(BasisIndex::power(u.tpow + m, r, u.aux), SymScalar(u.tpow) + c);
        if (u.aux + 1 < fam.degree)
            out.add_term(BasisIndex::power(u.tpow + m + 1, r, u.aux + 1), 1);
        else
            out.add_term(BasisIndex::power(u.tpow + m + 2, r, 0), 1);
        return out;
    }
    case FamilyTag::Fraction: {
        // t^(m+1) (f' + f sum_i alpha_i/(t - b_i)) + c t^m f
        Vector inner;
        if (u.is_pole())
            inner.add_term(BasisIndex::pole(u.pole_slot, u.pole_order + 1, r), -u.pole_order);
        else if (u.tpow != 0)
            inner.add_term(BasisIndex::power(u.tpow - 1, r), u.tpow);
        inner += fraction_log_derivative_term(fam, u);
        Vector out = fraction_mul_tpow(fam, inner, m + 1);
        out += c * fraction_mul_tpow(fam, u, m);
        return out;
    }
    }
    return {};
}

Vector flip_to(const Vector& v, int parity)
{
    Vector out;
    for (const auto& [idx, c] : v.terms())
        out.add_term(idx.with_parity(parity), c);
    return out;
}

Vector display_basis(const Generator& x, const BasisIndex& idx, const ActionConfig& cfg)
{
    const FamilySpec& fam = *cfg.family;
    const int m = x.mode, r = idx.parity;
    const SymScalar& b = cfg.b;
    const BasisIndex u = idx.with_parity(0);
    switch (x.kind) {
    case Kind::L: return flip_to(display_shifted(fam, u, m, SymScalar(m) * b + SymScalar(rat(m * r, 2))), r);
    case Kind::H: return (SymScalar(r) - SymScalar(2) * b) * flip_to(display_t(fam, u, m), r);
    case Kind::Gplus:
        if (r == 1)
            return {};
        return SymScalar(-2) * flip_to(display_shifted(fam, u, m, SymScalar(2 * m) * b), 1);
    case Kind::Gminus:
        if (r == 0)
            return {};
        return display_t(fam, u, m);
    case Kind::G:
        if (r == 0)
            return flip_to(display_shifted(fam, u, m, SymScalar(2 * m) * b), 1);
        return -display_t(fam, u, m);
    case Kind::C: return {};
    }
    return {};
}

} // namespace

Vector act_display(const Generator& x, const Vector& v, const ActionConfig& cfg)
{
    check_algebra(x, cfg);
    Vector out(v.family());
    for (const auto& [idx, c] : v.terms()) {
        check_index(*cfg.family, idx);
        out += c * display_basis(x, idx, cfg);
    }
    if (cfg.drop_constant)
        drop_constant_term(out);
    return out;
}

// ---------------------------------------------------------------- checks

std::vector<BasisIndex> module_basis(const ActionConfig& cfg, const WindowSpec& window)
{
    auto basis = window_basis(*cfg.family, window);
    if (cfg.drop_constant)
        std::erase(basis, BasisIndex::power(0, 0));
    return basis;
}

namespace {

std::string mode_instance(const ActionConfig& cfg, int mode_bound, const WindowSpec& w)
{
    return cfg.describe() + " mode_bound=" + std::to_string(mode_bound) + " t_bound=" + std::to_string(w.t_bound) +
           " aux_bound=" + std::to_string(w.aux_bound) + " pole_bound=" + std::to_string(w.pole_bound);
}

} // namespace

CheckResult check_module_axiom(const ActionConfig& cfg, int mode_bound, const WindowSpec& window,
                               const BracketTable& table)
{
    cfg.validate();
    if (mode_bound < 1)
        throw ConfigError("mode bound must be >= 1");
    CheckResult res;
    res.id = std::string("module_axiom.") + std::string(algebra_name(cfg.algebra));
    res.anchor = cfg.algebra == Algebra::T ? "V_{A,b} is a T-module" : "M_{A,b} is an R-module";
    res.instance = mode_instance(cfg, mode_bound, window);
    auto gens = generators(cfg.algebra, mode_bound);
    auto basis = module_basis(cfg, window);
    for (const auto& idx : basis) {
        Vector v = Vector::basis(idx, 1, cfg.family);
        std::map<Generator, Vector> once;
        for (const auto& g : gens)
            once.emplace(g, act(g, v, cfg));
        for (const auto& x : gens)
            for (const auto& y : gens) {
                int s = (x.parity() && y.parity()) ? -1 : 1;
                Vector lhs = act(bracket(x, y, table), v, cfg);
                Vector rhs = act(x, once.at(y), cfg) - SymScalar(s) * act(y, once.at(x), cfg);
                ++res.checked;
                if (!(lhs == rhs))
                    res.record_failure("(" + to_string(x) + ", " + to_string(y) + ") on " + to_string(v, *cfg.family) +
                                       ": residual " + to_string(lhs - rhs, *cfg.family));
            }
    }
    return res;
}

CheckResult check_restriction_consistency(const ActionConfig& cfg_T, int mode_bound, const WindowSpec& window)
{
    cfg_T.validate();
    if (cfg_T.algebra != Algebra::T)
        throw ConfigError("restriction consistency needs a T configuration");
    ActionConfig cfg_R = cfg_T.over(Algebra::R);
    CheckResult res;
    res.id = "restriction.phi";
    res.anchor = "M_{A,b} as restriction of V_{A,b}";
    res.instance = mode_instance(cfg_T, mode_bound, window);
    for (const auto& idx : module_basis(cfg_T, window)) {
        Vector v = Vector::basis(idx, 1, cfg_T.family);
        for (const auto& x : generators(Algebra::R, mode_bound)) {
            Vector lhs = act(x, v, cfg_R);
            Vector rhs = act(phi(x), v, cfg_T);
            ++res.checked;
            if (!(lhs == rhs))
                res.record_failure(to_string(x) + " on " + to_string(v, *cfg_T.family) + ": residual " +
                                   to_string(lhs - rhs, *cfg_T.family));
        }
    }
    return res;
}

CheckResult check_display_agreement(const ActionConfig& cfg, int mode_bound, const WindowSpec& window)
{
    cfg.validate();
    CheckResult res;
    res.id = std::string("display.") + std::string(algebra_name(cfg.algebra));
    res.anchor = cfg.algebra == Algebra::T ? "V_{A,b} is a T-module" : "M_{A,b} is an R-module";
    res.instance = mode_instance(cfg, mode_bound, window);
    for (const auto& idx : module_basis(cfg, window)) {
        Vector v = Vector::basis(idx, 1, cfg.family);
        for (const auto& x : generators(cfg.algebra, mode_bound)) {
            Vector lhs = act(x, v, cfg);
            Vector rhs = act_display(x, v, cfg);
            ++res.checked;
            if (!(lhs == rhs))
                res.record_failure(to_string(x) + " on " + to_string(v, *cfg.family) + ": words " +
                                   to_string(lhs, *cfg.family) + " vs display " + to_string(rhs, *cfg.family));
        }
    }
    return res;
}

} // namespace ramond
