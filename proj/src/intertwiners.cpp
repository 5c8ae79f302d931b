#include "ramond/intertwiners.hpp"

#include <map>

#include "ramond/linalg.hpp"
#include "ramond/weyl.hpp"

namespace ramond {

namespace {

ActionConfig config(Algebra a, FamilyPtr f, SymScalar b, bool drop_constant = false)
{
    ActionConfig c;
    c.algebra = a;
    c.family = std::move(f);
    c.b = std::move(b);
    c.drop_constant = drop_constant;
    c.validate();
    return c;
}

Vector basis(const BasisIndex& idx, const SymScalar& c, const FamilyPtr& f) { return Vector::basis(idx, c, f); }

// (X - m)^k as coefficients of X^j.
std::vector<SymScalar> shifted_power(int m, int k)
{
    std::vector<SymScalar> out(k + 1);
    Integer binom = 1;
    for (int j = k; j >= 0; --j) {
        // C(k, j) (-m)^(k-j)
        out[j] = SymScalar(Rational(binom)) * SymScalar(-m).pow(k - j);
        binom = binom * j / (k - j + 1);
    }
    return out;
}

std::string x_square_text(const Vector& v)
{
    if (v.is_zero())
        return "0";
    std::string out;
    for (const auto& [idx, c] : v.terms()) {
        if (!out.empty())
            out += " + ";
        out += "(" + c.to_string() + ")*" + (idx.parity ? "x" : "") + "(x^2)^" + std::to_string(idx.aux);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- modules

ModuleRef ModuleRef::of(const ActionConfig& cfg)
{
    cfg.validate();
    ModuleRef m;
    m.name = std::string(cfg.algebra == Algebra::R ? "M[" : "V[") + cfg.describe() + "]";
    m.algebra = cfg.algebra;
    m.family = cfg.family;
    m.config = cfg;
    m.action = [cfg](const Generator& x, const Vector& v) { return ramond::act(x, v, cfg); };
    m.basis = [cfg](const WindowSpec& w) { return module_basis(cfg, w); };
    m.print = [fam = cfg.family](const Vector& v) { return to_string(v, *fam); };
    return m;
}

ModuleRef ModuleRef::x_square(const SymScalar& mu, const SymScalar& alpha)
{
    if (mu.is_zero())
        throw ConfigError("x^2 model needs mu != 0");
    ModuleRef m;
    m.name = "Omega_R[mu=" + mu.to_string() + ", alpha=" + alpha.to_string() + "] on C[x^2] + xC[x^2]";
    m.algebra = Algebra::R;
    m.action = [mu, alpha](const Generator& x, const Vector& v) {
        if (x.algebra != Algebra::R)
            throw ConfigError("x^2 model is an R-module; got " + to_string(x));
        Vector out;
        if (x.kind == Generator::Kind::C)
            return out;
        const int m = x.mode;
        const SymScalar mum = mu.pow(m);
        for (const auto& [idx, c] : v.terms()) {
            auto p = shifted_power(m, idx.aux);
            // prefactor (e0 + e1 X) applied to (X - m)^k, landing in parity `r`
            SymScalar e0, e1;
            int r = idx.parity;
            if (x.kind == Generator::Kind::L) {
                e1 = 1;
                e0 = idx.parity ? -SymScalar(m) * (alpha + SymScalar(rat(1, 2))) : -SymScalar(m) * alpha;
            } else if (idx.parity == 0) {
                e1 = 0;
                e0 = 1;
                r = 1;
            } else {
                e1 = -1;
                e0 = SymScalar(2 * m) * alpha;
                r = 0;
            }
            for (std::size_t j = 0; j < p.size(); ++j) {
                out.add_term(BasisIndex::power(0, r, static_cast<int>(j)), c * mum * e0 * p[j]);
                out.add_term(BasisIndex::power(0, r, static_cast<int>(j + 1)), c * mum * e1 * p[j]);
            }
        }
        return out;
    };
    m.basis = [](const WindowSpec& w) {
        std::vector<BasisIndex> out;
        for (int r = 0; r <= 1; ++r)
            for (int k = 0; k <= w.aux_bound; ++k)
                out.push_back(BasisIndex::power(0, r, k));
        return out;
    };
    m.print = x_square_text;
    return m;
}

ModuleRef ModuleRef::parity_changed() const
{
    ModuleRef m = *this;
    m.parity_shift = !parity_shift;
    m.name = parity_shift ? name.substr(3, name.size() - 4) : "Pi(" + name + ")";
    return m;
}

// ---------------------------------------------------------------- maps

Vector MapSpec::apply(const Vector& v) const
{
    Vector out(target.family);
    for (const auto& [idx, c] : v.terms()) {
        auto img = rule(idx);
        if (!img)
            throw DomainError(name + " is not defined on " + source.show(basis(idx, 1, source.family)));
        out += c * *img;
    }
    return out;
}

std::vector<BasisIndex> MapSpec::domain_basis(const WindowSpec& w) const
{
    std::vector<BasisIndex> out;
    for (const auto& idx : source.basis(w))
        if (rule(idx))
            out.push_back(idx);
    return out;
}

MapSpec compose(const MapSpec& second, const MapSpec& first)
{
    MapSpec out;
    out.name = second.name + " o " + first.name;
    out.anchor = first.anchor;
    out.source = first.source;
    out.target = second.target;
    out.parity_swap = first.parity_swap != second.parity_swap;
    out.rule = [first, second](const BasisIndex& idx) -> std::optional<Vector> {
        auto img = first.rule(idx);
        if (!img)
            return std::nullopt;
        return second.apply(*img);
    };
    return out;
}

CheckResult check_intertwiner(const MapSpec& spec, int mode_bound, const WindowSpec& w)
{
    CheckResult res;
    res.id = "intertwiner." + spec.name;
    res.anchor = spec.anchor;
    res.instance = spec.source.name + " -> " + spec.target.name + " mode_bound=" + std::to_string(mode_bound);
    if (spec.source.algebra != spec.target.algebra)
        throw ConfigError("intertwiner between modules over different algebras");
    auto gens = generators(spec.source.algebra, mode_bound, false);
    for (const auto& idx : spec.domain_basis(w)) {
        Vector v = basis(idx, 1, spec.source.family);
        Vector image = spec.apply(v);
        for (const auto& [j, c] : image.terms()) {
            ++res.checked;
            if (j.parity != (idx.parity ^ static_cast<int>(spec.parity_swap)))
                res.record_failure("parity: " + spec.source.show(v) + " -> " + spec.target.show(image));
        }
        for (const auto& x : gens) {
            Vector lhs = spec.apply(spec.source.act(x, v));
            Vector rhs = spec.target.act(x, image);
            ++res.checked;
            if (!(lhs == rhs))
                res.record_failure(to_string(x) + " on " + spec.source.show(v) +
                                   ": residual " + spec.target.show(lhs - rhs));
        }
    }
    return res;
}

CheckResult check_inverse(const MapSpec& f, const MapSpec& g, const WindowSpec& w)
{
    CheckResult res;
    res.id = "inverse." + f.name;
    res.anchor = f.anchor;
    res.instance = g.name + " o " + f.name + " on " + f.source.name;
    for (const auto& idx : f.domain_basis(w)) {
        Vector v = basis(idx, 1, f.source.family);
        Vector back = g.apply(f.apply(v));
        ++res.checked;
        if (!(back == v))
            res.record_failure(f.source.show(v) + " -> " + g.target.show(back));
    }
    return res;
}

MapSpec phi_map(const FamilyPtr& family)
{
    std::optional<Rational> alpha;
    if (family->tag == FamilyTag::LaurentSeries) {
        if (!family->is_numeric() || family->alpha.size() > 1 ||
            (family->alpha.size() == 1 && family->alpha.begin()->first != 0))
            throw ConfigError("phi needs a numeric constant alpha; got " + family->describe());
        alpha = family->alpha.empty() ? Rational(0) : family->alpha.begin()->second.constant_value();
        if (alpha->get_den() == 1)
            throw ConfigError("phi needs alpha outside Z so that D_t is invertible on the odd part");
    } else if (family->tag != FamilyTag::OmegaLambda) {
        throw ConfigError("phi is implemented for OmegaLambda and constant-alpha LaurentSeries");
    }
    MapSpec m;
    m.name = "phi";
    m.anchor = "isomorphism M_{A,1/2} even + D_t odd = Pi(M_{A,0})";
    m.source = ModuleRef::of(config(Algebra::R, family, rat(1, 2)));
    m.target = ModuleRef::of(config(Algebra::R, family, 0)).parity_changed();
    m.parity_swap = true;
    m.rule = [family, alpha](const BasisIndex& idx) -> std::optional<Vector> {
        if (idx.parity == 0)
            return basis(idx.with_parity(1), -1, family);
        if (alpha)
            return basis(idx.with_parity(0), Rational(1 / (*alpha + idx.tpow)), family);
        if (idx.aux == 0)
            return std::nullopt;
        return basis(BasisIndex::power(0, 0, idx.aux - 1), 1, family);
    };
    return m;
}

MapSpec phi_inverse_map(const FamilyPtr& family)
{
    MapSpec phi = phi_map(family);
    MapSpec m;
    m.name = "phi_inverse";
    m.anchor = phi.anchor;
    m.source = phi.target;
    m.target = phi.source;
    m.parity_swap = true;
    m.rule = [family](const BasisIndex& idx) -> std::optional<Vector> {
        if (idx.parity == 1)
            return basis(idx.with_parity(0), -1, family);
        return weyl_apply(WeylGen::dt(), basis(idx.with_parity(1), 1, family), *family);
    };
    return m;
}

MapSpec psi_quotient_map()
{
    auto fam = FamilySpec::laurent({}, nullptr);
    MapSpec m;
    m.name = "psi_quotient";
    m.anchor = "isomorphism M_{A,1/2} even + D_t odd = M_t";
    m.source = ModuleRef::of(config(Algebra::R, fam, rat(1, 2)));
    // Even source vectors land on the odd quotient vectors, so the target
    // carries the flipped module parity.
    m.target = ModuleRef::of(config(Algebra::R, fam, 0, true)).parity_changed();
    m.parity_swap = true;
    m.rule = [fam](const BasisIndex& idx) -> std::optional<Vector> {
        if (idx.parity == 0)
            return basis(idx.with_parity(1), 1, fam);
        if (idx.tpow == 0)
            return std::nullopt;
        return basis(idx.with_parity(0), rat(-1, idx.tpow), fam);
    };
    return m;
}

MapSpec psi_rank_two_map(const SymScalar& mu, const SymScalar& alpha, bool literal)
{
    RingPtr ring = common_ring(mu.ring(), alpha.ring());
    auto omega = FamilySpec::omega(rehome(mu, ring), ring);
    MapSpec m;
    m.name = literal ? "psi_rank_two_literal" : "psi_rank_two";
    m.anchor = "isomorphism Omega_R(mu, alpha) = Omega_R(lambda, 1/2 - b)";
    m.source = ModuleRef::x_square(mu, alpha);
    m.target = ModuleRef::of(config(Algebra::R, omega, rehome(SymScalar(rat(1, 2)) - alpha, ring)));
    m.parity_swap = true;
    const int step = literal ? 2 : 1;
    m.rule = [omega, step](const BasisIndex& idx) -> std::optional<Vector> {
        BasisIndex img = BasisIndex::power(0, 1 - idx.parity, step * idx.aux);
        return basis(img, idx.parity ? -1 : 1, omega);
    };
    return m;
}

MapSpec parity_change_map(const ModuleRef& mod)
{
    MapSpec m;
    m.name = "Pi";
    m.anchor = "parity change";
    m.source = mod;
    m.target = mod.parity_changed();
    m.rule = [fam = mod.family](const BasisIndex& idx) -> std::optional<Vector> { return basis(idx, 1, fam); };
    return m;
}

// ---------------------------------------------------------------- Hom spaces

HomParity parse_hom_parity(std::string_view s)
{
    if (s == "even")
        return HomParity::Even;
    if (s == "odd")
        return HomParity::Odd;
    if (s == "any")
        return HomParity::Any;
    throw ConfigError("unknown hom parity '" + std::string(s) + "' (expected even, odd or any)");
}

namespace {

Rational numeric(const SymScalar& c, const ModuleRef& m)
{
    if (!c.is_constant())
        throw ConfigError("hom-space computation needs numeric modules; " + m.name + " is symbolic");
    return c.constant_value();
}

} // namespace

HomSpace hom_space(const ModuleRef& source, const ModuleRef& target, int mode_bound, const WindowSpec& w,
                   HomParity parity)
{
    if (source.algebra != target.algebra)
        throw ConfigError("hom space between modules over different algebras");
    const auto src = source.basis(w);
    const auto tgt = target.basis(w);
    std::map<std::pair<BasisIndex, BasisIndex>, int> unknown;  // (target w, source v)
    std::map<BasisIndex, std::vector<BasisIndex>> targets_of;  // v -> admissible w
    for (const auto& v : src)
        for (const auto& t : tgt) {
            const bool same = source.module_parity(v) == target.module_parity(t);
            if ((parity == HomParity::Even && !same) || (parity == HomParity::Odd && same))
                continue;
            unknown.emplace(std::make_pair(t, v), static_cast<int>(unknown.size()));
            targets_of[v].push_back(t);
        }

    HomSpace out;
    out.unknowns = unknown.size();
    RowSpace<int> space;
    for (const auto& x : generators(source.algebra, mode_bound, false)) {
        std::map<BasisIndex, Vector> tgt_image;
        for (const auto& t : tgt)
            tgt_image.emplace(t, target.act(x, Vector::basis(t, 1, target.family)));
        for (const auto& v : src) {
            Vector img = source.act(x, Vector::basis(v, 1, source.family));
            if (window_project(img, w).leaked) {
                ++out.dropped;
                continue;
            }
            // Component u of T(x . v) - x . T(v).
            std::map<BasisIndex, std::map<int, Rational>> eq;
            for (const auto& [vp, c] : img.terms()) {
                auto it = targets_of.find(vp);
                if (it == targets_of.end())
                    continue;
                for (const auto& u : it->second)
                    eq[u][unknown.at({u, vp})] += numeric(c, source);
            }
            for (const auto& t : targets_of[v])
                for (const auto& [u, c] : tgt_image.at(t).terms())
                    eq[u][unknown.at({t, v})] -= numeric(c, target);
            for (const auto& [u, row] : eq) {
                ++out.constraints;
                space.insert(RowSpace<int>::integral(row));
            }
        }
    }
    out.rank = space.rank();
    out.dimension = out.unknowns - out.rank;
    return out;
}

CheckResult hom_dimension_check(const ModuleRef& source, const ModuleRef& target, int mode_bound,
                                const WindowSpec& w, HomParity parity, std::size_t min_dim,
                                std::optional<std::size_t> max_dim)
{
    CheckResult res;
    res.id = "hom_space";
    res.anchor = "isomorphism classification";
    res.instance = source.name + " -> " + target.name + " mode_bound=" + std::to_string(mode_bound) +
                   " t_bound=" + std::to_string(w.t_bound) + " aux_bound=" + std::to_string(w.aux_bound);
    HomSpace h = hom_space(source, target, mode_bound, w, parity);
    res.checked = 1;
    res.skipped = 0;
    res.detail("unknowns", std::to_string(h.unknowns));
    res.detail("rank", std::to_string(h.rank));
    res.detail("dimension", std::to_string(h.dimension));
    res.detail("constraints", std::to_string(h.constraints));
    res.detail("dropped_constraints", std::to_string(h.dropped));
    std::string range = "[" + std::to_string(min_dim) + ", " + (max_dim ? std::to_string(*max_dim) : "inf") + "]";
    if (h.dimension < min_dim || (max_dim && h.dimension > *max_dim))
        res.record_failure("dimension " + std::to_string(h.dimension) + " outside " + range);
    return res;
}

CheckResult witness_non_isomorphism_T(int mode_bound, const WindowSpec& w)
{
    auto fam = FamilySpec::laurent({{0, SymScalar(rat(1, 2))}}, nullptr);
    CheckResult res;
    res.id = "witness.non_isomorphism_T";
    res.anchor = "V_{A,1/2} even + D_t odd is not isomorphic to Pi(V_{A,0})";
    res.instance = fam->describe() + " mode_bound=" + std::to_string(mode_bound) + " t_bound=" +
                   std::to_string(w.t_bound);
    struct Case {
        const char* label;
        ModuleRef source, target;
        std::size_t min_dim;
        std::optional<std::size_t> max_dim;
    };
    const Case cases[] = {
        {"T", ModuleRef::of(config(Algebra::T, fam, rat(1, 2))),
         ModuleRef::of(config(Algebra::T, fam, 0)).parity_changed(), 0, 0},
        {"R", ModuleRef::of(config(Algebra::R, fam, rat(1, 2))),
         ModuleRef::of(config(Algebra::R, fam, 0)).parity_changed(), 1, std::nullopt},
        {"identity", ModuleRef::of(config(Algebra::T, fam, rat(1, 2))),
         ModuleRef::of(config(Algebra::T, fam, rat(1, 2))), 1, std::nullopt},
    };
    for (const auto& c : cases) {
        CheckResult sub = hom_dimension_check(c.source, c.target, mode_bound, w, HomParity::Even, c.min_dim, c.max_dim);
        for (const auto& [k, v] : sub.details)
            if (k == "dimension")
                res.detail(std::string(c.label) + ".dimension", v);
        res.absorb(sub);
    }
    return res;
}

} // namespace ramond
