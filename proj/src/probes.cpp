#include "ramond/probes.hpp"

#include <algorithm>

#include "ramond/parallel.hpp"

namespace ramond {

Span::Row numeric_row(const Vector& v)
{
    std::map<BasisIndex, Rational> q;
    for (const auto& [idx, c] : v.terms())
        q[idx] = c.constant_value();
    return Span::integral(q);
}

namespace {

Vector row_vector(const Span::Row& row, const FamilyPtr& family)
{
    Vector v(family);
    for (const auto& [idx, c] : row)
        v.add_term(idx, SymScalar(Rational(c)));
    return v;
}

void require_numeric(const ActionConfig& cfg, const char* what)
{
    cfg.validate();
    if (!cfg.is_numeric())
        throw ConfigError(std::string(what) + " needs numeric parameters; got " + cfg.describe());
}

std::string index_text(const BasisIndex& idx, const FamilySpec& fam) { return to_string(idx, fam); }

} // namespace

std::vector<BasisIndex> inner_window(const ActionConfig& cfg, const WindowSpec& w)
{
    return module_basis(cfg, w.inner());
}

// ---------------------------------------------------------------- orbit span

OrbitResult orbit_span(const ActionConfig& cfg, const Vector& seed, const WindowSpec& w, int max_rounds,
                       const std::optional<std::vector<Generator>>& order)
{
    require_numeric(cfg, "orbit_span");
    if (w.t_bound <= w.mode_bound && cfg.family->tag != FamilyTag::OmegaLambda)
        throw ConfigError("window needs t_bound > mode_bound");
    if (seed.is_zero())
        throw ConfigError("orbit seed must be nonzero");
    if (window_project(seed, w).leaked)
        throw ConfigError("orbit seed lies outside the window");
    std::vector<Generator> gens = order ? *order : generators(cfg.algebra, w.mode_bound, false);

    OrbitResult res;
    res.span.insert(numeric_row(seed));
    std::map<BasisIndex, Span::Row> processed;
    for (res.rounds = 0; res.rounds < max_rounds;) {
        std::vector<Vector> todo;
        for (const auto& [pivot, row] : res.span.rows()) {
            auto it = processed.find(pivot);
            if (it != processed.end() && it->second == row)
                continue;
            todo.push_back(row_vector(row, cfg.family));
        }
        processed = res.span.rows();
        ++res.rounds;
        std::vector<std::vector<Vector>> images(todo.size());
        parallel_for(todo.size(), [&](std::size_t i) {
            for (const auto& g : gens)
                images[i].push_back(act(g, todo[i], cfg));
        });
        bool grew = false;
        for (const auto& batch : images)
            for (const auto& img : batch) {
                if (img.is_zero())
                    continue;
                if (window_project(img, w).leaked) {
                    ++res.leaked_images;
                    continue;
                }
                grew = res.span.insert(numeric_row(img)) || grew;
            }
        if (!grew) {
            res.converged = true;
            break;
        }
    }
    res.span_dim = res.span.rank();
    auto inner = inner_window(cfg, w);
    res.inner_window_dim = inner.size();
    for (const auto& idx : inner)
        if (!res.span.contains(Span::Row{{idx, Integer(1)}}))
            res.missing.push_back(idx);
    res.filled_inner = res.missing.empty();
    return res;
}

CheckResult orbit_report(const ActionConfig& cfg, const Vector& seed, const WindowSpec& w, int max_rounds,
                         bool expect_filled)
{
    CheckResult res;
    res.id = std::string("orbit.") + std::string(algebra_name(cfg.algebra));
    res.anchor = cfg.algebra == Algebra::R ? "irreducibility of M_{A,b}" : "irreducibility of V_{A,b}";
    res.instance = cfg.describe() + " seed=" + to_string(seed, *cfg.family) + " t_bound=" + std::to_string(w.t_bound) +
                   " mode_bound=" + std::to_string(w.mode_bound) + " aux_bound=" + std::to_string(w.aux_bound) +
                   " pole_bound=" + std::to_string(w.pole_bound);
    OrbitResult o = orbit_span(cfg, seed, w, max_rounds);
    res.checked = 1;
    res.detail("label", "finite-window evidence only, not a proof of irreducibility");
    res.detail("span_dim", std::to_string(o.span_dim));
    res.detail("inner_window_dim", std::to_string(o.inner_window_dim));
    res.detail("filled_inner", o.filled_inner ? "true" : "false");
    res.detail("rounds", std::to_string(o.rounds));
    res.detail("converged", o.converged ? "true" : "false");
    res.detail("leaked_images", std::to_string(o.leaked_images));
    if (!o.missing.empty()) {
        std::string miss;
        for (std::size_t i = 0; i < o.missing.size() && i < 8; ++i)
            miss += (i ? ", " : "") + index_text(o.missing[i], *cfg.family);
        if (o.missing.size() > 8)
            miss += ", ...";
        res.detail("missing", miss);
    }
    if (o.filled_inner != expect_filled)
        res.record_failure(std::string("expected filled_inner=") + (expect_filled ? "true" : "false") + ", got " +
                           (o.filled_inner ? "true" : "false") + " (span_dim " + std::to_string(o.span_dim) + ")");
    return res;
}

// ---------------------------------------------------------------- closure

CheckResult submodule_closure(const ActionConfig& cfg, const std::vector<Vector>& candidate, const WindowSpec& w,
                              const std::string& anchor)
{
    require_numeric(cfg, "submodule_closure");
    CheckResult res;
    res.id = std::string("closure.") + std::string(algebra_name(cfg.algebra));
    res.anchor = anchor;
    res.instance = cfg.describe() + " candidate_size=" + std::to_string(candidate.size()) +
                   " t_bound=" + std::to_string(w.t_bound) + " mode_bound=" + std::to_string(w.mode_bound);
    Span span;
    for (const auto& u : candidate) {
        if (window_project(u, w).leaked)
            throw ConfigError("candidate vector " + to_string(u, *cfg.family) + " lies outside the window");
        span.insert(numeric_row(u));
    }
    res.detail("candidate_dim", std::to_string(span.rank()));
    auto gens = generators(cfg.algebra, w.mode_bound, false);
    for (const auto& u : candidate)
        for (const auto& g : gens) {
            Vector img = act(g, u, cfg);
            if (window_project(img, w).leaked) {
                ++res.skipped;
                continue;
            }
            ++res.checked;
            if (!span.contains(numeric_row(img))) {
                if (res.failed == 0)
                    res.detail("witness", to_string(g) + " . (" + to_string(u, *cfg.family) + ") = " +
                                              to_string(img, *cfg.family));
                res.record_failure(to_string(g) + " . (" + to_string(u, *cfg.family) + ") escapes: " +
                                   to_string(img, *cfg.family));
            }
        }
    return res;
}

std::vector<Vector> candidate_constant(const ActionConfig& cfg)
{
    return {Vector::basis(BasisIndex::power(0, 0), 1, cfg.family)};
}

std::vector<Vector> candidate_even_part(const ActionConfig& cfg, const WindowSpec& w)
{
    std::vector<Vector> out;
    for (const auto& idx : module_basis(cfg, w))
        if (idx.parity == 0)
            out.push_back(Vector::basis(idx, 1, cfg.family));
    return out;
}

std::vector<Vector> candidate_even_plus_dt_odd(const ActionConfig& cfg, const WindowSpec& w)
{
    std::vector<Vector> out = candidate_even_part(cfg, w);
    for (const auto& idx : module_basis(cfg, w)) {
        if (idx.parity == 0)
            continue;
        Vector d = weyl_apply(WeylGen::dt(), Vector::basis(idx, 1, cfg.family), *cfg.family);
        if (!d.is_zero() && !window_project(d, w).leaked)
            out.push_back(d);
    }
    return out;
}

// ---------------------------------------------------------------- k-polynomials

WordFamily parse_word_family(std::string_view s)
{
    if (s == "LG")
        return WordFamily::LG;
    if (s == "GG")
        return WordFamily::GG;
    throw ConfigError("unknown word family '" + std::string(s) + "' (expected LG or GG)");
}

namespace {

// Normal-ordered operator t^(s0 + s1 k) xi^a d_xi^c D_t^j with coefficients
// in the ring extended by the formal mode k.
struct OpKey {
    int s0 = 0, s1 = 0, a = 0, c = 0, j = 0;
    friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

class SymOp {
public:
    explicit SymOp(RingPtr ring) : ring_(std::move(ring)) {}

    void add(const OpKey& k, const SymScalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const std::map<OpKey, SymScalar>& terms() const { return terms_; }
    const RingPtr& ring() const { return ring_; }

    // D_t^j t^s = t^s (D_t + s)^j and d_xi xi = 1 - xi d_xi.
    friend SymOp operator*(const SymOp& x, const SymOp& y)
    {
        SymOp out(x.ring_);
        const SymScalar K = SymScalar::param(x.ring_, "k");
        for (const auto& [kx, cx] : x.terms_)
            for (const auto& [ky, cy] : y.terms_) {
                std::vector<std::pair<int, int>> grass;  // (a, c) exponents after reordering
                std::vector<SymScalar> gcoef;
                if (kx.c == 1 && ky.a == 1) {
                    grass.emplace_back(kx.a, ky.c);
                    gcoef.emplace_back(1);
                    grass.emplace_back(kx.a + 1, ky.c + 1);
                    gcoef.emplace_back(-1);
                } else {
                    grass.emplace_back(kx.a + ky.a, kx.c + ky.c);
                    gcoef.emplace_back(1);
                }
                SymScalar shift = SymScalar::constant(x.ring_, ky.s0) + SymScalar(ky.s1) * K;
                Integer binom = 1;
                for (int i = 0; i <= kx.j; ++i) {
                    // C(j, i) shift^(j-i) D_t^(i + j')
                    SymScalar coeff = SymScalar(Rational(binom)) * shift.pow(kx.j - i) * cx * cy;
                    binom = binom * (kx.j - i) / (i + 1);
                    for (std::size_t g = 0; g < grass.size(); ++g) {
                        auto [a, c] = grass[g];
                        if (a > 1 || c > 1)
                            continue;
                        out.add(OpKey{kx.s0 + ky.s0, kx.s1 + ky.s1, a, c, i + ky.j}, gcoef[g] * coeff);
                    }
                }
            }
        return out;
    }

private:
    RingPtr ring_;
    std::map<OpKey, SymScalar> terms_;
};

// L_mu = t^mu (D_t + mu b + (mu/2) xi d_xi), mu = m0 + m1 k.
SymOp op_L(const RingPtr& ring, int m0, int m1, const SymScalar& b)
{
    SymScalar mu = SymScalar::constant(ring, m0) + SymScalar(m1) * SymScalar::param(ring, "k");
    SymOp op(ring);
    op.add({m0, m1, 0, 0, 1}, SymScalar::constant(ring, 1));
    op.add({m0, m1, 0, 0, 0}, mu * b);
    op.add({m0, m1, 1, 1, 0}, mu.divided_by(2));
    return op;
}

// G_mu = t^mu (xi D_t + 2 mu b xi - d_xi)
SymOp op_G(const RingPtr& ring, int m0, int m1, const SymScalar& b)
{
    SymScalar mu = SymScalar::constant(ring, m0) + SymScalar(m1) * SymScalar::param(ring, "k");
    SymOp op(ring);
    op.add({m0, m1, 1, 0, 1}, SymScalar::constant(ring, 1));
    op.add({m0, m1, 1, 0, 0}, SymScalar(2) * mu * b);
    op.add({m0, m1, 0, 1, 0}, SymScalar::constant(ring, -1));
    return op;
}

RingPtr k_ring(const RingPtr& base)
{
    if (base && base->has("k"))
        throw ConfigError("parameter 'k' is reserved for the formal mode");
    return base ? base->extended({{"k", false}})
                : std::make_shared<const ParamRing>(std::vector<ParamRing::Param>{{"k", false}});
}

} // namespace

std::map<int, Vector> extract_k_polynomial(const ActionConfig& cfg, WordFamily family, int m, const Vector& v)
{
    cfg.validate();
    if (cfg.algebra != Algebra::R)
        throw ConfigError("k-polynomial identities are stated for R configurations");
    RingPtr base = common_ring(cfg.family->ring, cfg.b.ring());
    RingPtr ring = k_ring(base);
    SymScalar b = rehome(cfg.b, ring);
    SymOp first = family == WordFamily::LG ? op_L(ring, 0, 1, b) : op_G(ring, 0, 1, b);
    SymOp composite = first * op_G(ring, m, -1, b);

    std::map<int, WeylOp> by_degree;
    for (const auto& [key, c] : composite.terms()) {
        RAMOND_ASSERT(key.s1 == 0 && key.s0 == m, "composite word must shift t by m");
        std::vector<WeylGen> word{WeylGen::tpow(m)};
        if (key.a)
            word.push_back(WeylGen::xi());
        if (key.c)
            word.push_back(WeylGen::dxi());
        for (int i = 0; i < key.j; ++i)
            word.push_back(WeylGen::dt());
        for (const auto& [deg, coeff] : c.coefficients_in("k"))
            by_degree[deg].push_back(WeylTerm{rehome(coeff, base), word});
    }
    std::map<int, Vector> out;
    for (const auto& [deg, op] : by_degree) {
        Vector img = weyl_op_apply(op, v, *cfg.family);
        if (!img.is_zero())
            out.emplace(deg, std::move(img));
    }
    return out;
}

CheckResult check_k_identities(const ActionConfig& cfg, int mode_bound, const WindowSpec& w)
{
    cfg.validate();
    CheckResult res;
    res.id = "identities.k_polynomial";
    res.anchor = "k-polynomial identities in the irreducibility argument";
    res.instance = cfg.describe() + " mode_bound=" + std::to_string(mode_bound) + " t_bound=" +
                   std::to_string(w.t_bound);
    const FamilySpec& fam = *cfg.family;
    const SymScalar& b = cfg.b;
    const SymScalar lg_coeff = b * (SymScalar(1) - SymScalar(2) * b);
    for (const auto& idx : module_basis(cfg, w)) {
        Vector v = Vector::basis(idx, 1, cfg.family);
        for (int m = -mode_bound; m <= mode_bound; ++m) {
            auto lg = extract_k_polynomial(cfg, WordFamily::LG, m, v);
            Vector want_lg = lg_coeff * weyl_word_apply({WeylGen::tpow(m), WeylGen::xi()}, v, fam);
            Vector got_lg = lg.count(2) ? lg.at(2) : Vector(cfg.family);
            ++res.checked;
            if (!(got_lg == want_lg))
                res.record_failure("LG m=" + std::to_string(m) + " v=" + to_string(v, fam) + ": k^2 coefficient " +
                                   to_string(got_lg, fam) + ", expected " + to_string(want_lg, fam));
            auto gg = extract_k_polynomial(cfg, WordFamily::GG, m, v);
            Vector want_gg = SymScalar(2) * b * weyl_apply(WeylGen::tpow(m), v, fam) +
                             (SymScalar(1) - SymScalar(4) * b) *
                                 weyl_word_apply({WeylGen::xi(), WeylGen::tpow(m), WeylGen::dxi()}, v, fam);
            Vector got_gg = gg.count(1) ? gg.at(1) : Vector(cfg.family);
            ++res.checked;
            if (!(got_gg == want_gg))
                res.record_failure("GG m=" + std::to_string(m) + " v=" + to_string(v, fam) + ": k coefficient " +
                                   to_string(got_gg, fam) + ", expected " + to_string(want_gg, fam));
        }
    }
    return res;
}

// ---------------------------------------------------------------- restricted contrast

std::vector<int> annihilating_modes(const ActionConfig& cfg, const Vector& v, int mode_bound)
{
    cfg.validate();
    if (v.is_zero())
        throw ConfigError("restricted contrast needs a nonzero vector");
    std::vector<int> out;
    auto gens = generators(cfg.algebra, mode_bound, false);
    for (int k = 0; k <= mode_bound; ++k) {
        bool all_zero = true;
        for (const auto& g : gens)
            if (g.mode == k && !act(g, v, cfg).is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero)
            out.push_back(k);
    }
    return out;
}

CheckResult restricted_contrast(const ActionConfig& cfg, const Vector& v, int mode_bound, bool expect_empty)
{
    CheckResult res;
    res.id = "restricted_contrast";
    res.anchor = "contrast with restricted modules";
    res.instance = cfg.describe() + " v=" + to_string(v, *cfg.family) + " mode_bound=" + std::to_string(mode_bound);
    auto modes = annihilating_modes(cfg, v, mode_bound);
    std::string list;
    for (std::size_t i = 0; i < modes.size(); ++i)
        list += (i ? "," : "") + std::to_string(modes[i]);
    res.detail("annihilating_modes", "[" + list + "]");
    res.checked = 1;
    if (modes.empty() != expect_empty)
        res.record_failure(expect_empty ? "modes annihilate v: [" + list + "]" : "no mode annihilates v");
    return res;
}

} // namespace ramond
