#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "families.hpp"
#include "ramond/probes.hpp"

using namespace ramond;
using namespace ramond::testing;

namespace {

ActionConfig config(Algebra a, FamilyPtr f, SymScalar b)
{
    ActionConfig c;
    c.algebra = a;
    c.family = std::move(f);
    c.b = std::move(b);
    return c;
}

WindowSpec window(int t_bound, int mode_bound, int aux_bound = 0, int pole_bound = 0)
{
    WindowSpec w;
    w.t_bound = t_bound;
    w.mode_bound = mode_bound;
    w.aux_bound = aux_bound;
    w.pole_bound = pole_bound;
    return w;
}

FamilyPtr laurent(const char* alpha) { return FamilySpec::laurent(parse_laurent(alpha, nullptr), nullptr); }

// Coefficients of the polynomial through (k, values[k]), k = 0..n-1, by
// solving the Vandermonde system with exact rationals.
std::vector<Vector> interpolate(const std::vector<Vector>& values, const FamilyPtr& fam)
{
    const int n = static_cast<int>(values.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        Rational x = 1;
        for (int d = 0; d < n; ++d, x *= i)
            a[i][d] = x;
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (a[piv][c] == 0)
            ++piv;
        std::swap(a[c], a[piv]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (int r = 0; r < n; ++r)
            if (r != c && a[r][c] != 0) {
                Rational f = a[r][c];
                for (int k = 0; k < 2 * n; ++k)
                    a[r][k] -= f * a[c][k];
            }
    }
    std::vector<Vector> coeffs(n, Vector(fam));
    for (int d = 0; d < n; ++d)
        for (int i = 0; i < n; ++i)
            coeffs[d] += SymScalar(Rational(a[d][n + i])) * values[i];
    return coeffs;
}

} // namespace

TEST(Orbit, TrivialSubmodule)
{
    auto fam = laurent("0");
    auto cfg = config(Algebra::R, fam, 0);
    auto o = orbit_span(cfg, parse_vector("t^0", fam), window(4, 1), 10);
    EXPECT_EQ(o.span_dim, 1u);
    EXPECT_FALSE(o.filled_inner);
    EXPECT_TRUE(o.converged);
    auto rep = orbit_report(cfg, parse_vector("t^0", fam), window(4, 1), 10, false);
    EXPECT_TRUE(rep.passed());
}

TEST(Orbit, FillsInnerWindow)
{
    auto lau = laurent("1/2");
    auto o = orbit_span(config(Algebra::R, lau, rat(1, 3)), parse_vector("t^0", lau), window(6, 2), 20);
    EXPECT_TRUE(o.filled_inner) << o.missing.size() << " missing";
    EXPECT_EQ(o.inner_window_dim, 2u * 9u);

    auto omega = FamilySpec::omega(2, nullptr);
    auto ot = orbit_span(config(Algebra::T, omega, rat(1, 3)), parse_vector("Dt^0", omega), window(6, 2, 5), 20);
    EXPECT_TRUE(ot.filled_inner);
    EXPECT_LE(ot.span_dim, window_basis(*omega, window(6, 2, 5)).size());
}

TEST(Orbit, RejectsBadInput)
{
    auto r = ring();
    auto sym = FamilySpec::laurent(parse_laurent("alpha", r), r);
    EXPECT_THROW(orbit_span(config(Algebra::R, sym, rat(1, 3)), parse_vector("t^0", sym), window(4, 1), 5), ConfigError);
    auto lau = laurent("1/2");
    auto cfg = config(Algebra::R, lau, rat(1, 3));
    EXPECT_THROW(orbit_span(cfg, Vector(lau), window(4, 1), 5), ConfigError);
    EXPECT_THROW(orbit_span(cfg, parse_vector("t^9", lau), window(4, 1), 5), ConfigError);
}

TEST(Orbit, MonotoneInWindow)
{
    auto lau = laurent("1/2");
    auto cfg = config(Algebra::R, lau, 2);
    auto seed = parse_vector("t^0", lau);
    auto small = orbit_span(cfg, seed, window(4, 2), 20);
    auto large = orbit_span(cfg, seed, window(6, 2), 20);
    for (const auto& idx : inner_window(cfg, window(4, 2)))
        if (small.span.contains(Span::Row{{idx, Integer(1)}}))
            EXPECT_TRUE(large.span.contains(Span::Row{{idx, Integer(1)}}));
    EXPECT_GE(large.span_dim, small.span_dim);
}

TEST(Orbit, GeneratorOrderIndependent)
{
    auto fam = FamilySpec::degree_two(parse_laurent("t", nullptr), nullptr);
    auto cfg = config(Algebra::T, fam, -1);
    auto w = window(4, 1, 1);
    auto seed = parse_vector("t^0", fam);
    auto gens = generators(Algebra::T, 1, false);
    auto base = orbit_span(cfg, seed, w, 20, gens);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 3; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        auto o = orbit_span(cfg, seed, w, 20, gens);
        EXPECT_TRUE(o.span == base.span);
    }
}

TEST(Closure, DocumentedCandidates)
{
    auto w = window(4, 1);
    auto alpha_t = laurent("t");
    auto half = config(Algebra::R, alpha_t, rat(1, 2));
    auto cand = candidate_even_plus_dt_odd(half, w);
    auto res = submodule_closure(half, cand, w);
    EXPECT_TRUE(res.passed()) << (res.failures.empty() ? "" : res.failures[0]);
    EXPECT_GT(res.checked, 0);
    // (alpha + i) xi t^i = xi t^(i+1) + i xi t^i
    EXPECT_NE(std::find(cand.begin(), cand.end(), parse_vector("xi*t^2 + xi*t^1", alpha_t)), cand.end());

    auto zero = laurent("0");
    auto triv = config(Algebra::R, zero, 0);
    EXPECT_TRUE(submodule_closure(triv, candidate_constant(triv), w).passed());

    auto lau = laurent("1/2");
    auto generic = config(Algebra::R, lau, rat(1, 3));
    auto esc = submodule_closure(generic, candidate_even_part(generic, w), w);
    EXPECT_FALSE(esc.passed());
    auto it = std::find_if(esc.details.begin(), esc.details.end(), [](auto& d) { return d.first == "witness"; });
    ASSERT_NE(it, esc.details.end());
    EXPECT_EQ(it->second.rfind("G_", 0), 0u);
}

TEST(Closure, HalfTwistOrbitStaysInCandidate)
{
    auto w = window(5, 1);
    auto fam = laurent("t");
    auto cfg = config(Algebra::R, fam, rat(1, 2));
    Span cand;
    for (const auto& u : candidate_even_plus_dt_odd(cfg, w))
        cand.insert(numeric_row(u));
    auto o = orbit_span(cfg, parse_vector("t^0", fam), w, 20);
    for (const auto& [pivot, row] : o.span.rows())
        EXPECT_TRUE(cand.contains(row));
}

TEST(KPolynomial, Examples)
{
    auto r = ring();
    auto b = SymScalar::param(r, "b");
    auto lau = FamilySpec::laurent(parse_laurent("alpha", r), r);
    auto cfg = config(Algebra::R, lau, b);
    auto t0 = parse_vector("t^0", lau);
    auto lg = extract_k_polynomial(cfg, WordFamily::LG, 0, t0);
    EXPECT_EQ(lg.at(2), parse_vector("(b - 2*b^2)*xi*t^0", lau));
    auto gg = extract_k_polynomial(cfg, WordFamily::GG, 0, t0);
    EXPECT_EQ(gg.at(1), parse_vector("2*b*t^0", lau));
    auto lg1 = extract_k_polynomial(cfg, WordFamily::LG, 1, parse_vector("xi*t^0", lau));
    EXPECT_EQ(lg1.count(2), 0u);

    EXPECT_THROW(extract_k_polynomial(cfg.over(Algebra::T), WordFamily::LG, 0, t0), ConfigError);
    auto kr = ParamRing::standard({"k"});
    auto kfam = FamilySpec::laurent(parse_laurent("k", kr), kr);
    EXPECT_THROW(extract_k_polynomial(config(Algebra::R, kfam, 1), WordFamily::LG, 0, parse_vector("t^0", kfam)),
                 ConfigError);
    EXPECT_EQ(parse_word_family("GG"), WordFamily::GG);
    EXPECT_THROW(parse_word_family("LL"), ConfigError);
}

// Independent oracle: evaluate the composite at k = 0..4 through the module
// action and interpolate.
TEST(KPolynomial, MatchesInterpolation)
{
    auto r = ring();
    auto b = SymScalar::param(r, "b");
    for (const auto& s : symbolic_samples(r)) {
        auto cfg = config(Algebra::R, s.family, b);
        for (const auto& idx : window_basis(*s.family, s.window))
            for (int m = -2; m <= 2; ++m)
                for (auto fam : {WordFamily::LG, WordFamily::GG}) {
                    Vector v = Vector::basis(idx, 1, s.family);
                    std::vector<Vector> values;
                    for (int k = 0; k < 5; ++k) {
                        Generator first = fam == WordFamily::LG ? Generator::L(Algebra::R, k) : Generator::G(k);
                        values.push_back(act(first, act(Generator::G(m - k), v, cfg), cfg));
                    }
                    auto want = interpolate(values, s.family);
                    auto got = extract_k_polynomial(cfg, fam, m, v);
                    for (int d = 0; d < 5; ++d) {
                        Vector g = got.count(d) ? got.at(d) : Vector(s.family);
                        EXPECT_EQ(g, want[d]) << s.name << " m=" << m << " d=" << d << " v=" << to_string(v);
                    }
                    EXPECT_TRUE(got.empty() || got.rbegin()->first < 5);
                }
    }
}

TEST(KPolynomial, IdentitiesHoldSymbolically)
{
    auto r = ring();
    auto b = SymScalar::param(r, "b");
    for (const auto& s : symbolic_samples(r)) {
        auto res = check_k_identities(config(Algebra::R, s.family, b), 3, s.window);
        EXPECT_TRUE(res.passed()) << s.name << ": " << (res.failures.empty() ? "" : res.failures[0]);
    }
}

TEST(RestrictedContrast, Examples)
{
    auto f = FamilySpec::degree_two(parse_laurent("t", nullptr), nullptr);
    auto cfg = config(Algebra::R, f, rat(1, 3));
    EXPECT_TRUE(annihilating_modes(cfg, parse_vector("t^0", f), 6).empty());
    EXPECT_TRUE(restricted_contrast(cfg, parse_vector("t^0", f), 6).passed());

    auto zero = laurent("0");
    auto triv = config(Algebra::R, zero, 0);
    EXPECT_EQ(annihilating_modes(triv, parse_vector("t^0", zero), 6), (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
    EXPECT_TRUE(restricted_contrast(triv, parse_vector("t^0", zero), 6, false).passed());

    auto omega = FamilySpec::omega(2, nullptr);
    auto co = config(Algebra::R, omega, rat(1, 3));
    EXPECT_TRUE(annihilating_modes(co, parse_vector("Dt^0", omega), 6).empty());
    EXPECT_THROW(annihilating_modes(co, Vector(omega), 6), ConfigError);
}
