#include <gtest/gtest.h>

#include "families.hpp"
#include "ramond/weyl.hpp"

using namespace ramond;
using namespace ramond::testing;

TEST(Weyl, Examples)
{
    auto r = ring();
    auto omega = FamilySpec::omega(SymScalar::param(r, "lambda"), r);
    auto lam = SymScalar::param(r, "lambda");
    EXPECT_EQ(weyl_apply(WeylGen::tpow(1), parse_vector("Dt^0", omega), *omega), parse_vector("lambda*Dt^0", omega));
    EXPECT_EQ(weyl_word_apply({WeylGen::tpow(1), WeylGen::dt()}, parse_vector("Dt^0", omega), *omega),
              parse_vector("lambda*Dt^1 - lambda*Dt^0", omega));

    auto lau = FamilySpec::laurent(parse_laurent("alpha", r), r);
    EXPECT_EQ(weyl_apply(WeylGen::dt(), parse_vector("xi*t^3", lau), *lau), parse_vector("(alpha + 3)*xi*t^3", lau));
    EXPECT_TRUE(weyl_word_apply({WeylGen::xi(), WeylGen::dxi()}, parse_vector("t^0", lau), *lau).is_zero());
    EXPECT_EQ(weyl_word_apply({WeylGen::xi(), WeylGen::dxi()}, parse_vector("xi*t^0", lau), *lau),
              parse_vector("xi*t^0", lau));
    EXPECT_THROW(weyl_apply(WeylGen::ddt(), parse_vector("t^0", lau), *lau), ConfigError);

    auto d2 = FamilySpec::degree_two(parse_laurent("f0 + f1*t", r), r);
    EXPECT_EQ(weyl_apply(WeylGen::dt(), parse_vector("t^0*Dt^1", d2), *d2), parse_vector("f0*t^0 + f1*t^1", d2));

    auto frac = FamilySpec::fraction({0, 1}, {rat(1, 2), rat(1, 2)}, nullptr);
    EXPECT_EQ(weyl_apply(WeylGen::ddt(), parse_vector("t^0", frac), *frac),
              parse_vector("1/2*t^-1 + 1/2*(t-b1)^-1", frac));
}

namespace {

std::vector<BasisIndex> sample_basis(const Sample& s)
{
    WindowSpec w = s.window;
    w.t_bound = std::min(w.t_bound, 2);
    return window_basis(*s.family, w);
}

} // namespace

// Defining relations of the Weyl superalgebra as operator identities.
TEST(WeylProperty, DefiningRelations)
{
    auto r = ring();
    for (const auto& s : symbolic_samples(r)) {
        const FamilySpec& f = *s.family;
        for (const auto& idx : sample_basis(s)) {
            Vector v = Vector::basis(idx, 1, s.family);
            auto W = [&](std::vector<WeylGen> w) { return weyl_word_apply(w, v, f); };
            for (int m = -4; m <= 4; ++m) {
                // [D_t, t^m] = m t^m
                EXPECT_EQ(W({WeylGen::dt(), WeylGen::tpow(m)}) - W({WeylGen::tpow(m), WeylGen::dt()}),
                          SymScalar(m) * W({WeylGen::tpow(m)}))
                    << s.name << " m=" << m;
                for (int m2 = -2; m2 <= 2; ++m2)
                    EXPECT_EQ(W({WeylGen::tpow(m), WeylGen::tpow(m2)}), W({WeylGen::tpow(m + m2)})) << s.name;
                EXPECT_EQ(W({WeylGen::tpow(m), WeylGen::xi()}), W({WeylGen::xi(), WeylGen::tpow(m)})) << s.name;
            }
            EXPECT_EQ(W({WeylGen::dxi(), WeylGen::xi()}) + W({WeylGen::xi(), WeylGen::dxi()}), v) << s.name;
            EXPECT_TRUE(W({WeylGen::xi(), WeylGen::xi()}).is_zero());
            EXPECT_TRUE(W({WeylGen::dxi(), WeylGen::dxi()}).is_zero());
            EXPECT_EQ(W({WeylGen::dt(), WeylGen::xi()}), W({WeylGen::xi(), WeylGen::dt()})) << s.name;
            EXPECT_EQ(W({WeylGen::tpow(0)}), v);
            if (f.tag == FamilyTag::DegreeN || f.tag == FamilyTag::Fraction) {
                EXPECT_EQ(W({WeylGen::dt()}), W({WeylGen::tpow(1), WeylGen::ddt()}));
                // [d/dt, t] = 1
                EXPECT_EQ(W({WeylGen::ddt(), WeylGen::tpow(1)}) - W({WeylGen::tpow(1), WeylGen::ddt()}), v);
            }
        }
    }
}

TEST(WeylProperty, Parity)
{
    auto r = ring();
    for (const auto& s : symbolic_samples(r))
        for (const auto& idx : sample_basis(s)) {
            Vector v = Vector::basis(idx, 1, s.family);
            for (auto g : {WeylGen::tpow(2), WeylGen::tpow(-1), WeylGen::dt(), WeylGen::xi(), WeylGen::dxi()}) {
                Vector img = weyl_apply(g, v, *s.family);
                if (img.is_zero())
                    continue;
                ASSERT_TRUE(img.parity().has_value());
                EXPECT_EQ(*img.parity(), g.flips_parity() ? 1 - idx.parity : idx.parity);
            }
        }
}

// Oracle: Leibniz d^n t^p = sum_j C(n,j) p(p-1)..(p-j+1) t^(p-j) d^(n-j), then
// reduce t^q d^e (n <= e < 2n) with d^n = t on the right:
// t^q d^(e-n) t = t^(q+1) d^(e-n) + (e-n) t^q d^(e-n-1).
TEST(WeylProperty, DegreeNQuotientRelation)
{
    for (int n = 1; n <= 4; ++n) {
        auto fam = FamilySpec::degree_n(n, nullptr);
        for (int p = -4; p <= 4; ++p)
            for (int a = 0; a < n; ++a) {
                Vector v = Vector::basis(BasisIndex::power(p, 0, a), 1, fam);
                std::vector<WeylGen> word(static_cast<std::size_t>(n), WeylGen::ddt());
                Vector lhs = weyl_word_apply(word, v, *fam);
                Vector rhs;
                Integer binom = 1;
                for (int j = 0; j <= n; ++j) {
                    Integer fall = 1;
                    for (int i = 0; i < j; ++i)
                        fall *= (p - i);
                    SymScalar c(Rational(binom * fall));
                    const int q = p - j, e = a + n - j;
                    if (e < n) {
                        rhs.add_term(BasisIndex::power(q, 0, e), c);
                    } else {
                        rhs.add_term(BasisIndex::power(q + 1, 0, e - n), c);
                        if (e > n)
                            rhs.add_term(BasisIndex::power(q, 0, e - n - 1), c * SymScalar(e - n));
                    }
                    binom = binom * (n - j) / (j + 1);
                }
                EXPECT_EQ(lhs, rhs) << "n=" << n << " p=" << p << " a=" << a;
                for (const auto& [idx, c] : lhs.terms())
                    EXPECT_LT(idx.aux, n);
            }
    }
}
