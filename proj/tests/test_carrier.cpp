#include <gtest/gtest.h>

#include <random>

#include "ramond/carrier.hpp"

using namespace ramond;

namespace {

RingPtr ring() { return ParamRing::standard({"b", "lambda", "alpha"}); }

} // namespace

TEST(Vector, Examples)
{
    auto r = ring();
    auto fam = FamilySpec::laurent(parse_laurent("alpha", r), r);
    auto t2 = parse_vector("t^2", fam);
    EXPECT_TRUE((t2 + (-t2)).is_zero());
    auto two = parse_vector("xi*t^0 + xi*t^1", fam);
    EXPECT_EQ(two.size(), 2u);
    EXPECT_EQ(two.parity(), 1);
    auto a = SymScalar::param(r, "alpha");
    auto v = vec_add(vec_scale(a + SymScalar(1), parse_vector("xi*t^1", fam)),
                     vec_scale(-a, parse_vector("xi*t^1", fam)));
    EXPECT_EQ(v, parse_vector("xi*t^1", fam));
    EXPECT_FALSE((t2 + two).parity().has_value());
    EXPECT_TRUE(vec_scale(0, parse_vector("t^3", fam)).is_zero());
    auto l = SymScalar::param(r, "lambda");
    EXPECT_EQ(vec_scale(l.pow(-1), vec_scale(l, parse_vector("t^0", fam))), parse_vector("t^0", fam));
}

TEST(Vector, FamilyMismatch)
{
    auto r = ring();
    auto f1 = FamilySpec::laurent({}, r);
    auto f2 = FamilySpec::omega(SymScalar::param(r, "lambda"), r);
    EXPECT_THROW(parse_vector("t^0", f1) + parse_vector("Dt^0", f2), ConfigError);
}

TEST(Window, Project)
{
    auto fam = FamilySpec::laurent({}, nullptr);
    WindowSpec w;
    w.t_bound = 4;
    auto p = window_project(parse_vector("t^5", fam), w);
    EXPECT_TRUE(p.kept.is_zero());
    EXPECT_TRUE(p.leaked);
    p = window_project(parse_vector("t^3 + xi*t^6", fam), w);
    EXPECT_EQ(p.kept, parse_vector("t^3", fam));
    EXPECT_TRUE(p.leaked);
    p = window_project(parse_vector("xi*t^2", fam), w);
    EXPECT_FALSE(p.leaked);
    auto again = window_project(p.kept, w);
    EXPECT_EQ(again.kept, p.kept);
}

TEST(Window, Basis)
{
    auto fam = FamilySpec::degree_two({}, nullptr);
    WindowSpec w;
    w.t_bound = 1;
    w.aux_bound = 5;
    auto basis = window_basis(*fam, w);
    EXPECT_EQ(basis.size(), 12u);  // 2 parities * 3 tpows * 2 aux
    EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
}

TEST(Family, Validation)
{
    EXPECT_THROW(FamilySpec::degree_n(0, nullptr), ConfigError);
    EXPECT_THROW(FamilySpec::fraction({1, 2}, {rat(1, 2), rat(1, 2)}, nullptr), ConfigError);
    EXPECT_THROW(FamilySpec::fraction({0, 0}, {rat(1, 2), rat(1, 2)}, nullptr), ConfigError);
    EXPECT_THROW(FamilySpec::fraction({0, 1}, {1, 2}, nullptr), ConfigError);
    EXPECT_NO_THROW(FamilySpec::fraction({0, 1}, {rat(1, 2), rat(1, 2)}, nullptr));
}

TEST(Parse, RoundTrip)
{
    auto r = ring();
    auto fam = FamilySpec::omega(SymScalar::param(r, "lambda"), r);
    auto v = parse_vector("3/2 * xi * Dt^2 - (b + 1) * Dt^0 + lambda^-1*Dt^1", fam);
    EXPECT_EQ(parse_vector(to_string(v, *fam), fam), v);
    auto frac = FamilySpec::fraction({0, 1}, {rat(1, 2), rat(1, 2)}, nullptr);
    auto p = parse_vector("2*(t-b1)^-2 + xi*t^-3", frac);
    EXPECT_EQ(parse_vector(to_string(p, *frac), frac), p);
    EXPECT_EQ(to_string(parse_vector("0", frac)), "0");
    EXPECT_THROW(parse_vector("(t-b2)^-1", frac), ConfigError);
    EXPECT_THROW(parse_vector("Dt^1", frac), ConfigError);
    EXPECT_THROW(parse_vector("xi*xi", frac), ConfigError);
}

TEST(Laurent, Parse)
{
    auto r = ring();
    auto p = parse_laurent("alpha + 2*t^-1 - t", r);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p.at(0), SymScalar::param(r, "alpha"));
    EXPECT_EQ(p.at(-1), SymScalar(2));
    EXPECT_EQ(p.at(1), SymScalar(-1));
    EXPECT_EQ(parse_laurent(laurent_to_string(p), r), p);
}

// Oracle for the fraction normalization: evaluate both sides as rational
// functions at sample points t not in the pole set.
namespace {

Rational eval(const FamilySpec& fam, const Vector& v, const Rational& t)
{
    Rational acc = 0;
    for (const auto& [idx, c] : v.terms()) {
        Rational val;
        if (idx.is_pole()) {
            Rational d = t - fam.poles[static_cast<std::size_t>(idx.pole_slot)];
            val = 1;
            for (int j = 0; j < idx.pole_order; ++j)
                val /= d;
        } else {
            val = 1;
            for (int j = 0; j < std::abs(idx.tpow); ++j)
                val = idx.tpow > 0 ? Rational(val * t) : Rational(val / t);
        }
        acc += c.constant_value() * val;
    }
    return acc;
}

} // namespace

TEST(Fraction, NormalizationMatchesEvaluation)
{
    auto fam = FamilySpec::fraction({0, 1, rat(-2, 3)}, {rat(1, 2), rat(1, 3), 1}, nullptr);
    std::vector<Rational> pts{rat(5, 7), 3, rat(-9, 4)};
    for (int slot = 1; slot <= 2; ++slot) {
        for (int j = 1; j <= 3; ++j) {
            BasisIndex idx = BasisIndex::pole(slot, j);
            Vector base = Vector::basis(idx);
            for (int m = -3; m <= 3; ++m) {
                Vector prod = fraction_mul_tpow(*fam, idx, m);
                for (const auto& t : pts) {
                    Rational tm = 1;
                    for (int k = 0; k < std::abs(m); ++k)
                        tm = m > 0 ? Rational(tm * t) : Rational(tm / t);
                    EXPECT_EQ(eval(*fam, prod, t), tm * eval(*fam, base, t));
                }
                for (const auto& [i2, c] : prod.terms())
                    EXPECT_NO_THROW(check_index(*fam, i2));
            }
            for (int s2 = 0; s2 <= 2; ++s2) {
                Vector prod = fraction_mul_pole(*fam, idx, s2);
                for (const auto& t : pts)
                    EXPECT_EQ(eval(*fam, prod, t),
                              eval(*fam, base, t) / (t - fam->poles[static_cast<std::size_t>(s2)]));
            }
        }
    }
    for (int k = -2; k <= 2; ++k) {
        Vector prod = fraction_mul_pole(*fam, BasisIndex::power(k), 1);
        for (const auto& t : pts)
            EXPECT_EQ(eval(*fam, prod, t), eval(*fam, Vector::basis(BasisIndex::power(k)), t) / (t - 1));
    }
}

TEST(VectorProperty, SpaceAxioms)
{
    auto r = ring();
    auto fam = FamilySpec::laurent({}, r);
    std::mt19937 gen(5);
    std::uniform_int_distribution<int> k(-3, 3), par(0, 1), num(-4, 4);
    auto rnd = [&]() {
        Vector v(fam);
        for (int i = 0; i < 4; ++i)
            v.add_term(BasisIndex::power(k(gen), par(gen)), SymScalar(num(gen)) * SymScalar::param(r, "b") + SymScalar(num(gen)));
        return v;
    };
    for (int i = 0; i < 1000; ++i) {
        Vector u = rnd(), v = rnd(), w = rnd();
        SymScalar a = SymScalar(num(gen)) + SymScalar::param(r, "alpha"), c = SymScalar(num(gen));
        ASSERT_EQ((u + v) + w, u + (v + w));
        ASSERT_EQ(u + v, v + u);
        ASSERT_EQ(a * (u + v), a * u + a * v);
        ASSERT_EQ((a + c) * u, a * u + c * u);
        ASSERT_EQ((a * c) * u, a * (c * u));
        ASSERT_TRUE((u - u).is_zero());
        Vector sum = u + v;
        for (const auto& [idx, x] : sum.terms())
            ASSERT_FALSE(x.is_zero());
    }
}
