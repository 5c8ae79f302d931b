#include <gtest/gtest.h>

#include <random>

#include "ramond/scalar.hpp"

using namespace ramond;

namespace {

RingPtr ring() { return ParamRing::standard({"b", "lambda", "alpha"}); }

SymScalar random_scalar(std::mt19937& gen, const RingPtr& r)
{
    std::uniform_int_distribution<int> nterms(0, 3), num(-5, 5), den(1, 4), eb(0, 2), el(-2, 2);
    SymScalar s = SymScalar::constant(r, 0);
    int n = nterms(gen);
    for (int i = 0; i < n; ++i)
        s += SymScalar::monomial(r, {eb(gen), el(gen), eb(gen)}, rat(num(gen), den(gen)));
    return s;
}

} // namespace

TEST(Rational, LowestTerms)
{
    Rational q = rat(6, -4);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(to_string(rat(0, 7)), "0");
    EXPECT_EQ(parse_rational("-3/2"), rat(-3, 2));
    EXPECT_THROW(parse_rational("1/0"), ConfigError);
    EXPECT_THROW(parse_rational("x"), ConfigError);
}

TEST(SymScalar, AddExamples)
{
    auto r = ring();
    EXPECT_EQ(SymScalar(rat(1, 2)) + SymScalar(rat(1, 3)), SymScalar(rat(5, 6)));
    auto b = SymScalar::param(r, "b");
    EXPECT_TRUE((b + (-b)).is_zero());
    auto l = SymScalar::param(r, "lambda");
    EXPECT_EQ(l.pow(2) + SymScalar(3) * l.pow(2), SymScalar(4) * l.pow(2));
}

TEST(SymScalar, MulExamples)
{
    auto r = ring();
    auto l = SymScalar::param(r, "lambda");
    EXPECT_EQ(l * l.pow(-1), SymScalar(1));
    auto b = SymScalar::param(r, "b");
    EXPECT_EQ((b * (SymScalar(1) - SymScalar(2) * b)).to_string(), "b - 2*b^2");
    Rational n = 2;
    EXPECT_EQ(Rational((n * n * n - n) / 12), rat(1, 2));
    EXPECT_THROW(b.pow(-1), DomainError);
    EXPECT_THROW(SymScalar::monomial(r, {-1, 0, 0}, 1), DomainError);
}

TEST(SymScalar, Substitute)
{
    auto r = ring();
    auto b = SymScalar::param(r, "b");
    auto e = b - SymScalar(2) * b * b;
    EXPECT_TRUE(e.substitute({{"b", rat(1, 2)}}).is_zero());
    EXPECT_EQ(e.substitute({{"b", rat(1, 3)}}), SymScalar(rat(1, 9)));
    auto l = SymScalar::param(r, "lambda");
    EXPECT_EQ(l.pow(2).substitute({{"lambda", 3}}), SymScalar(9));
    EXPECT_THROW(l.substitute({{"lambda", 0}}), DomainError);
}

TEST(SymScalar, RingMismatch)
{
    auto a = SymScalar::param(ring(), "b");
    auto c = SymScalar::param(ParamRing::standard({"b", "mu"}), "b");
    EXPECT_THROW(a + c, ConfigError);
}

TEST(SymScalar, ParseAndPrint)
{
    auto r = ring();
    auto s = parse_scalar("1/2*lambda^-1 - b*(1 - 2*b)", r);
    EXPECT_EQ(parse_scalar(s.to_string(), r), s);
    EXPECT_THROW(parse_scalar("mu", r), ConfigError);
    EXPECT_THROW(parse_scalar("b/b", r), ConfigError);
    EXPECT_EQ(parse_scalar("lambda^-1", r).to_string(), "lambda^-1");
}

TEST(SymScalarProperty, RingAxioms)
{
    auto r = ring();
    std::mt19937 gen(12345);
    for (int i = 0; i < 10000; ++i) {
        auto x = random_scalar(gen, r), y = random_scalar(gen, r), z = random_scalar(gen, r);
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ(x + y, y + x);
        ASSERT_TRUE((x - x).is_zero());
    }
}

TEST(SymScalarProperty, SubstituteIsHomomorphism)
{
    auto r = ring();
    std::mt19937 gen(777);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    for (int i = 0; i < 2000; ++i) {
        auto x = random_scalar(gen, r), y = random_scalar(gen, r);
        int ln = num(gen);
        if (ln == 0)
            ln = 1;
        Bindings bind{{"b", rat(num(gen), den(gen))}, {"lambda", rat(ln, den(gen))}, {"alpha", rat(num(gen), den(gen))}};
        auto sx = x.substitute(bind), sy = y.substitute(bind);
        ASSERT_TRUE(sx.is_constant());
        ASSERT_EQ((x * y).substitute(bind), sx * sy);
        ASSERT_EQ((x + y).substitute(bind), sx + sy);
    }
}

TEST(SymScalarProperty, NoStoredZeros)
{
    auto r = ring();
    std::mt19937 gen(99);
    for (int i = 0; i < 2000; ++i) {
        auto x = random_scalar(gen, r), y = random_scalar(gen, r);
        std::vector<SymScalar> results{x + y, x * y, x - y, x * (y - y)};
        for (const auto& s : results)
            for (const auto& [e, c] : s.terms())
                ASSERT_NE(c, 0);
    }
}
