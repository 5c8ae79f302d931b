#include <gtest/gtest.h>

#include "ramond/algebra.hpp"

using namespace ramond;

namespace {

AlgebraElement el(Algebra a, std::initializer_list<std::pair<const char*, Rational>> terms)
{
    AlgebraElement x;
    for (const auto& [g, c] : terms)
        x.add_term(parse_generator(g, a), SymScalar(c));
    return x;
}

} // namespace

TEST(Bracket, Examples)
{
    // Virasoro central coefficient (m^3 - m)/12 at m = 2.
    EXPECT_EQ(bracket(Generator::L(Algebra::R, 2), Generator::L(Algebra::R, -2)),
              el(Algebra::R, {{"L_0", -4}, {"C", rat(1, 2)}}));
    EXPECT_EQ(bracket(Generator::G(1), Generator::G(-1)), el(Algebra::R, {{"L_0", -2}, {"C", rat(1, 4)}}));
    EXPECT_EQ(bracket(Generator::Gp(1), Generator::Gm(-1)),
              el(Algebra::T, {{"L_0", -2}, {"H_0", 2}, {"C", rat(1, 4)}}));
    EXPECT_TRUE(bracket(Generator::Gp(2), Generator::Gp(-1)).is_zero());
    EXPECT_TRUE(bracket(Generator::Gm(0), Generator::Gm(3)).is_zero());
    EXPECT_THROW(bracket(Generator::L(Algebra::R, 1), Generator::H(1)), ConfigError);
}

TEST(Bracket, LiteralCentralTermBreaksJacobi)
{
    auto lit = BracketTable::literal_transcription();
    EXPECT_EQ(bracket(Generator::L(Algebra::R, 2), Generator::L(Algebra::R, -2), lit),
              el(Algebra::R, {{"L_0", -4}, {"C", rat(-1, 2)}}));
    EXPECT_FALSE(check_super_jacobi(Algebra::R, 2, lit).passed());
    EXPECT_FALSE(check_super_jacobi(Algebra::T, 2, lit).passed());
}

TEST(Bracket, JacobiAndAntisymmetry)
{
    for (Algebra a : {Algebra::R, Algebra::T}) {
        auto j = check_super_jacobi(a, 3);
        EXPECT_TRUE(j.passed()) << (j.failures.empty() ? "" : j.failures[0]);
        EXPECT_TRUE(check_super_antisymmetry(a, 4).passed());
    }
    auto deg = check_super_jacobi(Algebra::R, 1);
    EXPECT_GT(deg.checked, 0);
}

TEST(Phi, Images)
{
    EXPECT_EQ(phi(Generator::G(3)), el(Algebra::T, {{"G+_3", rat(-1, 2)}, {"G-_3", -1}}));
    EXPECT_EQ(phi(Generator::L(Algebra::R, -1)), el(Algebra::T, {{"L_-1", 1}}));
    EXPECT_EQ(phi(Generator::C(Algebra::R)), el(Algebra::T, {{"C", 1}}));
    EXPECT_EQ(phi(bracket(Generator::G(1), Generator::G(-1))), el(Algebra::T, {{"L_0", -2}, {"C", rat(1, 4)}}));
    EXPECT_EQ(bracket(phi(Generator::G(1)), phi(Generator::G(-1))), el(Algebra::T, {{"L_0", -2}, {"C", rat(1, 4)}}));
    EXPECT_EQ(phi(bracket(Generator::L(Algebra::R, 2), Generator::G(-1))), SymScalar(-2) * phi(Generator::G(1)));
    EXPECT_TRUE(check_phi_homomorphism(3).passed());
    auto inj = check_phi_injective(4);
    EXPECT_TRUE(inj.passed());
}

TEST(Realization, LaurentWindow)
{
    auto r = ParamRing::standard({"alpha", "b"});
    auto fam = FamilySpec::laurent(parse_laurent("alpha", r), r);
    WindowSpec w;
    w.t_bound = 3;
    auto res = check_realization(fam, 3, w);
    EXPECT_TRUE(res.passed()) << (res.failures.empty() ? "" : res.failures[0]);
}

TEST(Twist, Symbolic)
{
    auto r = ParamRing::standard({"lambda", "b"});
    auto fam = FamilySpec::omega(SymScalar::param(r, "lambda"), r);
    WindowSpec w;
    w.aux_bound = 3;
    auto res = sigma_twist_check(SymScalar::param(r, "b"), fam, 3, w);
    EXPECT_TRUE(res.passed()) << (res.failures.empty() ? "" : res.failures[0]);
    EXPECT_TRUE(sigma_twist_check(0, fam, 2, w).passed());
}
