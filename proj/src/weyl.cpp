#include "ramond/weyl.hpp"

namespace ramond {

std::string to_string(const WeylGen& g)
{
    switch (g.kind) {
    case WeylGen::Kind::Tpow: return "t^" + std::to_string(g.m);
    case WeylGen::Kind::Dt: return "Dt";
    case WeylGen::Kind::DDt: return "ddt";
    case WeylGen::Kind::Xi: return "xi";
    case WeylGen::Kind::DXi: return "dxi";
    }
    return "?";
}

namespace {

using Kind = WeylGen::Kind;

// Binomial expansion of lambda^m (D_t - m)^n, as aux-degree -> coefficient.
std::vector<SymScalar> shifted_power(const FamilySpec& fam, int m, int n)
{
    std::vector<SymScalar> c(static_cast<std::size_t>(n) + 1, SymScalar(0));
    SymScalar lm = fam.lambda.pow(m);
    Integer binom = 1;
    for (int j = 0; j <= n; ++j) {
        // C(n, j) (-m)^(n-j)
        Integer pw = 1;
        for (int i = 0; i < n - j; ++i)
            pw *= -m;
        c[static_cast<std::size_t>(j)] = lm * SymScalar(Rational(binom * pw));
        binom = binom * (n - j) / (j + 1);
    }
    return c;
}

Vector tpow_basis(const FamilySpec& fam, const BasisIndex& idx, int m)
{
    switch (fam.tag) {
    case FamilyTag::OmegaLambda: {
        auto c = shifted_power(fam, m, idx.aux);
        Vector out;
        for (std::size_t j = 0; j < c.size(); ++j)
            out.add_term(BasisIndex::power(0, idx.parity, static_cast<int>(j)), c[j]);
        return out;
    }
    case FamilyTag::Fraction:
        return fraction_mul_tpow(fam, idx, m);
    default: {
        BasisIndex r = idx;
        r.tpow += m;
        return Vector::basis(r);
    }
    }
}

// d/dt on DegreeN: d/dt . t^p D^a = p t^(p-1) D^a + t^p D^(a+1), D^n = t.
Vector ddt_degree_n(const FamilySpec& fam, const BasisIndex& idx)
{
    Vector out;
    if (idx.tpow != 0)
        out.add_term(BasisIndex::power(idx.tpow - 1, idx.parity, idx.aux), idx.tpow);
    if (idx.aux + 1 < fam.degree)
        out.add_term(BasisIndex::power(idx.tpow, idx.parity, idx.aux + 1), 1);
    else
        out.add_term(BasisIndex::power(idx.tpow + 1, idx.parity, 0), 1);
    return out;
}

// d/dt on Fraction: derivative plus f * sum_i alpha_i / (t - b_i).
Vector ddt_fraction(const FamilySpec& fam, const BasisIndex& idx)
{
    Vector out;
    if (idx.is_pole())
        out.add_term(BasisIndex::pole(idx.pole_slot, idx.pole_order + 1, idx.parity), -idx.pole_order);
    else if (idx.tpow != 0)
        out.add_term(BasisIndex::power(idx.tpow - 1, idx.parity), idx.tpow);
    for (int i = 0; i <= fam.extra_poles(); ++i) {
        const Rational& a = fam.residues[static_cast<std::size_t>(i)];
        if (a != 0)
            out += SymScalar(a) * fraction_mul_pole(fam, idx, i);
    }
    return out;
}

void shift_add(Vector& out, const LaurentPoly& p, const BasisIndex& idx, const SymScalar& extra)
{
    for (const auto& [deg, c] : p) {
        BasisIndex r = idx;
        r.tpow += deg;
        out.add_term(r, c);
    }
    out.add_term(idx, extra);
}

Vector dt_basis(const FamilySpec& fam, const BasisIndex& idx)
{
    switch (fam.tag) {
    case FamilyTag::LaurentSeries: {
        Vector out;
        shift_add(out, fam.alpha, idx, idx.tpow);
        return out;
    }
    case FamilyTag::OmegaLambda:
        return Vector::basis(BasisIndex::power(0, idx.parity, idx.aux + 1));
    case FamilyTag::DegreeTwo: {
        Vector out;
        if (idx.aux == 0) {
            out.add_term(BasisIndex::power(idx.tpow, idx.parity, 1), 1);
            out.add_term(idx, idx.tpow);
        } else {
            shift_add(out, fam.f, BasisIndex::power(idx.tpow, idx.parity, 0), 0);
            out.add_term(idx, idx.tpow);
        }
        return out;
    }
    case FamilyTag::DegreeN: {
        Vector d = ddt_degree_n(fam, idx);
        Vector out;
        for (const auto& [i, c] : d.terms()) {
            BasisIndex r = i;
            r.tpow += 1;
            out.add_term(r, c);
        }
        return out;
    }
    case FamilyTag::Fraction:
        return fraction_mul_tpow(fam, ddt_fraction(fam, idx), 1);
    }
    return {};
}

Vector apply_basis(const WeylGen& g, const FamilySpec& fam, const BasisIndex& idx)
{
    switch (g.kind) {
    case Kind::Tpow: return tpow_basis(fam, idx, g.m);
    case Kind::Dt: return dt_basis(fam, idx);
    case Kind::DDt:
        if (fam.tag == FamilyTag::DegreeN)
            return ddt_degree_n(fam, idx);
        if (fam.tag == FamilyTag::Fraction)
            return ddt_fraction(fam, idx);
        throw ConfigError("d/dt is not defined on " + fam.describe());
    case Kind::Xi:
        if (idx.parity == 1)
            return {};
        return Vector::basis(idx.with_parity(1));
    case Kind::DXi:
        if (idx.parity == 0)
            return {};
        return Vector::basis(idx.with_parity(0));
    }
    return {};
}

} // namespace

Vector weyl_apply(const WeylGen& g, const Vector& v, const FamilySpec& family)
{
    if (g.kind == Kind::DDt && family.tag != FamilyTag::DegreeN && family.tag != FamilyTag::Fraction)
        throw ConfigError("d/dt is not defined on " + family.describe());
    Vector out(v.family());
    for (const auto& [idx, c] : v.terms()) {
        check_index(family, idx);
        Vector img = apply_basis(g, family, idx);
        for (const auto& [i, x] : img.terms())
            out.add_term(i, c * x);
    }
    if (family.tag == FamilyTag::DegreeN)
        for (const auto& [i, x] : out.terms())
            RAMOND_ASSERT(i.aux < family.degree, "degree-n aux bound exceeded");
    return out;
}

Vector weyl_word_apply(const std::vector<WeylGen>& word, const Vector& v, const FamilySpec& family)
{
    Vector cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (cur.is_zero())
            break;
        cur = weyl_apply(*it, cur, family);
    }
    return cur;
}

Vector weyl_op_apply(const WeylOp& op, const Vector& v, const FamilySpec& family)
{
    Vector out(v.family());
    for (const auto& term : op)
        if (!term.coeff.is_zero())
            out += term.coeff * weyl_word_apply(term.word, v, family);
    return out;
}

WeylOp weyl_op_compose(const WeylOp& a, const WeylOp& b)
{
    WeylOp out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) {
            WeylTerm t{x.coeff * y.coeff, x.word};
            t.word.insert(t.word.end(), y.word.begin(), y.word.end());
            out.push_back(std::move(t));
        }
    return out;
}

} // namespace ramond
