#include "ramond/carrier.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "lexer.hpp"

namespace ramond {

std::string_view family_name(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::LaurentSeries: return "laurent";
    case FamilyTag::OmegaLambda: return "omega";
    case FamilyTag::DegreeTwo: return "degree-two";
    case FamilyTag::DegreeN: return "degree-n";
    case FamilyTag::Fraction: return "fraction";
    }
    return "?";
}

// ---------------------------------------------------------------- Laurent polys

namespace {

void prune(LaurentPoly& p)
{
    for (auto it = p.begin(); it != p.end();) {
        if (it->second.is_zero())
            it = p.erase(it);
        else
            ++it;
    }
}

} // namespace

LaurentPoly parse_laurent(std::string_view text, const RingPtr& ring)
{
    if (ring && ring->has("t"))
        throw ConfigError("'t' may not be declared as a parameter");
    RingPtr ext = ring ? ring->extended({{"t", true}})
                       : std::make_shared<const ParamRing>(std::vector<ParamRing::Param>{{"t", true}});
    SymScalar s = parse_scalar(text, ext);
    LaurentPoly out;
    for (auto& [deg, coeff] : s.coefficients_in("t"))
        out[deg] = rehome(coeff, ring);
    prune(out);
    return out;
}

std::string laurent_to_string(const LaurentPoly& p)
{
    if (p.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [deg, c] : p) {
        std::string cs = c.to_string();
        std::string term;
        if (deg == 0) {
            term = c.terms().size() > 1 ? "(" + cs + ")" : cs;
        } else {
            std::string tp = "t^" + std::to_string(deg);
            if (c == SymScalar(1))
                term = tp;
            else if (c == SymScalar(-1))
                term = "-" + tp;
            else
                term = (c.terms().size() > 1 ? "(" + cs + ")" : cs) + "*" + tp;
        }
        if (first)
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- FamilySpec

std::shared_ptr<const FamilySpec> FamilySpec::laurent(LaurentPoly alpha, RingPtr ring)
{
    auto f = std::make_shared<FamilySpec>();
    f->tag = FamilyTag::LaurentSeries;
    prune(alpha);
    f->alpha = std::move(alpha);
    f->ring = std::move(ring);
    return f;
}

std::shared_ptr<const FamilySpec> FamilySpec::omega(SymScalar lambda, RingPtr ring)
{
    if (lambda.is_zero())
        throw DomainError("lambda must be nonzero");
    if (lambda.terms().size() != 1)
        throw ConfigError("lambda must be a single monomial (it is raised to negative powers)");
    auto f = std::make_shared<FamilySpec>();
    f->tag = FamilyTag::OmegaLambda;
    f->lambda = std::move(lambda);
    f->ring = std::move(ring);
    return f;
}

std::shared_ptr<const FamilySpec> FamilySpec::degree_two(LaurentPoly fpoly, RingPtr ring)
{
    auto f = std::make_shared<FamilySpec>();
    f->tag = FamilyTag::DegreeTwo;
    prune(fpoly);
    f->f = std::move(fpoly);
    f->ring = std::move(ring);
    return f;
}

std::shared_ptr<const FamilySpec> FamilySpec::degree_n(int n, RingPtr ring)
{
    if (n < 1)
        throw ConfigError("degree-n family needs n >= 1");
    auto f = std::make_shared<FamilySpec>();
    f->tag = FamilyTag::DegreeN;
    f->degree = n;
    f->ring = std::move(ring);
    return f;
}

std::shared_ptr<const FamilySpec> FamilySpec::fraction(std::vector<Rational> poles,
                                                       std::vector<Rational> residues,
                                                       RingPtr ring)
{
    if (poles.empty() || poles[0] != 0)
        throw ConfigError("fraction family needs b_0 = 0 as the first pole");
    if (residues.size() != poles.size())
        throw ConfigError("fraction family needs one residue per pole");
    for (std::size_t i = 0; i < poles.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (poles[i] == poles[j])
                throw ConfigError("fraction family poles must be pairwise distinct");
    bool all_integer = std::all_of(residues.begin(), residues.end(),
                                   [](const Rational& r) { return r.get_den() == 1; });
    if (all_integer)
        throw ConfigError("fraction family residues must not all be integers");
    auto f = std::make_shared<FamilySpec>();
    f->tag = FamilyTag::Fraction;
    f->poles = std::move(poles);
    f->residues = std::move(residues);
    f->ring = std::move(ring);
    return f;
}

int FamilySpec::aux_limit() const
{
    switch (tag) {
    case FamilyTag::OmegaLambda: return -1;
    case FamilyTag::DegreeTwo: return 2;
    case FamilyTag::DegreeN: return degree;
    default: return 1;
    }
}

bool FamilySpec::is_numeric() const
{
    auto numeric = [](const LaurentPoly& p) {
        return std::all_of(p.begin(), p.end(), [](const auto& kv) { return kv.second.is_constant(); });
    };
    switch (tag) {
    case FamilyTag::LaurentSeries: return numeric(alpha);
    case FamilyTag::OmegaLambda: return lambda.is_constant();
    case FamilyTag::DegreeTwo: return numeric(f);
    default: return true;
    }
}

std::shared_ptr<const FamilySpec> FamilySpec::substituted(const Bindings& b) const
{
    auto out = std::make_shared<FamilySpec>(*this);
    for (auto& [k, c] : out->alpha)
        c = c.substitute(b);
    for (auto& [k, c] : out->f)
        c = c.substitute(b);
    out->lambda = lambda.substitute(b);
    prune(out->alpha);
    prune(out->f);
    return out;
}

std::string FamilySpec::describe() const
{
    std::ostringstream os;
    os << family_name(tag);
    switch (tag) {
    case FamilyTag::LaurentSeries: os << "(alpha=" << laurent_to_string(alpha) << ")"; break;
    case FamilyTag::OmegaLambda: os << "(lambda=" << lambda.to_string() << ")"; break;
    case FamilyTag::DegreeTwo: os << "(f=" << laurent_to_string(f) << ")"; break;
    case FamilyTag::DegreeN: os << "(n=" << degree << ")"; break;
    case FamilyTag::Fraction: {
        os << "(poles=";
        for (std::size_t i = 0; i < poles.size(); ++i)
            os << (i ? "," : "") << poles[i].get_str();
        os << "; residues=";
        for (std::size_t i = 0; i < residues.size(); ++i)
            os << (i ? "," : "") << residues[i].get_str();
        os << ")";
        break;
    }
    }
    return os.str();
}

void check_index(const FamilySpec& fam, const BasisIndex& idx)
{
    RAMOND_ASSERT(idx.parity == 0 || idx.parity == 1, "parity bit out of range");
    RAMOND_ASSERT(idx.aux >= 0, "negative aux degree");
    int lim = fam.aux_limit();
    if (lim >= 0)
        RAMOND_ASSERT(idx.aux < lim, std::string(family_name(fam.tag)) + " aux degree " +
                                         std::to_string(idx.aux) + " out of range");
    if (fam.tag == FamilyTag::OmegaLambda)
        RAMOND_ASSERT(idx.tpow == 0, "omega basis has no t-power");
    if (idx.is_pole()) {
        RAMOND_ASSERT(fam.tag == FamilyTag::Fraction, "pole index outside fraction family");
        RAMOND_ASSERT(idx.tpow == 0 && idx.aux == 0, "pole basis element must be pure");
        RAMOND_ASSERT(idx.pole_slot >= 1 && idx.pole_slot <= fam.extra_poles(),
                      "pole slot out of range");
    } else {
        RAMOND_ASSERT(idx.pole_slot == 0, "pole slot without order");
    }
}

// ---------------------------------------------------------------- Vector

Vector Vector::basis(const BasisIndex& idx, const SymScalar& coeff, FamilyPtr family)
{
    Vector v(std::move(family));
    v.add_term(idx, coeff);
    return v;
}

SymScalar Vector::coeff(const BasisIndex& idx) const
{
    auto it = terms_.find(idx);
    return it == terms_.end() ? SymScalar(0) : it->second;
}

std::optional<int> Vector::parity() const
{
    if (terms_.empty())
        return 0;
    int p = terms_.begin()->first.parity;
    for (const auto& [idx, c] : terms_)
        if (idx.parity != p)
            return std::nullopt;
    return p;
}

void Vector::add_term(const BasisIndex& idx, const SymScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Vector::adopt_family(const FamilyPtr& f)
{
    if (!f || f == family_)
        return;
    if (family_)
        throw ConfigError("vector family mismatch: " + family_->describe() + " vs " + f->describe());
    family_ = f;
}

Vector& Vector::operator+=(const Vector& rhs)
{
    adopt_family(rhs.family_);
    for (const auto& [idx, c] : rhs.terms_)
        add_term(idx, c);
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs)
{
    adopt_family(rhs.family_);
    for (const auto& [idx, c] : rhs.terms_)
        add_term(idx, -c);
    return *this;
}

Vector Vector::operator-() const
{
    Vector r = *this;
    for (auto& [idx, c] : r.terms_)
        c = -c;
    return r;
}

Vector operator*(const SymScalar& c, const Vector& v)
{
    Vector r(v.family_);
    if (c.is_zero())
        return r;
    for (const auto& [idx, x] : v.terms_) {
        SymScalar p = c * x;
        if (!p.is_zero())
            r.terms_.emplace_hint(r.terms_.end(), idx, std::move(p));
    }
    return r;
}

Vector Vector::substituted(const Bindings& b) const
{
    Vector r(family_);
    for (const auto& [idx, c] : terms_)
        r.add_term(idx, c.substitute(b));
    return r;
}

// ---------------------------------------------------------------- windows

bool WindowSpec::contains(const BasisIndex& idx) const
{
    return std::abs(idx.tpow) <= t_bound && idx.aux <= aux_bound && idx.pole_order <= pole_bound;
}

WindowSpec WindowSpec::inner() const
{
    WindowSpec w = *this;
    w.t_bound = std::max(0, t_bound - mode_bound);
    return w;
}

Projection window_project(const Vector& v, const WindowSpec& w)
{
    Projection p{Vector(v.family()), false};
    for (const auto& [idx, c] : v.terms()) {
        if (w.contains(idx))
            p.kept.add_term(idx, c);
        else
            p.leaked = true;
    }
    return p;
}

std::vector<BasisIndex> window_basis(const FamilySpec& fam, const WindowSpec& w)
{
    std::vector<BasisIndex> out;
    int lim = fam.aux_limit();
    int aux_max = lim < 0 ? w.aux_bound : std::min(lim - 1, w.aux_bound);
    for (int r = 0; r <= 1; ++r) {
        if (fam.tag == FamilyTag::OmegaLambda) {
            for (int a = 0; a <= aux_max; ++a)
                out.push_back(BasisIndex::power(0, r, a));
            continue;
        }
        for (int k = -w.t_bound; k <= w.t_bound; ++k)
            for (int a = 0; a <= aux_max; ++a)
                out.push_back(BasisIndex::power(k, r, a));
        if (fam.tag == FamilyTag::Fraction)
            for (int s = 1; s <= fam.extra_poles(); ++s)
                for (int j = 1; j <= w.pole_bound; ++j)
                    out.push_back(BasisIndex::pole(s, j, r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- fraction products

namespace {

Vector frac_mul_t(const FamilySpec& fam, const BasisIndex& idx);
Vector frac_mul_tinv(const FamilySpec& fam, const BasisIndex& idx);

Vector lift(const FamilySpec& fam, const Vector& v, Vector (*op)(const FamilySpec&, const BasisIndex&))
{
    Vector out;
    for (const auto& [idx, c] : v.terms())
        out += c * op(fam, idx);
    return out;
}

Vector frac_mul_t(const FamilySpec& fam, const BasisIndex& idx)
{
    if (!idx.is_pole())
        return Vector::basis(BasisIndex::power(idx.tpow + 1, idx.parity));
    // t (t-c)^{-j} = (t-c)^{-(j-1)} + c (t-c)^{-j}
    const Rational& c = fam.poles[static_cast<std::size_t>(idx.pole_slot)];
    Vector out;
    if (idx.pole_order == 1)
        out.add_term(BasisIndex::power(0, idx.parity), 1);
    else
        out.add_term(BasisIndex::pole(idx.pole_slot, idx.pole_order - 1, idx.parity), 1);
    out.add_term(idx, c);
    return out;
}

Vector frac_mul_tinv(const FamilySpec& fam, const BasisIndex& idx)
{
    if (!idx.is_pole())
        return Vector::basis(BasisIndex::power(idx.tpow - 1, idx.parity));
    // t^{-1} (t-c)^{-j} = (1/c) (t-c)^{-j} - (1/c) t^{-1} (t-c)^{-(j-1)}
    const Rational& c = fam.poles[static_cast<std::size_t>(idx.pole_slot)];
    Rational inv = 1 / c;
    Vector out;
    out.add_term(idx, inv);
    BasisIndex lower = idx.pole_order == 1
                           ? BasisIndex::power(0, idx.parity)
                           : BasisIndex::pole(idx.pole_slot, idx.pole_order - 1, idx.parity);
    out -= SymScalar(inv) * frac_mul_tinv(fam, lower);
    return out;
}

} // namespace

Vector fraction_mul_tpow(const FamilySpec& fam, const BasisIndex& idx, int m)
{
    if (!idx.is_pole())
        return Vector::basis(BasisIndex::power(idx.tpow + m, idx.parity));
    Vector v = Vector::basis(idx);
    for (int i = 0; i < std::abs(m); ++i)
        v = lift(fam, v, m > 0 ? &frac_mul_t : &frac_mul_tinv);
    return v;
}

Vector fraction_mul_tpow(const FamilySpec& fam, const Vector& v, int m)
{
    Vector out(v.family());
    for (const auto& [idx, c] : v.terms())
        out += c * fraction_mul_tpow(fam, idx, m);
    return out;
}

Vector fraction_mul_pole(const FamilySpec& fam, const BasisIndex& idx, int slot)
{
    if (slot == 0)
        return fraction_mul_tpow(fam, idx, -1);
    RAMOND_ASSERT(slot >= 1 && slot <= fam.extra_poles(), "pole slot out of range");
    if (!idx.is_pole())
        return fraction_mul_tpow(fam, BasisIndex::pole(slot, 1, idx.parity), idx.tpow);
    if (idx.pole_slot == slot)
        return Vector::basis(BasisIndex::pole(slot, idx.pole_order + 1, idx.parity));
    // (t-c)^{-1} (t-e)^{-j} = (1/(c-e)) [ (t-c)^{-1} (t-e)^{-(j-1)} - (t-e)^{-j} ]
    const Rational& c = fam.poles[static_cast<std::size_t>(slot)];
    const Rational& e = fam.poles[static_cast<std::size_t>(idx.pole_slot)];
    Rational inv = 1 / (c - e);
    BasisIndex lower = idx.pole_order == 1
                           ? BasisIndex::power(0, idx.parity)
                           : BasisIndex::pole(idx.pole_slot, idx.pole_order - 1, idx.parity);
    Vector out = fraction_mul_pole(fam, lower, slot);
    out.add_term(idx, -1);
    return SymScalar(inv) * out;
}

Vector fraction_mul_pole(const FamilySpec& fam, const Vector& v, int slot)
{
    Vector out(v.family());
    for (const auto& [idx, c] : v.terms())
        out += c * fraction_mul_pole(fam, idx, slot);
    return out;
}

// ---------------------------------------------------------------- text form

namespace {

std::string basis_text(const BasisIndex& idx, const FamilySpec* fam)
{
    std::vector<std::string> parts;
    if (idx.parity)
        parts.emplace_back("xi");
    FamilyTag tag = fam ? fam->tag : FamilyTag::LaurentSeries;
    if (idx.is_pole())
        parts.push_back("(t-b" + std::to_string(idx.pole_slot) + ")^-" + std::to_string(idx.pole_order));
    else if (tag != FamilyTag::OmegaLambda)
        parts.push_back("t^" + std::to_string(idx.tpow));
    if (tag == FamilyTag::OmegaLambda)
        parts.push_back("Dt^" + std::to_string(idx.aux));
    else if (idx.aux > 0)
        parts.push_back((tag == FamilyTag::DegreeN ? "ddt^" : "Dt^") + std::to_string(idx.aux));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? " * " : "") + parts[i];
    return out;
}

std::string vector_text(const Vector& v, const FamilySpec* fam)
{
    if (v.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : v.terms()) {
        std::string b = basis_text(idx, fam);
        std::string term;
        if (c == SymScalar(1))
            term = b;
        else if (c == SymScalar(-1))
            term = "-" + b;
        else if (c.terms().size() > 1)
            term = "(" + c.to_string() + ") * " + b;
        else
            term = c.to_string() + " * " + b;
        if (first)
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
        first = false;
    }
    return out;
}

} // namespace

std::string to_string(const BasisIndex& idx, const FamilySpec& family) { return basis_text(idx, &family); }
std::string to_string(const Vector& v, const FamilySpec& family) { return vector_text(v, &family); }
std::string to_string(const Vector& v) { return vector_text(v, v.family().get()); }

namespace {

using detail::Lexer;
using detail::Tok;

class VectorParser {
public:
    VectorParser(Lexer& lx, const FamilyPtr& fam) : lx_(lx), fam_(fam), ring_(fam->ring) {}

    Vector parse()
    {
        Vector acc(fam_);
        bool neg = false;
        if (lx_.accept(Tok::Minus))
            neg = true;
        else
            lx_.accept(Tok::Plus);
        for (;;) {
            Vector t = term();
            acc += neg ? -t : t;
            if (lx_.accept(Tok::Plus))
                neg = false;
            else if (lx_.accept(Tok::Minus))
                neg = true;
            else
                break;
        }
        if (lx_.peek().kind != Tok::End)
            lx_.fail("trailing input");
        return acc;
    }

private:
    struct Acc {
        SymScalar coeff = SymScalar(1);
        BasisIndex idx;
        bool have_xi = false;
        bool have_pole = false;
        bool have_aux = false;
        bool zero_literal = false;
    };

    Vector term()
    {
        Acc a;
        if (lx_.peek().kind == Tok::Number && lx_.peek().text == "0") {
            auto m = lx_.mark();
            lx_.take();
            if (lx_.peek().kind == Tok::End || lx_.peek().kind == Tok::Plus ||
                lx_.peek().kind == Tok::Minus)
                return Vector(fam_);
            lx_.reset(m);
        }
        factor(a);
        for (;;) {
            if (lx_.accept(Tok::Star)) {
                factor(a);
            } else if (lx_.accept(Tok::Slash)) {
                SymScalar d = detail::parse_scalar_power(lx_, ring_);
                if (!d.is_constant() || d.is_zero())
                    lx_.fail("division only by nonzero constants");
                a.coeff = a.coeff.divided_by(d.constant_value());
            } else {
                break;
            }
        }
        check_index(*fam_, a.idx);
        return Vector::basis(a.idx, a.coeff, fam_);
    }

    int exponent()
    {
        if (!lx_.accept(Tok::Caret))
            return 1;
        return static_cast<int>(detail::parse_signed_int(lx_));
    }

    bool try_pole(Acc& a)
    {
        auto m = lx_.mark();
        if (!lx_.accept(Tok::LParen))
            return false;
        if (lx_.peek().kind != Tok::Name || lx_.peek().text != "t") {
            lx_.reset(m);
            return false;
        }
        lx_.take();
        if (!lx_.accept(Tok::Minus) || lx_.peek().kind != Tok::Name ||
            lx_.peek().text.size() < 2 || lx_.peek().text[0] != 'b') {
            lx_.reset(m);
            return false;
        }
        std::string name = lx_.take().text;
        if (!lx_.accept(Tok::RParen))
            lx_.fail("expected ')' after pole");
        int slot = std::stoi(name.substr(1));
        int e = exponent();
        if (e >= 0)
            lx_.fail("pole factor needs a negative exponent");
        if (fam_->tag != FamilyTag::Fraction || slot < 1 || slot > fam_->extra_poles())
            throw ConfigError("pole '" + name + "' not defined for " + fam_->describe());
        if (a.have_pole || a.idx.tpow != 0)
            throw ConfigError("products of basis factors are not normalized; write one pole per term");
        a.have_pole = true;
        a.idx.pole_slot = slot;
        a.idx.pole_order = -e;
        return true;
    }

    void factor(Acc& a)
    {
        if (lx_.accept(Tok::Minus)) {
            a.coeff = -a.coeff;
            factor(a);
            return;
        }
        const detail::Token& t = lx_.peek();
        if (t.kind == Tok::Name) {
            if (t.text == "xi") {
                lx_.take();
                if (a.have_xi)
                    throw ConfigError("xi repeated in one term");
                a.have_xi = true;
                a.idx.parity = 1;
                return;
            }
            if (t.text == "t") {
                lx_.take();
                if (a.have_pole)
                    throw ConfigError("t-power next to a pole factor is not normalized");
                a.idx.tpow += exponent();
                return;
            }
            if (t.text == "Dt" || t.text == "ddt") {
                bool ddt = t.text == "ddt";
                lx_.take();
                bool ok = ddt ? fam_->tag == FamilyTag::DegreeN
                              : (fam_->tag == FamilyTag::OmegaLambda || fam_->tag == FamilyTag::DegreeTwo);
                if (!ok)
                    throw ConfigError(std::string(ddt ? "ddt" : "Dt") + " is not a basis factor of " +
                                      fam_->describe());
                if (a.have_aux)
                    throw ConfigError("aux factor repeated in one term");
                a.have_aux = true;
                a.idx.aux = exponent();
                return;
            }
        }
        if (t.kind == Tok::LParen && try_pole(a))
            return;
        a.coeff *= detail::parse_scalar_power(lx_, ring_);
    }

    Lexer& lx_;
    FamilyPtr fam_;
    RingPtr ring_;
};

} // namespace

Vector parse_vector(std::string_view text, const FamilyPtr& family)
{
    if (!family)
        throw ConfigError("parse_vector needs a family");
    Lexer lx(text);
    VectorParser p(lx, family);
    return p.parse();
}

} // namespace ramond
