#include "ramond/algebra.hpp"

#include <sstream>

#include "ramond/linalg.hpp"

namespace ramond {

using Kind = Generator::Kind;

std::string_view algebra_name(Algebra a) { return a == Algebra::R ? "R" : "T"; }

Algebra parse_algebra(std::string_view s)
{
    if (s == "R" || s == "r")
        return Algebra::R;
    if (s == "T" || s == "t")
        return Algebra::T;
    throw ConfigError("unknown algebra '" + std::string(s) + "' (expected R or T)");
}

Generator Generator::make(Algebra a, Kind k, int mode)
{
    bool t_only = k == Kind::H || k == Kind::Gplus || k == Kind::Gminus;
    if (t_only && a != Algebra::T)
        throw ConfigError("H and G^+- exist only in T");
    if (k == Kind::G && a != Algebra::R)
        throw ConfigError("G exists only in R");
    return Generator{a, k, k == Kind::C ? 0 : mode};
}

std::string to_string(const Generator& g)
{
    std::string head;
    switch (g.kind) {
    case Kind::L: head = "L"; break;
    case Kind::H: head = "H"; break;
    case Kind::Gplus: head = "G+"; break;
    case Kind::Gminus: head = "G-"; break;
    case Kind::G: head = "G"; break;
    case Kind::C: return "C";
    }
    return head + "_" + std::to_string(g.mode);
}

Generator parse_generator(std::string_view s, Algebra a)
{
    if (s == "C")
        return Generator::C(a);
    auto us = s.find('_');
    if (us == std::string_view::npos)
        throw ConfigError("generator '" + std::string(s) + "' needs a mode, e.g. L_2");
    std::string_view head = s.substr(0, us);
    int mode = 0;
    try {
        std::size_t used = 0;
        mode = std::stoi(std::string(s.substr(us + 1)), &used);
        if (used != s.size() - us - 1)
            throw ConfigError("bad mode");
    } catch (const std::exception&) {
        throw ConfigError("bad mode in generator '" + std::string(s) + "'");
    }
    Kind k;
    if (head == "L")
        k = Kind::L;
    else if (head == "H")
        k = Kind::H;
    else if (head == "G+" || head == "Gp")
        k = Kind::Gplus;
    else if (head == "G-" || head == "Gm")
        k = Kind::Gminus;
    else if (head == "G")
        k = Kind::G;
    else
        throw ConfigError("unknown generator '" + std::string(s) + "'");
    return Generator::make(a, k, mode);
}

std::vector<Generator> generators(Algebra a, int bound, bool with_central)
{
    std::vector<Kind> kinds = a == Algebra::R ? std::vector<Kind>{Kind::L, Kind::G}
                                              : std::vector<Kind>{Kind::L, Kind::H, Kind::Gplus, Kind::Gminus};
    std::vector<Generator> out;
    for (Kind k : kinds)
        for (int m = -bound; m <= bound; ++m)
            out.push_back(Generator::make(a, k, m));
    if (with_central)
        out.push_back(Generator::C(a));
    return out;
}

// ---------------------------------------------------------------- elements

AlgebraElement AlgebraElement::of(const Generator& g, const SymScalar& c)
{
    AlgebraElement x;
    x.add_term(g, c);
    return x;
}

void AlgebraElement::add_term(const Generator& g, const SymScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SymScalar AlgebraElement::coeff(const Generator& g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? SymScalar(0) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs)
{
    for (const auto& [g, c] : rhs.terms_)
        add_term(g, c);
    return *this;
}

AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b)
{
    for (const auto& [g, c] : b.terms_)
        a.add_term(g, -c);
    return a;
}

AlgebraElement operator*(const SymScalar& c, const AlgebraElement& x)
{
    AlgebraElement r;
    for (const auto& [g, v] : x.terms_)
        r.add_term(g, c * v);
    return r;
}

AlgebraElement AlgebraElement::centerless() const
{
    AlgebraElement r;
    for (const auto& [g, c] : terms_)
        if (g.kind != Kind::C)
            r.add_term(g, c);
    return r;
}

std::string to_string(const AlgebraElement& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : x.terms()) {
        std::string term;
        std::string gs = to_string(g);
        if (c == SymScalar(1))
            term = gs;
        else if (c == SymScalar(-1))
            term = "-" + gs;
        else if (c.terms().size() > 1)
            term = "(" + c.to_string() + ")*" + gs;
        else
            term = c.to_string() + "*" + gs;
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

// ---------------------------------------------------------------- table

namespace {

const std::vector<std::string> kNamesR{"LL_L", "LL_C", "GG_L", "GG_C", "LG_G"};
const std::vector<std::string> kNamesT{"LL_L",    "LL_C",     "HH_C",    "LH_H",    "LG_G",
                                       "HG_plus", "HG_minus", "GpGm_L", "GpGm_H", "GpGm_C"};

} // namespace

BracketTable BracketTable::standard()
{
    BracketTable t;
    for (const auto& n : kNamesR)
        t.sign[n] = 1;
    for (const auto& n : kNamesT)
        t.sign[n] = 1;
    return t;
}

BracketTable BracketTable::literal_transcription() { return standard().flipped("LL_C"); }

const std::vector<std::string>& BracketTable::names(Algebra a) { return a == Algebra::R ? kNamesR : kNamesT; }

BracketTable BracketTable::flipped(const std::string& name) const
{
    auto it = sign.find(name);
    if (it == sign.end())
        throw ConfigError("unknown structure constant '" + name + "'");
    BracketTable t = *this;
    t.sign[name] = -it->second;
    return t;
}

int BracketTable::operator[](const std::string& name) const
{
    auto it = sign.find(name);
    RAMOND_ASSERT(it != sign.end(), "missing structure constant " + name);
    return it->second;
}

// ---------------------------------------------------------------- bracket

namespace {

// Bracket for kind(x) <= kind(y) in enum order.
AlgebraElement ordered_bracket(const Generator& x, const Generator& y, const BracketTable& tb)
{
    const Algebra a = x.algebra;
    const int m = x.mode, n = y.mode, s = m + n;
    const bool delta = s == 0;
    AlgebraElement r;
    if (x.kind == Kind::C || y.kind == Kind::C)
        return r;
    auto C = Generator::C(a);
    switch (x.kind) {
    case Kind::L:
        switch (y.kind) {
        case Kind::L:
            r.add_term(Generator::L(a, s), SymScalar(tb["LL_L"] * (n - m)));
            // Virasoro central term (m^3 - m)/12, antisymmetric under m <-> n at m + n = 0.
            if (delta)
                r.add_term(C, SymScalar(rat(static_cast<long>(tb["LL_C"]) * (static_cast<long>(m) * m * m - m), 12)));
            return r;
        case Kind::H:
            r.add_term(Generator::H(s), SymScalar(tb["LH_H"] * n));
            return r;
        case Kind::Gplus:
        case Kind::Gminus:
        case Kind::G:
            r.add_term(Generator::make(a, y.kind, s), SymScalar(rat(tb["LG_G"] * (2L * n - m), 2)));
            return r;
        default: break;
        }
        break;
    case Kind::H:
        switch (y.kind) {
        case Kind::H:
            if (delta)
                r.add_term(C, SymScalar(rat(tb["HH_C"] * m, 3)));
            return r;
        case Kind::Gplus: r.add_term(Generator::Gp(s), SymScalar(tb["HG_plus"])); return r;
        case Kind::Gminus: r.add_term(Generator::Gm(s), SymScalar(-tb["HG_minus"])); return r;
        default: break;
        }
        break;
    case Kind::Gplus:
        if (y.kind == Kind::Gplus)
            return r;
        if (y.kind == Kind::Gminus) {
            r.add_term(Generator::L(a, s), SymScalar(-2 * tb["GpGm_L"]));
            r.add_term(Generator::H(s), SymScalar(tb["GpGm_H"] * (m - n)));
            // (1/3)(m^2 - 1/4) = (4m^2 - 1)/12
            if (delta)
                r.add_term(C, SymScalar(rat(tb["GpGm_C"] * (4L * m * m - 1), 12)));
            return r;
        }
        break;
    case Kind::Gminus:
        if (y.kind == Kind::Gminus)
            return r;
        break;
    case Kind::G:
        if (y.kind == Kind::G) {
            r.add_term(Generator::L(a, s), SymScalar(-2 * tb["GG_L"]));
            if (delta)
                r.add_term(C, SymScalar(rat(tb["GG_C"] * (4L * m * m - 1), 12)));
            return r;
        }
        break;
    default: break;
    }
    throw InvariantError("unhandled bracket " + to_string(x) + ", " + to_string(y));
}

} // namespace

AlgebraElement bracket(const Generator& x, const Generator& y, const BracketTable& table)
{
    if (x.algebra != y.algebra)
        throw ConfigError("bracket of generators from different algebras");
    if (x.kind <= y.kind)
        return ordered_bracket(x, y, table);
    // [y, x] = -(-1)^{|x||y|} [x, y]
    int sign = (x.parity() && y.parity()) ? 1 : -1;
    return SymScalar(sign) * ordered_bracket(y, x, table);
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, const BracketTable& table)
{
    AlgebraElement r;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms())
            r += (cx * cy) * bracket(gx, gy, table);
    return r;
}

CheckResult check_super_jacobi(Algebra a, int mode_bound, const BracketTable& table)
{
    if (mode_bound < 1)
        throw ConfigError("mode bound must be >= 1");
    CheckResult res;
    res.id = std::string("jacobi.") + std::string(algebra_name(a));
    res.anchor = "structure constants";
    res.instance = "algebra=" + std::string(algebra_name(a)) + " mode_bound=" + std::to_string(mode_bound);
    auto gens = generators(a, mode_bound);
    auto sgn = [](const Generator& p, const Generator& q) { return (p.parity() && q.parity()) ? -1 : 1; };
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& z : gens) {
                AlgebraElement j = SymScalar(sgn(x, z)) * bracket(AlgebraElement::of(x), bracket(y, z, table), table);
                j += SymScalar(sgn(y, x)) * bracket(AlgebraElement::of(y), bracket(z, x, table), table);
                j += SymScalar(sgn(z, y)) * bracket(AlgebraElement::of(z), bracket(x, y, table), table);
                ++res.checked;
                if (!j.is_zero())
                    res.record_failure("(" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) +
                                       "): residual " + to_string(j));
            }
    return res;
}

CheckResult check_super_antisymmetry(Algebra a, int mode_bound, const BracketTable& table)
{
    CheckResult res;
    res.id = std::string("antisymmetry.") + std::string(algebra_name(a));
    res.anchor = "structure constants";
    res.instance = "algebra=" + std::string(algebra_name(a)) + " mode_bound=" + std::to_string(mode_bound);
    auto gens = generators(a, mode_bound);
    for (const auto& x : gens)
        for (const auto& y : gens) {
            int s = (x.parity() && y.parity()) ? -1 : 1;
            AlgebraElement r = bracket(x, y, table) + SymScalar(s) * bracket(y, x, table);
            ++res.checked;
            if (!r.is_zero())
                res.record_failure("(" + to_string(x) + ", " + to_string(y) + "): " + to_string(r));
        }
    return res;
}

// ---------------------------------------------------------------- Phi

AlgebraElement phi(const Generator& x)
{
    if (x.algebra != Algebra::R)
        throw ConfigError("phi is defined on R");
    switch (x.kind) {
    case Kind::L: return AlgebraElement::of(Generator::L(Algebra::T, x.mode));
    case Kind::C: return AlgebraElement::of(Generator::C(Algebra::T));
    case Kind::G: {
        AlgebraElement r = AlgebraElement::of(Generator::Gp(x.mode), SymScalar(rat(-1, 2)));
        r.add_term(Generator::Gm(x.mode), SymScalar(-1));
        return r;
    }
    default: break;
    }
    throw InvariantError("phi on non-R generator");
}

AlgebraElement phi(const AlgebraElement& x)
{
    AlgebraElement r;
    for (const auto& [g, c] : x.terms())
        r += c * phi(g);
    return r;
}

CheckResult check_phi_homomorphism(int mode_bound, const BracketTable& table)
{
    if (mode_bound < 1)
        throw ConfigError("mode bound must be >= 1");
    CheckResult res;
    res.id = "phi.homomorphism";
    res.anchor = "embedding of R into T";
    res.instance = "mode_bound=" + std::to_string(mode_bound);
    auto gens = generators(Algebra::R, mode_bound);
    for (const auto& x : gens)
        for (const auto& y : gens) {
            AlgebraElement lhs = phi(bracket(x, y, table));
            AlgebraElement rhs = bracket(phi(x), phi(y), table);
            ++res.checked;
            if (!(lhs == rhs))
                res.record_failure("(" + to_string(x) + ", " + to_string(y) + "): phi([x,y]) = " + to_string(lhs) +
                                   ", [phi x, phi y] = " + to_string(rhs));
        }
    return res;
}

CheckResult check_phi_injective(int mode_bound)
{
    CheckResult res;
    res.id = "phi.injective";
    res.anchor = "embedding of R into T";
    res.instance = "mode_bound=" + std::to_string(mode_bound);
    auto gens = generators(Algebra::R, mode_bound);
    RowSpace<Generator> space;
    for (const auto& g : gens) {
        AlgebraElement img = phi(g);
        std::map<Generator, Rational> row;
        for (const auto& [h, c] : img.terms())
            row[h] = c.constant_value();
        ++res.checked;
        bool parity_ok = true;
        for (const auto& [h, c] : img.terms())
            parity_ok = parity_ok && h.parity() == g.parity();
        if (!parity_ok)
            res.record_failure(to_string(g) + ": image changes parity");
        if (!space.insert(RowSpace<Generator>::integral(row)))
            res.record_failure(to_string(g) + ": image dependent on earlier images");
    }
    res.detail("rank", std::to_string(space.rank()));
    return res;
}

// ---------------------------------------------------------------- realization

namespace {

WeylTerm term(const SymScalar& c, std::vector<WeylGen> w) { return WeylTerm{c, std::move(w)}; }

} // namespace

WeylOp realization(const Generator& x)
{
    const int m = x.mode;
    const auto T = WeylGen::tpow(m);
    switch (x.kind) {
    case Kind::L:
        return {term(1, {T, WeylGen::dt()}), term(SymScalar(rat(m, 2)), {T, WeylGen::xi(), WeylGen::dxi()})};
    case Kind::H: return {term(1, {T, WeylGen::xi(), WeylGen::dxi()})};
    case Kind::Gplus: return {term(-2, {T, WeylGen::xi(), WeylGen::dt()})};
    case Kind::Gminus: return {term(1, {T, WeylGen::dxi()})};
    case Kind::G: {
        // Image of G under the embedding: -(1/2) G^+_m - G^-_m.
        return {term(1, {T, WeylGen::xi(), WeylGen::dt()}), term(-1, {T, WeylGen::dxi()})};
    }
    case Kind::C: return {};
    }
    return {};
}

WeylOp twisted(const Generator& x, const SymScalar& b)
{
    WeylOp op = realization(x);
    const int m = x.mode;
    const auto T = WeylGen::tpow(m);
    switch (x.kind) {
    case Kind::L: op.push_back(term(SymScalar(m) * b, {T})); break;
    case Kind::H: op.push_back(term(SymScalar(-2) * b, {T})); break;
    case Kind::Gplus: op.push_back(term(SymScalar(-4 * m) * b, {T, WeylGen::xi()})); break;
    case Kind::G: op.push_back(term(SymScalar(2 * m) * b, {T, WeylGen::xi()})); break;
    default: break;
    }
    return op;
}

WeylOp twisted(const AlgebraElement& x, const SymScalar& b)
{
    WeylOp out;
    for (const auto& [g, c] : x.terms())
        for (auto t : twisted(g, b)) {
            t.coeff = c * t.coeff;
            out.push_back(std::move(t));
        }
    return out;
}

namespace {

// op([x,y]) v == x(y v) - (-1)^{|x||y|} y(x v) on each window basis vector.
template <class OpOf>
void check_operator_brackets(CheckResult& res, const FamilyPtr& family, const std::vector<Generator>& gens,
                             const WindowSpec& window, const BracketTable& table, OpOf op_of)
{
    auto basis = window_basis(*family, window);
    std::map<Generator, WeylOp> ops;
    for (const auto& g : gens)
        ops[g] = op_of(AlgebraElement::of(g));
    for (const auto& x : gens)
        for (const auto& y : gens) {
            WeylOp lhs_op = op_of(bracket(x, y, table).centerless());
            int s = (x.parity() && y.parity()) ? -1 : 1;
            for (const auto& idx : basis) {
                Vector v = Vector::basis(idx, 1, family);
                Vector lhs = weyl_op_apply(lhs_op, v, *family);
                Vector rhs = weyl_op_apply(ops[x], weyl_op_apply(ops[y], v, *family), *family) -
                             SymScalar(s) * weyl_op_apply(ops[y], weyl_op_apply(ops[x], v, *family), *family);
                ++res.checked;
                if (!(lhs == rhs))
                    res.record_failure("(" + to_string(x) + ", " + to_string(y) + ") on " + to_string(v, *family) +
                                       ": residual " + to_string(lhs - rhs, *family));
            }
        }
}

} // namespace

CheckResult check_realization(const FamilyPtr& family, int mode_bound, const WindowSpec& window,
                              const BracketTable& table)
{
    CheckResult res;
    res.id = "realization.T";
    res.anchor = "Witt superalgebra realization";
    res.instance = family->describe() + " mode_bound=" + std::to_string(mode_bound) +
                   " t_bound=" + std::to_string(window.t_bound);
    auto gens = generators(Algebra::T, mode_bound, false);
    check_operator_brackets(res, family, gens, window, table, [](const AlgebraElement& x) {
        WeylOp out;
        for (const auto& [g, c] : x.terms())
            for (auto t : realization(g)) {
                t.coeff = c * t.coeff;
                out.push_back(std::move(t));
            }
        return out;
    });
    return res;
}

CheckResult sigma_twist_check(const SymScalar& b, const FamilyPtr& family, int mode_bound, const WindowSpec& window,
                              const BracketTable& table)
{
    CheckResult res;
    res.id = "twist.sigma";
    res.anchor = "twist sigma_b";
    res.instance = family->describe() + " b=" + b.to_string() + " mode_bound=" + std::to_string(mode_bound);
    auto gens = generators(Algebra::T, mode_bound, false);
    check_operator_brackets(res, family, gens, window, table,
                            [&b](const AlgebraElement& x) { return twisted(x, b); });
    return res;
}

} // namespace ramond
