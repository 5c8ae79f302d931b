#include "ramond/scalar.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "lexer.hpp"

namespace ramond {

Rational rat(long num, long den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text)
{
    detail::Lexer lx(text);
    bool neg = lx.accept(detail::Tok::Minus);
    if (lx.peek().kind != detail::Tok::Number)
        lx.fail("expected rational literal");
    Integer num(lx.take().text);
    Integer den(1);
    if (lx.accept(detail::Tok::Slash)) {
        if (lx.peek().kind != detail::Tok::Number)
            lx.fail("expected denominator");
        den = Integer(lx.take().text);
        if (den == 0)
            throw ConfigError("zero denominator in '" + std::string(text) + "'");
    }
    if (lx.peek().kind != detail::Tok::End)
        lx.fail("trailing input");
    Rational q(neg ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- ParamRing

ParamRing::ParamRing(std::vector<Param> params) : params_(std::move(params))
{
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (params_[i].name.empty())
            throw ConfigError("empty parameter name");
        for (std::size_t j = 0; j < i; ++j)
            if (params_[j].name == params_[i].name)
                throw ConfigError("duplicate parameter '" + params_[i].name + "'");
    }
}

std::shared_ptr<const ParamRing> ParamRing::standard(const std::vector<std::string>& names)
{
    std::vector<Param> ps;
    ps.reserve(names.size());
    for (const auto& n : names)
        ps.push_back({n, n == "lambda" || n == "mu"});
    return std::make_shared<const ParamRing>(std::move(ps));
}

std::optional<std::size_t> ParamRing::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (params_[i].name == name)
            return i;
    return std::nullopt;
}

std::shared_ptr<const ParamRing> ParamRing::extended(const std::vector<Param>& extra) const
{
    auto ps = params_;
    ps.insert(ps.end(), extra.begin(), extra.end());
    return std::make_shared<const ParamRing>(std::move(ps));
}

bool ParamRing::operator==(const ParamRing& other) const
{
    if (params_.size() != other.params_.size())
        return false;
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (params_[i].name != other.params_[i].name ||
            params_[i].laurent != other.params_[i].laurent)
            return false;
    return true;
}

RingPtr common_ring(const RingPtr& a, const RingPtr& b)
{
    if (a == b || !b)
        return a;
    if (!a)
        return b;
    if (*a == *b)
        return a;
    throw ConfigError("scalar ring mismatch");
}

// ---------------------------------------------------------------- SymScalar

namespace {

void check_exponents(const RingPtr& ring, const SymScalar::Exponents& e)
{
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !ring->param(i).laurent)
            throw DomainError("negative exponent on non-Laurent parameter '" +
                              ring->param(i).name + "'");
}

Rational rational_pow(const Rational& base, int e)
{
    if (e == 0)
        return Rational(1);
    if (base == 0) {
        if (e < 0)
            throw DomainError("zero to a negative power");
        return Rational(0);
    }
    Integer num, den;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
    Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

} // namespace

SymScalar::SymScalar(long value)
{
    if (value != 0)
        terms_.emplace_back(Exponents{}, Rational(value));
}

SymScalar::SymScalar(const Rational& value)
{
    if (value != 0)
        terms_.emplace_back(Exponents{}, value);
}

SymScalar SymScalar::param(const RingPtr& ring, std::string_view name)
{
    if (!ring)
        throw ConfigError("parameter '" + std::string(name) + "' requested without a ring");
    auto idx = ring->index_of(name);
    if (!idx)
        throw ConfigError("parameter '" + std::string(name) + "' not declared in ring");
    Exponents e(ring->size(), 0);
    e[*idx] = 1;
    return monomial(ring, std::move(e), Rational(1));
}

SymScalar SymScalar::constant(const RingPtr& ring, const Rational& value)
{
    SymScalar s;
    s.ring_ = ring;
    if (value != 0)
        s.terms_.emplace_back(Exponents(ring ? ring->size() : 0, 0), value);
    return s;
}

SymScalar SymScalar::monomial(const RingPtr& ring, Exponents exps, const Rational& coeff)
{
    SymScalar s;
    s.ring_ = ring;
    if (ring) {
        if (exps.size() != ring->size())
            throw ConfigError("exponent vector length does not match ring");
        check_exponents(ring, exps);
    } else if (!exps.empty()) {
        throw ConfigError("exponents given without ring");
    }
    if (coeff != 0)
        s.terms_.emplace_back(std::move(exps), coeff);
    return s;
}

bool SymScalar::is_constant() const
{
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    return std::all_of(terms_[0].first.begin(), terms_[0].first.end(),
                       [](int e) { return e == 0; });
}

Rational SymScalar::constant_value() const
{
    if (!is_constant())
        throw ConfigError("symbolic scalar '" + to_string() + "' where a number is required");
    return terms_.empty() ? Rational(0) : terms_[0].second;
}

void SymScalar::adopt_ring(const RingPtr& other)
{
    RingPtr r = common_ring(ring_, other);
    if (r == ring_)
        return;
    // Only a ring-free constant can be re-homed.
    for (auto& t : terms_)
        t.first.assign(r->size(), 0);
    ring_ = r;
}

void SymScalar::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (out.back().second == 0)
            out.pop_back();
    }
    terms_ = std::move(out);
}

SymScalar SymScalar::operator-() const
{
    SymScalar r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

SymScalar& SymScalar::operator+=(const SymScalar& rhs)
{
    if (rhs.terms_.empty()) {
        if (rhs.ring_)
            adopt_ring(rhs.ring_);
        return *this;
    }
    SymScalar other = rhs;
    adopt_ring(other.ring_);
    other.adopt_ring(ring_);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        if (j == other.terms_.size() ||
            (i < terms_.size() && terms_[i].first < other.terms_[j].first)) {
            merged.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || other.terms_[j].first < terms_[i].first) {
            merged.push_back(std::move(other.terms_[j++]));
        } else {
            Rational c = terms_[i].second + other.terms_[j].second;
            if (c != 0)
                merged.emplace_back(std::move(terms_[i].first), c);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

SymScalar& SymScalar::operator-=(const SymScalar& rhs) { return *this += -rhs; }

SymScalar operator*(const SymScalar& a, const SymScalar& b)
{
    SymScalar r;
    r.ring_ = common_ring(a.ring_, b.ring_);
    if (a.terms_.empty() || b.terms_.empty())
        return r;
    const std::size_t n = r.ring_ ? r.ring_->size() : 0;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            SymScalar::Exponents e(n, 0);
            for (std::size_t k = 0; k < n; ++k)
                e[k] = (ea.empty() ? 0 : ea[k]) + (eb.empty() ? 0 : eb[k]);
            if (r.ring_)
                check_exponents(r.ring_, e);
            r.terms_.emplace_back(std::move(e), ca * cb);
        }
    }
    r.normalize();
    return r;
}

SymScalar& SymScalar::operator*=(const SymScalar& rhs)
{
    *this = *this * rhs;
    return *this;
}

bool operator==(const SymScalar& a, const SymScalar& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_))
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].second != b.terms_[i].second)
            return false;
        const auto& ea = a.terms_[i].first;
        const auto& eb = b.terms_[i].first;
        if (ea.size() == eb.size()) {
            if (ea != eb)
                return false;
        } else {
            // One side is ring-free: it is a constant, so the other must be too.
            const auto& e = ea.empty() ? eb : ea;
            if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; }))
                return false;
        }
    }
    return true;
}

SymScalar SymScalar::divided_by(const Rational& q) const
{
    if (q == 0)
        throw DomainError("division by zero");
    SymScalar r = *this;
    for (auto& t : r.terms_)
        t.second /= q;
    return r;
}

SymScalar SymScalar::pow(int e) const
{
    if (e < 0) {
        if (terms_.size() != 1)
            throw DomainError("negative power of '" + to_string() + "'");
        Exponents ex = terms_[0].first;
        for (auto& x : ex)
            x = -x;
        SymScalar inv;
        inv.ring_ = ring_;
        if (ring_)
            check_exponents(ring_, ex);
        inv.terms_.emplace_back(std::move(ex), rational_pow(terms_[0].second, -1));
        return inv.pow(-e);
    }
    SymScalar result = SymScalar::constant(ring_, Rational(1));
    SymScalar base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

SymScalar SymScalar::substitute(const Bindings& bindings) const
{
    if (!ring_)
        return *this;
    std::vector<std::optional<Rational>> value(ring_->size());
    for (const auto& [name, v] : bindings) {
        auto idx = ring_->index_of(name);
        if (!idx)
            continue;
        if (ring_->param(*idx).laurent && v == 0)
            throw DomainError("Laurent parameter '" + name + "' bound to 0");
        value[*idx] = v;
    }
    SymScalar r;
    r.ring_ = ring_;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        Rational coeff = c;
        for (std::size_t k = 0; k < ne.size(); ++k) {
            if (value[k] && ne[k] != 0) {
                coeff *= rational_pow(*value[k], ne[k]);
                ne[k] = 0;
            }
        }
        if (coeff != 0)
            r.terms_.emplace_back(std::move(ne), coeff);
    }
    r.normalize();
    return r;
}

std::map<int, SymScalar> SymScalar::coefficients_in(std::string_view name) const
{
    std::map<int, SymScalar> out;
    if (!ring_)
        throw ConfigError("coefficients_in on a ring-free scalar");
    auto idx = ring_->index_of(name);
    if (!idx)
        throw ConfigError("parameter '" + std::string(name) + "' not declared in ring");
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        int d = ne[*idx];
        ne[*idx] = 0;
        out[d] += SymScalar::monomial(ring_, std::move(ne), c);
    }
    return out;
}

std::string SymScalar::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::vector<std::string> factors;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            std::string f = ring_->param(k).name;
            if (e[k] != 1)
                f += "^" + std::to_string(e[k]);
            factors.push_back(std::move(f));
        }
        std::string body;
        Rational mag = abs(c);
        bool neg = c < 0;
        if (factors.empty()) {
            body = mag.get_str();
        } else {
            if (mag != 1)
                body = mag.get_str() + "*";
            for (std::size_t i = 0; i < factors.size(); ++i)
                body += (i ? "*" : "") + factors[i];
        }
        if (first)
            os << (neg ? "-" : "") << body;
        else
            os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SymScalar& s) { return os << s.to_string(); }

SymScalar rehome(const SymScalar& s, const RingPtr& target)
{
    if (s.ring() == target || (s.ring() && target && *s.ring() == *target))
        return s;
    SymScalar out = SymScalar::constant(target, 0);
    for (const auto& [e, c] : s.terms()) {
        SymScalar::Exponents ne(target ? target->size() : 0, 0);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            const std::string& name = s.ring()->param(k).name;
            auto idx = target ? target->index_of(name) : std::nullopt;
            if (!idx)
                throw ConfigError("parameter '" + name + "' not declared in target ring");
            ne[*idx] = e[k];
        }
        out += SymScalar::monomial(target, std::move(ne), c);
    }
    return out;
}

// ---------------------------------------------------------------- parser

namespace {

using detail::Lexer;
using detail::Tok;

class ScalarParser {
public:
    ScalarParser(Lexer& lx, const RingPtr& ring) : lx_(lx), ring_(ring) {}

    SymScalar power_level() { return power(); }

    SymScalar expr()
    {
        SymScalar acc = term();
        for (;;) {
            if (lx_.accept(Tok::Plus))
                acc += term();
            else if (lx_.accept(Tok::Minus))
                acc -= term();
            else
                return acc;
        }
    }

private:
    SymScalar term()
    {
        SymScalar acc = unary();
        for (;;) {
            if (lx_.accept(Tok::Star)) {
                acc *= unary();
            } else if (lx_.accept(Tok::Slash)) {
                SymScalar d = unary();
                if (!d.is_constant() || d.is_zero())
                    lx_.fail("division only by nonzero constants");
                acc = acc.divided_by(d.constant_value());
            } else {
                return acc;
            }
        }
    }

    SymScalar unary()
    {
        if (lx_.accept(Tok::Minus))
            return -unary();
        if (lx_.accept(Tok::Plus))
            return unary();
        return power();
    }

    SymScalar power()
    {
        SymScalar base = atom();
        if (lx_.accept(Tok::Caret))
            return base.pow(static_cast<int>(detail::parse_signed_int(lx_)));
        return base;
    }

    SymScalar atom()
    {
        const auto& t = lx_.peek();
        if (t.kind == Tok::Number)
            return SymScalar::constant(ring_, Rational(Integer(lx_.take().text)));
        if (t.kind == Tok::Name) {
            std::string name = lx_.take().text;
            if (!ring_ || !ring_->has(name))
                throw ConfigError("undeclared parameter '" + name + "'");
            return SymScalar::param(ring_, name);
        }
        if (lx_.accept(Tok::LParen)) {
            SymScalar inner = expr();
            lx_.expect(Tok::RParen, "')'");
            return inner;
        }
        lx_.fail("expected number, parameter or '('");
    }

    Lexer& lx_;
    RingPtr ring_;
};

} // namespace

namespace detail {
SymScalar parse_scalar_expr(Lexer& lx, const RingPtr& ring)
{
    ScalarParser p(lx, ring);
    return p.expr();
}
SymScalar parse_scalar_power(Lexer& lx, const RingPtr& ring)
{
    ScalarParser p(lx, ring);
    return p.power_level();
}
} // namespace detail

SymScalar parse_scalar(std::string_view text, const RingPtr& ring)
{
    Lexer lx(text);
    ScalarParser p(lx, ring);
    SymScalar s = p.expr();
    if (lx.peek().kind != Tok::End)
        lx.fail("trailing input");
    if (ring && !s.ring())
        s = s + SymScalar::constant(ring, 0);
    return s;
}

} // namespace ramond
