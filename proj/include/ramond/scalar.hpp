#pragma once

// Exact coefficients: GMP rationals and multivariate Laurent polynomials
// over them in a per-session set of formal parameters.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramond/errors.hpp"

namespace ramond {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den.
Rational rat(long num, long den = 1);
std::string to_string(const Rational& q);
/// Parses "3", "-3/2". Throws ConfigError on anything else.
Rational parse_rational(std::string_view text);

/// Declared set of formal parameters. Names are unique; only Laurent
/// parameters may carry negative exponents.
class ParamRing {
public:
    struct Param {
        std::string name;
        bool laurent = false;
    };

    explicit ParamRing(std::vector<Param> params);

    /// Declares `names`; "lambda" and "mu" become Laurent parameters.
    static std::shared_ptr<const ParamRing> standard(const std::vector<std::string>& names);

    std::size_t size() const { return params_.size(); }
    const Param& param(std::size_t i) const { return params_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool has(std::string_view name) const { return index_of(name).has_value(); }
    const std::vector<Param>& params() const { return params_; }

    /// Same parameter list, appended with `extra`.
    std::shared_ptr<const ParamRing> extended(const std::vector<Param>& extra) const;

    bool operator==(const ParamRing& other) const;

private:
    std::vector<Param> params_;
};

using RingPtr = std::shared_ptr<const ParamRing>;

/// Parameter bindings used by substitute().
using Bindings = std::map<std::string, Rational>;

/// Finitely supported map exponent-vector -> Rational. Stored zero
/// coefficients never survive; terms are kept sorted lexicographically by
/// exponent vector in declared parameter order.
///
/// A scalar without a ring is a pure constant and combines with any ring.
class SymScalar {
public:
    using Exponents = std::vector<int>;
    using Term = std::pair<Exponents, Rational>;

    SymScalar() = default;
    SymScalar(long value);              // NOLINT(google-explicit-constructor)
    SymScalar(const Rational& value);   // NOLINT(google-explicit-constructor)

    static SymScalar param(const RingPtr& ring, std::string_view name);
    static SymScalar constant(const RingPtr& ring, const Rational& value);
    static SymScalar monomial(const RingPtr& ring, Exponents exps, const Rational& coeff);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant scalar; throws ConfigError if symbolic.
    Rational constant_value() const;

    SymScalar operator-() const;
    SymScalar& operator+=(const SymScalar& rhs);
    SymScalar& operator-=(const SymScalar& rhs);
    SymScalar& operator*=(const SymScalar& rhs);
    friend SymScalar operator+(SymScalar a, const SymScalar& b) { return a += b; }
    friend SymScalar operator-(SymScalar a, const SymScalar& b) { return a -= b; }
    friend SymScalar operator*(const SymScalar& a, const SymScalar& b);
    friend bool operator==(const SymScalar& a, const SymScalar& b);
    friend bool operator!=(const SymScalar& a, const SymScalar& b) { return !(a == b); }

    /// Division by a nonzero constant.
    SymScalar divided_by(const Rational& q) const;
    /// Integer power; negative powers only for single-term scalars whose
    /// inverse stays inside the ring.
    SymScalar pow(int e) const;

    /// Partial substitution. Binding a Laurent parameter to 0 is a DomainError.
    SymScalar substitute(const Bindings& bindings) const;

    /// Coefficients of `name`^d, keyed by d.
    std::map<int, SymScalar> coefficients_in(std::string_view name) const;

    /// Canonical text form (see docs/grammar.md).
    std::string to_string() const;

private:
    void adopt_ring(const RingPtr& other);
    void normalize();

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Unifies the rings of a and b; throws ConfigError when both are set and differ.
RingPtr common_ring(const RingPtr& a, const RingPtr& b);

/// Re-expresses `s` over `target` by parameter name. Every parameter
/// occurring in `s` must be declared in `target`.
SymScalar rehome(const SymScalar& s, const RingPtr& target);

/// Parses the canonical text form. Names not declared in `ring` are rejected.
SymScalar parse_scalar(std::string_view text, const RingPtr& ring);

std::ostream& operator<<(std::ostream& os, const SymScalar& s);

} // namespace ramond
