#pragma once

// Z2-graded carrier spaces of the Weyl-superalgebra module families and the
// sparse Vector type shared by every action.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramond/scalar.hpp"

namespace ramond {

enum class FamilyTag { LaurentSeries, OmegaLambda, DegreeTwo, DegreeN, Fraction };

std::string_view family_name(FamilyTag tag);

/// Laurent polynomial in t: exponent -> coefficient, zero coefficients pruned.
using LaurentPoly = std::map<int, SymScalar>;

/// Parses a Laurent polynomial in `t` with coefficients in `ring`.
LaurentPoly parse_laurent(std::string_view text, const RingPtr& ring);
std::string laurent_to_string(const LaurentPoly& p);

/// One carrier family together with its payload.
///
///  - LaurentSeries: basis t^k xi^r; D_t acts as multiplication by alpha(t) + k.
///  - OmegaLambda:   basis D_t^n xi^r; t^m acts as lambda^m (D_t - m)^n.
///  - DegreeTwo:     basis xi^r t^k, xi^r t^k D_t with D_t^2 = f(t).
///  - DegreeN:       basis xi^r t^p (d/dt)^m, m < n, with (d/dt)^n = t.
///  - Fraction:      xi^r times C[t, (t - b_i)^{-1}] with
///                   d/dt = derivative + sum_i alpha_i / (t - b_i).
struct FamilySpec {
    FamilyTag tag = FamilyTag::LaurentSeries;
    RingPtr ring;

    LaurentPoly alpha;  // LaurentSeries
    SymScalar lambda;   // OmegaLambda
    LaurentPoly f;      // DegreeTwo
    int degree = 1;     // DegreeN
    std::vector<Rational> poles;     // Fraction: b_0 = 0, b_1..b_n
    std::vector<Rational> residues;  // Fraction: alpha_0..alpha_n

    static std::shared_ptr<const FamilySpec> laurent(LaurentPoly alpha, RingPtr ring);
    static std::shared_ptr<const FamilySpec> omega(SymScalar lambda, RingPtr ring);
    static std::shared_ptr<const FamilySpec> degree_two(LaurentPoly f, RingPtr ring);
    static std::shared_ptr<const FamilySpec> degree_n(int n, RingPtr ring);
    static std::shared_ptr<const FamilySpec> fraction(std::vector<Rational> poles,
                                                      std::vector<Rational> residues,
                                                      RingPtr ring);

    /// Number of poles b_1..b_n besides b_0 = 0.
    int extra_poles() const { return static_cast<int>(poles.size()) - 1; }
    /// Upper bound on aux (exclusive), or -1 when unbounded.
    int aux_limit() const;
    /// True when every payload coefficient is a rational constant.
    bool is_numeric() const;
    std::shared_ptr<const FamilySpec> substituted(const Bindings& b) const;

    std::string describe() const;
};

using FamilyPtr = std::shared_ptr<const FamilySpec>;

/// One basis vector of a carrier.
///
/// Fraction basis elements are either pure powers t^k (k in Z, which covers
/// the b_0 = 0 poles) or pure poles (t - b_slot)^{-order} with slot >= 1.
struct BasisIndex {
    int parity = 0;  // xi-degree
    int tpow = 0;
    int aux = 0;
    int pole_slot = 0;
    int pole_order = 0;

    static BasisIndex power(int tpow, int parity = 0, int aux = 0)
    {
        return BasisIndex{parity, tpow, aux, 0, 0};
    }
    static BasisIndex pole(int slot, int order, int parity = 0)
    {
        return BasisIndex{parity, 0, 0, slot, order};
    }

    bool is_pole() const { return pole_order > 0; }
    BasisIndex with_parity(int r) const
    {
        BasisIndex b = *this;
        b.parity = r;
        return b;
    }

    friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// Finitely supported combination of basis vectors.
class Vector {
public:
    using Terms = std::map<BasisIndex, SymScalar>;

    Vector() = default;
    explicit Vector(FamilyPtr family) : family_(std::move(family)) {}
    static Vector basis(const BasisIndex& idx, const SymScalar& coeff = SymScalar(1),
                        FamilyPtr family = nullptr);

    const Terms& terms() const { return terms_; }
    const FamilyPtr& family() const { return family_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    SymScalar coeff(const BasisIndex& idx) const;

    /// Common parity of all terms (0 for the zero vector), nullopt when mixed.
    std::optional<int> parity() const;

    void add_term(const BasisIndex& idx, const SymScalar& c);
    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    Vector operator-() const;
    friend Vector operator*(const SymScalar& c, const Vector& v);
    friend bool operator==(const Vector& a, const Vector& b) { return a.terms_ == b.terms_; }

    Vector substituted(const Bindings& b) const;

private:
    void adopt_family(const FamilyPtr& f);

    FamilyPtr family_;
    Terms terms_;
};

/// Element-wise vector sum; mismatched families are a ConfigError.
inline Vector vec_add(const Vector& u, const Vector& v) { return u + v; }
inline Vector vec_scale(const SymScalar& c, const Vector& v) { return c * v; }

/// Finite window of basis indices.
struct WindowSpec {
    int t_bound = 4;     // |tpow| <= t_bound
    int aux_bound = 0;   // aux <= aux_bound
    int pole_bound = 0;  // pole order <= pole_bound
    int mode_bound = 1;  // |m| <= mode_bound for applied generators

    bool contains(const BasisIndex& idx) const;
    /// The window shrunk by mode_bound in the t direction.
    WindowSpec inner() const;
};

struct Projection {
    Vector kept;
    bool leaked = false;
};

Projection window_project(const Vector& v, const WindowSpec& w);

/// All basis indices of `family` inside `w`, in carrier order.
std::vector<BasisIndex> window_basis(const FamilySpec& family, const WindowSpec& w);

/// Throws InvariantError if `idx` is not a valid basis index of `family`.
void check_index(const FamilySpec& family, const BasisIndex& idx);

// ---- Fraction-family normalization ---------------------------------------
// Products are reduced to the pure-power / pure-pole basis with
//   t (t-b)^{-j}         = (t-b)^{-(j-1)} + b (t-b)^{-j}
//   1/((t-b_i)(t-b_j))   = (1/(b_i-b_j)) (1/(t-b_i) - 1/(t-b_j)).

/// t^m times a basis element.
Vector fraction_mul_tpow(const FamilySpec& fam, const BasisIndex& idx, int m);
/// (t - b_slot)^{-1} times a basis element (slot 0 means t^{-1}).
Vector fraction_mul_pole(const FamilySpec& fam, const BasisIndex& idx, int slot);
/// Linear extension of either product to vectors.
Vector fraction_mul_tpow(const FamilySpec& fam, const Vector& v, int m);
Vector fraction_mul_pole(const FamilySpec& fam, const Vector& v, int slot);

// ---- text form ------------------------------------------------------------

std::string to_string(const BasisIndex& idx, const FamilySpec& family);
std::string to_string(const Vector& v, const FamilySpec& family);
/// Generic text form without family context (aux printed as "Dt").
std::string to_string(const Vector& v);
Vector parse_vector(std::string_view text, const FamilyPtr& family);

} // namespace ramond
