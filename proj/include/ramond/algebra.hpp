#pragma once

// The N=1 and N=2 Ramond superalgebras: generators, structure constants,
// graded Jacobi, the embedding Phi and the Witt-superalgebra realization.

#include <map>
#include <string>
#include <vector>

#include "ramond/check.hpp"
#include "ramond/scalar.hpp"
#include "ramond/weyl.hpp"

namespace ramond {

enum class Algebra { R, T };
std::string_view algebra_name(Algebra a);
Algebra parse_algebra(std::string_view s);

struct Generator {
    enum class Kind { L, H, Gplus, Gminus, G, C };
    Algebra algebra = Algebra::R;
    Kind kind = Kind::L;
    int mode = 0;

    static Generator make(Algebra a, Kind k, int mode);
    static Generator L(Algebra a, int m) { return make(a, Kind::L, m); }
    static Generator H(int m) { return make(Algebra::T, Kind::H, m); }
    static Generator Gp(int m) { return make(Algebra::T, Kind::Gplus, m); }
    static Generator Gm(int m) { return make(Algebra::T, Kind::Gminus, m); }
    static Generator G(int m) { return make(Algebra::R, Kind::G, m); }
    static Generator C(Algebra a) { return make(a, Kind::C, 0); }

    int parity() const { return kind == Kind::G || kind == Kind::Gplus || kind == Kind::Gminus; }

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);
/// Parses "L_2", "G+_-1", "Gm_3", "H_0", "C" for the given algebra.
Generator parse_generator(std::string_view s, Algebra a);

/// All generators with |mode| <= bound, C included.
std::vector<Generator> generators(Algebra a, int bound, bool with_central = true);

/// Finitely supported combination of generators, zero terms pruned.
class AlgebraElement {
public:
    using Terms = std::map<Generator, SymScalar>;

    AlgebraElement() = default;
    static AlgebraElement of(const Generator& g, const SymScalar& c = SymScalar(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Generator& g, const SymScalar& c);
    SymScalar coeff(const Generator& g) const;

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
    friend AlgebraElement operator*(const SymScalar& c, const AlgebraElement& x);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

    /// Drops the central generator.
    AlgebraElement centerless() const;

private:
    Terms terms_;
};

std::string to_string(const AlgebraElement& x);

/// Structure constants as sign multipliers on each defining coefficient.
/// The default table is graded-Jacobi consistent; flip() negates one
/// constant for mutation tests.
struct BracketTable {
    std::map<std::string, int> sign;

    static BracketTable standard();
    /// The Virasoro central term written with the second mode, (n^3-n)/12.
    static BracketTable literal_transcription();

    static const std::vector<std::string>& names(Algebra a);
    BracketTable flipped(const std::string& name) const;
    int operator[](const std::string& name) const;
};

/// Super-bracket of two generators of the same algebra.
AlgebraElement bracket(const Generator& x, const Generator& y,
                       const BracketTable& table = BracketTable::standard());
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y,
                       const BracketTable& table = BracketTable::standard());

CheckResult check_super_jacobi(Algebra a, int mode_bound,
                               const BracketTable& table = BracketTable::standard());
CheckResult check_super_antisymmetry(Algebra a, int mode_bound,
                                     const BracketTable& table = BracketTable::standard());

/// Embedding of R into T: L_m -> L_m, G_m -> -(G^+_m / 2 + G^-_m), C -> C.
AlgebraElement phi(const Generator& x);
AlgebraElement phi(const AlgebraElement& x);
CheckResult check_phi_homomorphism(int mode_bound, const BracketTable& table = BracketTable::standard());
/// Rank of the Phi images of the R spanning set with |m| <= bound equals its size.
CheckResult check_phi_injective(int mode_bound);

/// Centerless-T generator as a Witt-superalgebra operator:
/// L_m = t^m (D_t + (m/2) xi d_xi), H_m = t^m xi d_xi,
/// G^+_m = -2 t^m xi D_t, G^-_m = t^m d_xi. C maps to the zero operator.
WeylOp realization(const Generator& x);
/// sigma_b of the realized generator:
/// L_m + m b t^m, H_m - 2 b t^m, G^+_m - 4 b m t^m xi, G^-_m.
WeylOp twisted(const Generator& x, const SymScalar& b);
WeylOp twisted(const AlgebraElement& x, const SymScalar& b);

/// Every centerless T bracket holds as an operator identity on the window.
CheckResult check_realization(const FamilyPtr& family, int mode_bound, const WindowSpec& window,
                              const BracketTable& table = BracketTable::standard());
/// sigma([x,y]) - [sigma x, sigma y] annihilates every window basis vector.
CheckResult sigma_twist_check(const SymScalar& b, const FamilyPtr& family, int mode_bound,
                              const WindowSpec& window,
                              const BracketTable& table = BracketTable::standard());

} // namespace ramond
