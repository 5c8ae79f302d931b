#pragma once

// Explicit module maps (phi, psi, parity change) and window Hom-space
// computations between module pairs.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramond/modules.hpp"

namespace ramond {

/// A module over R or T given by its action on a basis. Carrier-family
/// modules come from an ActionConfig; the rank-two model on
/// C[x^2] + x C[x^2] uses basis indices with aux = k for (x^2)^k and
/// parity 1 for the x-multiplied half.
struct ModuleRef {
    std::string name;
    Algebra algebra = Algebra::R;
    FamilyPtr family;
    std::optional<ActionConfig> config;
    /// Module parity of a basis index is idx.parity XOR parity_shift.
    bool parity_shift = false;
    std::function<Vector(const Generator&, const Vector&)> action;
    std::function<std::vector<BasisIndex>(const WindowSpec&)> basis;
    std::function<std::string(const Vector&)> print;

    static ModuleRef of(const ActionConfig& cfg);
    /// R-module Omega_R(mu, alpha) on C[x^2] + x C[x^2].
    static ModuleRef x_square(const SymScalar& mu, const SymScalar& alpha);

    /// Pi(M): same action, module parity flipped.
    ModuleRef parity_changed() const;
    int module_parity(const BasisIndex& idx) const { return idx.parity ^ static_cast<int>(parity_shift); }
    Vector act(const Generator& x, const Vector& v) const { return action(x, v); }
    std::string show(const Vector& v) const { return print(v); }
};

/// Linear map given on a basis of its domain. `rule` returns nullopt for
/// basis indices outside the domain.
struct MapSpec {
    std::string name;
    std::string anchor;
    ModuleRef source;
    ModuleRef target;
    std::function<std::optional<Vector>(const BasisIndex&)> rule;
    bool parity_swap = false;

    /// Throws DomainError naming the first index outside the domain.
    Vector apply(const Vector& v) const;
    /// Domain basis indices inside the window.
    std::vector<BasisIndex> domain_basis(const WindowSpec& w) const;
};

/// second o first.
MapSpec compose(const MapSpec& second, const MapSpec& first);

/// map(x . v) = x . map(v) for every non-central generator |m| <= mode_bound
/// and domain basis vector v in the window. The map's parity is checked on
/// every image.
CheckResult check_intertwiner(const MapSpec& spec, int mode_bound, const WindowSpec& w);

/// g o f = id on the domain window of f.
CheckResult check_inverse(const MapSpec& f, const MapSpec& g, const WindowSpec& w);

/// phi : M_{A,1/2} even + D_t odd -> Pi(M_{A,0}) with phi(w) = -xi w on even
/// w and phi(D_t xi v) = v. `family` is OmegaLambda or LaurentSeries with a
/// constant alpha outside Z, where D_t is invertible on the odd part.
MapSpec phi_map(const FamilyPtr& family);
MapSpec phi_inverse_map(const FamilyPtr& family);

/// M_{A,1/2} even + D_t odd -> M_t for A = C[t^{+-1}] + xi C[t^{+-1}]:
/// t^m -> xi t^m, D_t xi t^n -> -t^n (n != 0).
MapSpec psi_quotient_map();

/// Omega_R(mu, alpha) -> Omega_R(mu, 1/2 - alpha) with (x^2)^k -> xi D_t^k
/// and -x (x^2)^k -> D_t^k. With `literal` the image powers are D_t^(2k).
MapSpec psi_rank_two_map(const SymScalar& mu, const SymScalar& alpha, bool literal = false);

/// Identity M -> Pi(M).
MapSpec parity_change_map(const ModuleRef& m);

enum class HomParity { Even, Odd, Any };
HomParity parse_hom_parity(std::string_view s);

struct HomSpace {
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::size_t dimension = 0;
    long constraints = 0;
    long dropped = 0;
};

/// Window solutions of T(x . v) = x . T(v) for T mapping the source window
/// into the target window, |m| <= mode_bound. A constraint (x, v) is dropped
/// when x . v leaves the source window. Numeric modules only.
HomSpace hom_space(const ModuleRef& source, const ModuleRef& target, int mode_bound, const WindowSpec& w,
                   HomParity parity = HomParity::Even);

/// Reports hom_space and compares the dimension against [min_dim, max_dim].
CheckResult hom_dimension_check(const ModuleRef& source, const ModuleRef& target, int mode_bound,
                                const WindowSpec& w, HomParity parity, std::size_t min_dim,
                                std::optional<std::size_t> max_dim);

/// The H_m obstruction: no even map V_{A,1/2} -> Pi(V_{A,0}) commutes with
/// T on the window (A = LaurentSeries alpha = 1/2), while the R analogue and
/// the identity have nonzero solution spaces.
CheckResult witness_non_isomorphism_T(int mode_bound, const WindowSpec& w);

} // namespace ramond
