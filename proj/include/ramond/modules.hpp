#pragma once

// V_{A,b} (over T) and M_{A,b} (over R) on the carrier families.

#include "ramond/algebra.hpp"

namespace ramond {

struct ActionConfig {
    Algebra algebra = Algebra::R;
    FamilyPtr family;
    SymScalar b;
    /// Quotient by the trivial submodule C t^0; only for LaurentSeries with
    /// alpha = 0 and b = 0. The even t^0 component of every image is dropped.
    bool drop_constant = false;

    /// Throws ConfigError on inconsistent settings.
    void validate() const;
    std::string describe() const;
    bool is_numeric() const;
    ActionConfig substituted(const Bindings& bindings) const;
    /// Same family and b over the other algebra.
    ActionConfig over(Algebra a) const;
};

/// Generic route: the realized generator twisted by sigma_b, applied as
/// Weyl words. C acts as 0.
Vector act(const Generator& x, const Vector& v, const ActionConfig& cfg);
Vector act(const AlgebraElement& x, const Vector& v, const ActionConfig& cfg);

/// Direct route: closed-form action per family, independent of the Weyl
/// word machinery.
Vector act_display(const Generator& x, const Vector& v, const ActionConfig& cfg);

/// Window basis of the module carrier (the quotient drops t^0).
std::vector<BasisIndex> module_basis(const ActionConfig& cfg, const WindowSpec& window);

/// act([x,y]) = x y - (-1)^{|x||y|} y x on window basis vectors.
CheckResult check_module_axiom(const ActionConfig& cfg, int mode_bound, const WindowSpec& window,
                               const BracketTable& table = BracketTable::standard());

/// act_R(x) = act_T(Phi x) on window basis vectors, |m| <= mode_bound.
CheckResult check_restriction_consistency(const ActionConfig& cfg_T, int mode_bound, const WindowSpec& window);

/// act = act_display on window basis vectors.
CheckResult check_display_agreement(const ActionConfig& cfg, int mode_bound, const WindowSpec& window);

} // namespace ramond
