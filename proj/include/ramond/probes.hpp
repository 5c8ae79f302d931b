#pragma once

// Finite-window evidence: orbit spans, submodule closure, the symbolic
// k-polynomial identities and the restricted-module contrast.

#include <map>
#include <optional>
#include <vector>

#include "ramond/linalg.hpp"
#include "ramond/modules.hpp"

namespace ramond {

using Span = RowSpace<BasisIndex>;

/// Rational coefficients of a numeric vector as an integral row.
Span::Row numeric_row(const Vector& v);

struct OrbitResult {
    std::size_t span_dim = 0;
    std::size_t inner_window_dim = 0;
    bool filled_inner = false;
    std::vector<BasisIndex> missing;
    int rounds = 0;
    bool converged = false;
    long leaked_images = 0;
    Span span;
};

/// Span of U(g) seed inside the window. Each round applies every generator
/// with |m| <= mode_bound to every row of the current span; leaking images
/// are discarded. Requires numeric parameters.
OrbitResult orbit_span(const ActionConfig& cfg, const Vector& seed, const WindowSpec& w, int max_rounds,
                       const std::optional<std::vector<Generator>>& order = std::nullopt);

/// Basis indices of the inner window (t_bound shrunk by mode_bound).
std::vector<BasisIndex> inner_window(const ActionConfig& cfg, const WindowSpec& w);

CheckResult orbit_report(const ActionConfig& cfg, const Vector& seed, const WindowSpec& w, int max_rounds,
                         bool expect_filled);

/// Every non-leaking image act(x, u), u a candidate vector, lies in the
/// candidate span. The first escaping image is the witness.
CheckResult submodule_closure(const ActionConfig& cfg, const std::vector<Vector>& candidate, const WindowSpec& w,
                              const std::string& anchor = "submodule structure");

/// Candidate generators for the documented submodules.
std::vector<Vector> candidate_constant(const ActionConfig& cfg);
/// span{t^i, (alpha + i) xi t^i}: the even part plus D_t applied to the odd part.
std::vector<Vector> candidate_even_plus_dt_odd(const ActionConfig& cfg, const WindowSpec& w);
std::vector<Vector> candidate_even_part(const ActionConfig& cfg, const WindowSpec& w);

enum class WordFamily { LG, GG };
WordFamily parse_word_family(std::string_view s);

/// L_k G_{m-k} v (LG) or G_k G_{m-k} v (GG) with k a formal parameter,
/// returned as k-degree -> coefficient vector. R configurations only.
std::map<int, Vector> extract_k_polynomial(const ActionConfig& cfg, WordFamily family, int m, const Vector& v);

/// The k^2 coefficient of LG is b(1-2b) t^m xi v and the k coefficient of
/// GG is (2b t^m + (1-4b) xi t^m d_xi) v, for all |m| <= mode_bound and
/// window basis vectors v.
CheckResult check_k_identities(const ActionConfig& cfg, int mode_bound, const WindowSpec& w);

/// Modes k in [0, mode_bound] whose every non-central generator kills v.
std::vector<int> annihilating_modes(const ActionConfig& cfg, const Vector& v, int mode_bound);
CheckResult restricted_contrast(const ActionConfig& cfg, const Vector& v, int mode_bound, bool expect_empty = true);

} // namespace ramond
