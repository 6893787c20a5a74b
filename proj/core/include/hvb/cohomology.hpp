#pragma once

#include "hvb/linear_rule.hpp"
#include "hvb/linsolve.hpp"

#include <optional>
#include <vector>

namespace hvb {

/// Result of solving x.v = rule(x) for a degree-0 tensor v.
struct InnerSolveResult {
    LinearSystem system;
    SolveReport report;
    std::vector<Monomial> unknowns;   // coordinates of v, in column order
    std::optional<TensorElement> v;   // particular solution when solvable
};

/// Unknowns are the coefficients of v in (L (x) L)_0 with legs of |degree| <= window.
/// A row x.v = rule(x) at coordinate m is kept only when every coordinate of v
/// that can reach m under x lies inside the window, so Infeasible is also a
/// certificate against any finite v. Throws OutOfWindow for a table rule that
/// is undefined on the window and std::invalid_argument for a rule that does
/// not preserve degree.
InnerSolveResult inner_solve(const LinearRule& rule, int window);

/// How a window truncates the derivation problem.
///  - Interior: a row is kept only when every coordinate it references is
///    inside the window. Nothing true is excluded, but derivations that are
///    inner only through an infinite sum cannot be told apart from inner ones.
///  - FiniteSupport: images are assumed to vanish outside the leg window and
///    every coordinate is compared. The inner subspace is then the set of
///    Delta_v whose images fit the window.
enum class H1Policy { Interior, FiniteSupport };

struct H1Report {
    int window = 0;
    H1Policy policy = H1Policy::Interior;
    std::size_t dimension = 0;
    /// Representatives of the stable classes modulo inner derivations, as tables
    /// on generators(window).
    std::vector<LinearRule> stable_classes;
    /// Nullity of the truncated system at the window itself, before filtering.
    std::size_t raw_nullity = 0;
    /// Rank of the inner derivations restricted to the window.
    std::size_t inner_rank = 0;
};

/// Degree-0 derivations L -> L (x) L modulo inner ones, estimated on a window.
/// Unknowns are phi(b) for |deg b| <= window with legs of |degree| <= 2 window.
/// Solutions are computed at window + 2 and restricted, so every reported class
/// extends to the larger window; the count is
/// rank(restricted kernel + inner) - rank(inner). Throws std::invalid_argument
/// for diffops and for window < 3.
H1Report h1_degree_zero(const AlgebraSpec& alg, int window, H1Policy policy = H1Policy::Interior);

/// Rank of the given derivations modulo the inner subspace h1_degree_zero uses.
std::size_t h1_span_rank(const AlgebraSpec& alg, int window, const std::vector<LinearRule>& rules,
                         H1Policy policy = H1Policy::Interior);

/// Basis of tensors of the given arity with legs of |degree| <= window that are
/// killed by every generator of |degree| <= window. Only vectors that survive
/// at window + 2 are returned.
std::vector<TensorElement> invariant_tensors(const AlgebraSpec& alg, int arity, int window, bool antisymmetric_only);

enum class HomRows {
    Full,
    /// Only rows from L_0, from [L_{-m}, I_m] and from the center.
    Partial,
};

/// Linear system for W-module maps f from the ideal span{I_m, CL, CI, CLI} of
/// twisted-hv into W (x) W.
struct HomSolveResult {
    LinearSystem system;
    SolveReport report;
    struct Unknown {
        BasisVector h;
        Monomial m;
    };
    std::vector<Unknown> unknowns;

    /// f(h) read off a vector over the unknowns.
    TensorElement image(const BasisVector& h, const SparseVec& x) const;
};

HomSolveResult module_hom_solve(int window, HomRows rows = HomRows::Full);

}  // namespace hvb
