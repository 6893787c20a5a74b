#pragma once

#include "hvb/linear_rule.hpp"

namespace hvb {

/// Parameters shared by the rho (twisted-hv) and sv families. Daggered
/// scalars/selectors act on the right tensor leg.
struct FamilyParams {
    Scalar alpha = 0, alpha_dag = 0;
    Scalar beta = 0, beta_dag = 0;
    Scalar gamma = 0, gamma_dag = 0;
    BasisVector z1 = BasisVector::I(0), z1_dag = BasisVector::I(0);
    BasisVector w1 = BasisVector::I(0), w1_dag = BasisVector::I(0);

    /// alpha = -alpha_dag, beta = -beta_dag, gamma = -gamma_dag, z1 = z1_dag, w1 = w1_dag.
    bool in_d0() const;
};

/// Outer derivations of twisted-hv into itself:
///   chi(L_n)  = (alpha n + gamma) I_n + delta_{n,0} (gamma + alpha) CLI
///   chi(I_n)  = beta I_n + delta_{n,0} (alpha + gamma) CI
///   chi(CL)   = -24 alpha CLI,  chi(CLI) = beta CLI - alpha CI,  chi(CI) = 2 beta CI
LinearRule chi_family(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

/// The six-parameter family of outer derivations twisted-hv -> L (x) L with
/// images in center (x) L + L (x) center. Throws InvalidSelector when a
/// selector is not in center_basis(twisted-hv).
LinearRule rho_family(const FamilyParams& p);

/// Centerless analogue on g1 (all selectors are I_0).
LinearRule g1_family(const Scalar& alpha, const Scalar& alpha_dag, const Scalar& beta, const Scalar& beta_dag,
                     const Scalar& gamma, const Scalar& gamma_dag);

/// zeta(t^m) = 0, zeta(t^m D^n) = alpha n t^m D^{n-1} (x) 1 + alpha_dag n 1 (x) t^m D^{n-1}.
LinearRule zeta_family(const Scalar& alpha, const Scalar& alpha_dag, int max_order = 3);

/// Schrodinger-Virasoro family; selectors must lie in {I_0, C}.
LinearRule sv_family(const FamilyParams& p);

/// Single-parameter generators of rho_family: {alpha, gamma, beta} x center x
/// {left, right}. 24 rules, in a fixed order.
std::vector<LinearRule> rho_generators();

/// Single-parameter generators of g1_family (6 rules).
std::vector<LinearRule> g1_generators();

}  // namespace hvb
