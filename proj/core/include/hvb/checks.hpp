#pragma once

#include "hvb/linear_rule.hpp"

#include <string>
#include <vector>

namespace hvb {

struct Witness {
    std::string input;
    TensorElement residual;
};

/// Outcome of one mechanical check over a finite window. A PASS is evidence on
/// the window, not a proof for the whole algebra.
struct Verdict {
    std::string check;
    std::string algebra;
    int window = 0;
    bool pass = true;
    std::vector<Witness> witnesses;
};

struct BialgebraVerdict {
    std::string algebra;
    int window = 0;
    std::vector<Verdict> axioms;
    /// Subset of {cocycle, coalgebra, bialgebra, coboundary, triangular}.
    std::vector<std::string> tags;

    bool pass() const;
    bool has_tag(const std::string& t) const;
    const Verdict* axiom(const std::string& check) const;
};

/// c(r) = [r12,r13] + [r12,r23] + [r13,r23], expanded as
///   sum [a_i,a_j] (x) b_i (x) b_j + a_i (x) [b_i,a_j] (x) b_j + a_i (x) a_j (x) [b_i,b_j].
TensorElement c_of_r(const AlgebraSpec& alg, const TensorElement& r);

/// (1 (x) rule) applied to an arity-2 tensor: a (x) b -> a (x) rule(b).
TensorElement apply_right(const LinearRule& rule, const TensorElement& t);

/// rule([x,y]) - x.rule(y) + y.rule(x); zero iff the pair satisfies the derivation identity.
TensorElement derivation_residual(const AlgebraSpec& alg, const LinearRule& rule, const BasisVector& x,
                                  const BasisVector& y);

Verdict check_cybe(const AlgebraSpec& alg, const TensorElement& r);
Verdict check_mcybe(const AlgebraSpec& alg, const TensorElement& r, int window);
Verdict check_derivation(const AlgebraSpec& alg, const LinearRule& rule, int window);
Verdict check_compatibility(const AlgebraSpec& alg, const LinearRule& rule, int window);
/// Images lie in Ker(1 + tau).
Verdict check_antisymmetry(const AlgebraSpec& alg, const LinearRule& rule, int window);
/// (1 + xi + xi^2)(1 (x) rule) rule(x) = 0.
Verdict check_cojacobi(const AlgebraSpec& alg, const LinearRule& rule, int window);
/// Antisymmetry and co-Jacobi together.
Verdict check_coalgebra(const AlgebraSpec& alg, const LinearRule& rule, int window);
BialgebraVerdict verdict_bialgebra(const AlgebraSpec& alg, const LinearRule& rule, int window);

/// Antisymmetry and Jacobi of the bracket on window basis vectors.
Verdict check_lie_algebra(const AlgebraSpec& alg, int window);

}  // namespace hvb
