#pragma once

#include "hvb/format.hpp"

#include <string_view>

namespace hvb {

// Expression grammar:
//
//   expr     := [sign] product (('+' | '-') product)*
//   product  := factor ('(x)' factor)*
//   factor   := [sign] [rational] (basis | '(' expr ')')
//   rational := digits ['/' digits]
//   basis    := L[int] | I[int] | Y[int] | E[int,nat] | CL | CI | CLI | C
//
// '(x)' is the tensor product and binds tighter than '+'/'-', so
// "L[0] (x) I[1] - I[1] (x) L[0]" is a sum of two monomials. The literal "0"
// denotes the zero vector.
//
// Errors: SyntaxError with 1-based line/column, InadmissibleBasis when a symbol
// does not belong to the algebra.

/// Parses an expression of any arity 1..3.
TensorElement parse_expression(std::string_view src, const AlgebraSpec& alg);

/// Parses an arity-1 expression.
Element parse_element(std::string_view src, const AlgebraSpec& alg);

/// Parses an expression that must have the given arity ("0" is accepted for any arity).
TensorElement parse_tensor(std::string_view src, const AlgebraSpec& alg, int arity);

}  // namespace hvb
