#pragma once

#include "hvb/tensor.hpp"

#include <string>

namespace hvb {

/// Deterministic text form in the expression grammar, e.g. "1/2 L[2] - CI"
/// or "L[0] (x) I[1] - I[1] (x) L[0]". The zero vector prints as "0".
std::string to_string(const Element& x);
std::string to_string(const TensorElement& t);
std::string to_string(const Monomial& m);

}  // namespace hvb
