#include "hvb/format.hpp"

namespace hvb {

namespace {

template <class V, class KeyPrinter>
std::string print_sum(const V& terms, KeyPrinter&& key)
{
    if (terms.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        const bool negative = sgn(c) < 0;
        const Scalar mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1)
            out += to_string(mag) + " ";
        out += key(k);
        first = false;
    }
    return out;
}

}  // namespace

std::string to_string(const Monomial& m)
{
    std::string out;
    for (int k = 0; k < m.arity; ++k) {
        if (k)
            out += " (x) ";
        out += to_string(m[k]);
    }
    return out;
}

std::string to_string(const Element& x)
{
    return print_sum(x, [](const BasisVector& b) { return to_string(b); });
}

std::string to_string(const TensorElement& t)
{
    return print_sum(t.terms(), [](const Monomial& m) { return to_string(m); });
}

}  // namespace hvb
