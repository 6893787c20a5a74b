#include "hvb/tensor.hpp"

#include "hvb/errors.hpp"

#include <algorithm>

namespace hvb {

TensorElement::TensorElement(int arity) : arity_(arity)
{
    if (arity < 1 || arity > 3)
        throw ArityMismatch("tensor arity must be 1, 2 or 3");
}

TensorElement TensorElement::from_element(const Element& x)
{
    TensorElement t(1);
    for (const auto& [b, c] : x)
        t.add_term(Monomial::of(b), c);
    return t;
}

TensorElement TensorElement::product(const Element& a, const Element& b)
{
    TensorElement t(2);
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            t.add_term(Monomial::of(x, y), cx * cy);
    return t;
}

TensorElement TensorElement::product(const Element& a, const Element& b, const Element& c)
{
    TensorElement t(3);
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            for (const auto& [z, cz] : c)
                t.add_term(Monomial::of(x, y, z), cx * cy * cz);
    return t;
}

TensorElement TensorElement::monomial(const Monomial& m, const Scalar& c)
{
    TensorElement t(m.arity);
    t.add_term(m, c);
    return t;
}

void TensorElement::add_term(const Monomial& m, const Scalar& c)
{
    if (m.arity != arity_)
        throw ArityMismatch("monomial of arity " + std::to_string(m.arity) + " added to tensor of arity " +
                            std::to_string(arity_));
    terms_.add_term(m, c);
}

void TensorElement::add_scaled(const TensorElement& other, const Scalar& c)
{
    if (other.arity_ != arity_)
        throw ArityMismatch("cannot combine tensors of arity " + std::to_string(arity_) + " and " +
                            std::to_string(other.arity_));
    terms_.add_scaled(other.terms_, c);
}

Element TensorElement::as_element() const
{
    if (arity_ != 1)
        throw ArityMismatch("expected an arity-1 tensor");
    Element x;
    for (const auto& [m, c] : terms_)
        x.add_term(m[0], c);
    return x;
}

TensorElement scale(const Scalar& c, const TensorElement& t)
{
    TensorElement out(t.arity_);
    out.terms_ = scale(c, t.terms_);
    return out;
}

Scalar degree(const AlgebraSpec& alg, const Monomial& m)
{
    Scalar d = 0;
    for (int k = 0; k < m.arity; ++k)
        d += alg.degree(m[k]);
    return d;
}

TensorElement diagonal_action(const AlgebraSpec& alg, const BasisVector& x, const TensorElement& t)
{
    TensorElement out(t.arity());
    if (x.is_central_symbol()) {
        alg.require_admissible(x);
        return out;
    }
    for (const auto& [m, c] : t) {
        for (int k = 0; k < m.arity; ++k) {
            for (const auto& [b, cb] : alg.bracket(x, m[k])) {
                Monomial n = m;
                n.legs[k] = b;
                out.add_term(n, c * cb);
            }
        }
    }
    return out;
}

TensorElement diagonal_action(const AlgebraSpec& alg, const Element& x, const TensorElement& t)
{
    TensorElement out(t.arity());
    for (const auto& [b, c] : x)
        out.add_scaled(diagonal_action(alg, b, t), c);
    return out;
}

TensorElement twist(const TensorElement& t)
{
    if (t.arity() != 2)
        throw ArityMismatch("twist expects an arity-2 tensor");
    TensorElement out(2);
    for (const auto& [m, c] : t)
        out.add_term(Monomial::of(m[1], m[0]), c);
    return out;
}

TensorElement cyclic(const TensorElement& t)
{
    if (t.arity() != 3)
        throw ArityMismatch("cyclic map expects an arity-3 tensor");
    TensorElement out(3);
    for (const auto& [m, c] : t)
        out.add_term(Monomial::of(m[1], m[2], m[0]), c);
    return out;
}

TensorElement cyclic_sum(const TensorElement& t)
{
    const TensorElement once = cyclic(t);
    return t + once + cyclic(once);
}

SymmetrySplit antisym_split(const TensorElement& t)
{
    const TensorElement swapped = twist(t);
    const Scalar half(1, 2);
    return {half * (t - swapped), half * (t + swapped)};
}

bool is_antisymmetric(const TensorElement& t) { return (t + twist(t)).is_zero(); }

std::variant<CentralReduction, NotReducible> reduce_mod_center(const AlgebraSpec& alg, const TensorElement& v)
{
    auto split = antisym_split(v);
    const auto center = alg.center_basis();
    auto central = [&](const BasisVector& b) { return std::find(center.begin(), center.end(), b) != center.end(); };
    TensorElement offending(2);
    for (const auto& [m, c] : split.symmetric)
        if (!central(m[0]) || !central(m[1]))
            offending.add_term(m, c);
    if (!offending.is_zero())
        return NotReducible{offending};
    return CentralReduction{split.antisymmetric, split.symmetric};
}

}  // namespace hvb
