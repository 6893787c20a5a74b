#pragma once

#include "hvb/algebra.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <variant>

namespace hvb {

/// A pure tensor of basis vectors with 1 to 3 legs.
struct Monomial {
    std::uint8_t arity = 0;
    std::array<BasisVector, 3> legs{};

    static Monomial of(const BasisVector& a) { return {1, {a, {}, {}}}; }
    static Monomial of(const BasisVector& a, const BasisVector& b) { return {2, {a, b, {}}}; }
    static Monomial of(const BasisVector& a, const BasisVector& b, const BasisVector& c) { return {3, {a, b, c}}; }

    const BasisVector& operator[](std::size_t k) const { return legs[k]; }

    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of L, L(x)L or L(x)L(x)L as a sparse combination of monomials.
class TensorElement {
public:
    explicit TensorElement(int arity = 2);

    static TensorElement from_element(const Element& x);
    static TensorElement product(const Element& a, const Element& b);
    static TensorElement product(const Element& a, const Element& b, const Element& c);
    static TensorElement monomial(const Monomial& m, const Scalar& c = 1);

    int arity() const { return arity_; }
    const FreeVector<Monomial>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.is_zero(); }
    Scalar coeff(const Monomial& m) const { return terms_.coeff(m); }

    void add_term(const Monomial& m, const Scalar& c);
    void add_scaled(const TensorElement& other, const Scalar& c);

    /// Arity-1 view as an algebra element. Throws ArityMismatch otherwise.
    Element as_element() const;

    TensorElement& operator+=(const TensorElement& o)
    {
        add_scaled(o, 1);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o)
    {
        add_scaled(o, -1);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator-(const TensorElement& a) { return scale(Scalar(-1), a); }
    friend TensorElement scale(const Scalar& c, const TensorElement& t);
    friend TensorElement operator*(const Scalar& c, const TensorElement& t) { return scale(c, t); }
    friend bool operator==(const TensorElement& a, const TensorElement& b)
    {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    int arity_;
    FreeVector<Monomial> terms_;
};

Scalar degree(const AlgebraSpec& alg, const Monomial& m);

/// x . (a (x) b) = [x,a] (x) b + a (x) [x,b], and the three-leg analogue.
/// Arity-1 tensors are acted on by the adjoint action.
TensorElement diagonal_action(const AlgebraSpec& alg, const BasisVector& x, const TensorElement& t);
TensorElement diagonal_action(const AlgebraSpec& alg, const Element& x, const TensorElement& t);

/// tau(a (x) b) = b (x) a. Throws ArityMismatch unless arity 2.
TensorElement twist(const TensorElement& t);
/// xi(a (x) b (x) c) = b (x) c (x) a. Throws ArityMismatch unless arity 3.
TensorElement cyclic(const TensorElement& t);
/// (1 + xi + xi^2) t
TensorElement cyclic_sum(const TensorElement& t);

struct SymmetrySplit {
    TensorElement antisymmetric;
    TensorElement symmetric;
};

/// t = A + S with A = (t - tau t)/2, S = (t + tau t)/2.
SymmetrySplit antisym_split(const TensorElement& t);

struct CentralReduction {
    TensorElement antisymmetric;  // lies in Im(1 - tau)
    TensorElement central;        // lies in center (x) center
};

struct NotReducible {
    TensorElement offending;  // symmetric terms with a non-central leg
};

/// Writes v = u + c with u in Im(1 - tau) and c in C (x) C when possible.
std::variant<CentralReduction, NotReducible> reduce_mod_center(const AlgebraSpec& alg, const TensorElement& v);

bool is_antisymmetric(const TensorElement& t);

}  // namespace hvb
