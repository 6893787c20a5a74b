#pragma once

#include "hvb/scalar.hpp"

#include <map>
#include <type_traits>
#include <utility>

namespace hvb {

/// Finite linear combination of keys with nonzero rational coefficients.
/// Keys iterate in their natural (total) order, so output is deterministic.
template <class K>
class FreeVector {
public:
    using key_type = K;
    using container = std::map<K, Scalar>;
    using const_iterator = typename container::const_iterator;

    FreeVector() = default;
    explicit FreeVector(const K& k, const Scalar& c = 1) { add_term(k, c); }

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const K& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    /// Accumulates c*k in place, pruning the entry if it cancels.
    void add_term(const K& k, const Scalar& c)
    {
        if (is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (hvb::is_zero(it->second))
                terms_.erase(it);
        }
    }

    void add_scaled(const FreeVector& other, const Scalar& c)
    {
        if (is_zero(c))
            return;
        for (const auto& [k, v] : other.terms_)
            add_term(k, c * v);
    }

    FreeVector& operator+=(const FreeVector& o)
    {
        add_scaled(o, 1);
        return *this;
    }
    FreeVector& operator-=(const FreeVector& o)
    {
        add_scaled(o, -1);
        return *this;
    }

    friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
    friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
    friend FreeVector operator-(const FreeVector& a) { return scale(Scalar(-1), a); }

    friend FreeVector scale(const Scalar& c, const FreeVector& v)
    {
        FreeVector out;
        if (hvb::is_zero(c))
            return out;
        for (const auto& [k, x] : v.terms_)
            out.terms_.emplace_hint(out.terms_.end(), k, c * x);
        return out;
    }
    friend FreeVector operator*(const Scalar& c, const FreeVector& v) { return scale(c, v); }

    friend bool operator==(const FreeVector& a, const FreeVector& b) { return a.terms_ == b.terms_; }

    template <class F>
    FreeVector<std::invoke_result_t<F, const K&>> map_keys(F&& f) const
    {
        FreeVector<std::invoke_result_t<F, const K&>> out;
        for (const auto& [k, c] : terms_)
            out.add_term(f(k), c);
        return out;
    }

private:
    static bool is_zero(const Scalar& c) { return hvb::is_zero(c); }
    container terms_;
};

template <class K>
FreeVector<K> add(const FreeVector<K>& v, const FreeVector<K>& w)
{
    return v + w;
}

}  // namespace hvb
