#pragma once

// Slow, independent reference computations used to cross-check the library.

#include "hvb/algebra.hpp"
#include "hvb/tensor.hpp"

#include <array>
#include <map>
#include <vector>

namespace hvb::oracle {

// Elements of T(L) (x) T(L) (x) T(L) restricted to words of length <= 2 per leg.
using Word = std::vector<BasisVector>;
using WordTensor = std::map<std::array<Word, 3>, Scalar>;

inline void add_to(WordTensor& acc, const std::array<Word, 3>& key, const Scalar& c)
{
    auto& slot = acc[key];
    slot += c;
    if (slot == 0)
        acc.erase(key);
}

// r placed in legs (p, q) of a triple tensor.
inline WordTensor embed(const TensorElement& r, int p, int q)
{
    WordTensor out;
    for (const auto& [m, c] : r) {
        std::array<Word, 3> key;
        key[p] = {m[0]};
        key[q] = {m[1]};
        add_to(out, key, c);
    }
    return out;
}

inline WordTensor product(const WordTensor& a, const WordTensor& b)
{
    WordTensor out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            std::array<Word, 3> key;
            for (int leg = 0; leg < 3; ++leg) {
                key[leg] = ka[leg];
                key[leg].insert(key[leg].end(), kb[leg].begin(), kb[leg].end());
            }
            add_to(out, key, ca * cb);
        }
    return out;
}

inline WordTensor commutator(const WordTensor& a, const WordTensor& b)
{
    WordTensor out = product(a, b);
    for (const auto& [k, c] : product(b, a))
        add_to(out, k, -c);
    return out;
}

// c(r) computed as honest commutators in the tensor algebra. Every surviving
// leg word is either a single letter or a two-letter word coming from a
// commutator; ab -> [a,b]/2 maps ab - ba to [a,b].
inline TensorElement c_of_r(const AlgebraSpec& alg, const TensorElement& r)
{
    WordTensor total;
    for (const auto& part : {commutator(embed(r, 0, 1), embed(r, 0, 2)), commutator(embed(r, 0, 1), embed(r, 1, 2)),
                             commutator(embed(r, 0, 2), embed(r, 1, 2))})
        for (const auto& [k, c] : part)
            add_to(total, k, c);

    TensorElement out(3);
    for (const auto& [k, c] : total) {
        std::array<Element, 3> legs;
        for (int leg = 0; leg < 3; ++leg) {
            const Word& w = k[leg];
            if (w.size() == 1)
                legs[leg] = Element(w[0]);
            else
                legs[leg] = scale(Scalar(1, 2), alg.bracket(w[0], w[1]));
        }
        out.add_scaled(TensorElement::product(legs[0], legs[1], legs[2]), c);
    }
    return out;
}

// x . t leg by leg, straight from the basis bracket.
inline TensorElement act(const AlgebraSpec& alg, const BasisVector& x, const TensorElement& t)
{
    TensorElement out(t.arity());
    for (const auto& [m, c] : t)
        for (int leg = 0; leg < t.arity(); ++leg)
            for (const auto& [b, d] : alg.bracket(x, m[leg])) {
                Monomial n = m;
                n.legs[leg] = b;
                out.add_term(n, c * d);
            }
    return out;
}

struct DenseResult {
    std::size_t rank = 0;
    bool consistent = true;
};

// Plain Gauss-Jordan on a dense augmented matrix; the last column is the rhs.
inline DenseResult dense_solve(std::vector<std::vector<Scalar>> a)
{
    DenseResult res;
    if (a.empty())
        return res;
    std::size_t cols = a[0].size() - 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0)
                continue;
            Scalar f = a[i][col] / a[row][col];
            for (std::size_t j = col; j <= cols; ++j)
                a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    res.rank = row;
    for (std::size_t i = row; i < a.size(); ++i)
        if (a[i][cols] != 0)
            res.consistent = false;
    return res;
}

}  // namespace hvb::oracle
