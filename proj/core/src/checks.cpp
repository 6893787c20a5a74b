#include "hvb/checks.hpp"

#include "hvb/errors.hpp"
#include "hvb/format.hpp"

#include <algorithm>

namespace hvb {

namespace {

Verdict make_verdict(std::string check, const AlgebraSpec& alg, int window)
{
    Verdict v;
    v.check = std::move(check);
    v.algebra = alg.id();
    v.window = window;
    return v;
}

void fail(Verdict& v, std::string input, TensorElement residual)
{
    v.pass = false;
    v.witnesses.push_back({std::move(input), std::move(residual)});
}

std::string pair_label(const BasisVector& x, const BasisVector& y) { return "(" + to_string(x) + ", " + to_string(y) + ")"; }

Verdict identity_check(std::string name, const AlgebraSpec& alg, const LinearRule& rule, int window)
{
    auto v = make_verdict(std::move(name), alg, window);
    const auto gens = alg.generators(window);
    for (std::size_t a = 0; a < gens.size() && v.pass; ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            auto res = derivation_residual(alg, rule, gens[a], gens[b]);
            if (!res.is_zero()) {
                fail(v, pair_label(gens[a], gens[b]), std::move(res));
                break;
            }
        }
    return v;
}

}  // namespace

bool BialgebraVerdict::pass() const
{
    return std::all_of(axioms.begin(), axioms.end(), [](const Verdict& v) { return v.pass; });
}

bool BialgebraVerdict::has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

const Verdict* BialgebraVerdict::axiom(const std::string& check) const
{
    for (const auto& v : axioms)
        if (v.check == check)
            return &v;
    return nullptr;
}

TensorElement c_of_r(const AlgebraSpec& alg, const TensorElement& r)
{
    if (r.arity() != 2)
        throw ArityMismatch("c(r) expects an arity-2 r");
    TensorElement out(3);
    for (const auto& [mi, ci] : r) {
        const BasisVector &ai = mi[0], &bi = mi[1];
        for (const auto& [mj, cj] : r) {
            const BasisVector &aj = mj[0], &bj = mj[1];
            const Scalar c = ci * cj;
            for (const auto& [x, cx] : alg.bracket(ai, aj))
                out.add_term(Monomial::of(x, bi, bj), c * cx);
            for (const auto& [x, cx] : alg.bracket(bi, aj))
                out.add_term(Monomial::of(ai, x, bj), c * cx);
            for (const auto& [x, cx] : alg.bracket(bi, bj))
                out.add_term(Monomial::of(ai, aj, x), c * cx);
        }
    }
    return out;
}

TensorElement apply_right(const LinearRule& rule, const TensorElement& t)
{
    if (t.arity() != 2 || rule.codomain_arity() != 2)
        throw ArityMismatch("apply_right expects an arity-2 tensor and an arity-2 rule");
    TensorElement out(3);
    for (const auto& [m, c] : t)
        for (const auto& [n, cn] : rule(m[1]))
            out.add_term(Monomial::of(m[0], n[0], n[1]), c * cn);
    return out;
}

TensorElement derivation_residual(const AlgebraSpec& alg, const LinearRule& rule, const BasisVector& x,
                                  const BasisVector& y)
{
    TensorElement res = rule(alg.bracket(elem(x), elem(y)));
    res -= diagonal_action(alg, x, rule(y));
    res += diagonal_action(alg, y, rule(x));
    return res;
}

Verdict check_cybe(const AlgebraSpec& alg, const TensorElement& r)
{
    auto v = make_verdict("cybe", alg, 0);
    auto c = c_of_r(alg, r);
    if (!c.is_zero())
        fail(v, "c(r)", std::move(c));
    return v;
}

Verdict check_mcybe(const AlgebraSpec& alg, const TensorElement& r, int window)
{
    auto v = make_verdict("mcybe", alg, window);
    const auto c = c_of_r(alg, r);
    if (c.is_zero())
        return v;
    for (const auto& x : alg.generators(window)) {
        auto res = diagonal_action(alg, x, c);
        if (!res.is_zero())
            fail(v, to_string(x), std::move(res));
    }
    return v;
}

Verdict check_derivation(const AlgebraSpec& alg, const LinearRule& rule, int window)
{
    return identity_check("derivation", alg, rule, window);
}

Verdict check_compatibility(const AlgebraSpec& alg, const LinearRule& rule, int window)
{
    return identity_check("compatibility", alg, rule, window);
}

Verdict check_antisymmetry(const AlgebraSpec& alg, const LinearRule& rule, int window)
{
    auto v = make_verdict("antisymmetry", alg, window);
    for (const auto& x : alg.generators(window)) {
        const auto img = rule(x);
        auto sym = img + twist(img);
        if (!sym.is_zero())
            fail(v, to_string(x), std::move(sym));
    }
    return v;
}

Verdict check_cojacobi(const AlgebraSpec& alg, const LinearRule& rule, int window)
{
    auto v = make_verdict("cojacobi", alg, window);
    for (const auto& x : alg.generators(window)) {
        auto res = cyclic_sum(apply_right(rule, rule(x)));
        if (!res.is_zero())
            fail(v, to_string(x), std::move(res));
    }
    return v;
}

Verdict check_coalgebra(const AlgebraSpec& alg, const LinearRule& rule, int window)
{
    auto v = make_verdict("coalgebra", alg, window);
    for (auto part : {check_antisymmetry(alg, rule, window), check_cojacobi(alg, rule, window)})
        for (auto& w : part.witnesses)
            fail(v, part.check + " " + w.input, std::move(w.residual));
    return v;
}

BialgebraVerdict verdict_bialgebra(const AlgebraSpec& alg, const LinearRule& rule, int window)
{
    BialgebraVerdict out;
    out.algebra = alg.id();
    out.window = window;
    out.axioms.push_back(check_compatibility(alg, rule, window));
    out.axioms.push_back(check_antisymmetry(alg, rule, window));
    out.axioms.push_back(check_cojacobi(alg, rule, window));
    const auto& r = rule.coboundary_of();
    if (r) {
        out.axioms.push_back(check_cybe(alg, *r));
        out.axioms.push_back(check_mcybe(alg, *r, window));
    }
    const bool cocycle = out.axioms[0].pass;
    const bool coalgebra = out.axioms[1].pass && out.axioms[2].pass;
    if (cocycle)
        out.tags.push_back("cocycle");
    if (coalgebra)
        out.tags.push_back("coalgebra");
    if (cocycle && coalgebra)
        out.tags.push_back("bialgebra");
    if (r) {
        out.tags.push_back("coboundary");
        if (cocycle && coalgebra && out.axiom("cybe")->pass)
            out.tags.push_back("triangular");
    }
    return out;
}

Verdict check_lie_algebra(const AlgebraSpec& alg, int window)
{
    auto v = make_verdict("lie-algebra", alg, window);
    const auto gens = alg.generators(window);
    for (const auto& x : gens)
        for (const auto& y : gens) {
            auto s = alg.bracket(x, y) + alg.bracket(y, x);
            if (!s.is_zero())
                fail(v, "antisymmetry " + pair_label(x, y), TensorElement::from_element(s));
        }
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            const Element xy = alg.bracket(gens[a], gens[b]);
            for (std::size_t c = b + 1; c < gens.size(); ++c) {
                const Element x = elem(gens[a]), y = elem(gens[b]), z = elem(gens[c]);
                Element j = alg.bracket(x, alg.bracket(y, z)) + alg.bracket(y, alg.bracket(z, x)) + alg.bracket(z, xy);
                if (!j.is_zero())
                    fail(v, "jacobi (" + to_string(gens[a]) + ", " + to_string(gens[b]) + ", " + to_string(gens[c]) + ")",
                         TensorElement::from_element(j));
            }
        }
    return v;
}

}  // namespace hvb
