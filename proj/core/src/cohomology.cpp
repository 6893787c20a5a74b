#include "hvb/cohomology.hpp"

#include "hvb/errors.hpp"
#include "hvb/format.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace hvb {

namespace {

Scalar abs_scalar(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

bool within(const AlgebraSpec& alg, const BasisVector& b, int cap) { return abs_scalar(alg.degree(b)) <= cap; }

bool legs_within(const AlgebraSpec& alg, const Monomial& m, int cap)
{
    for (int k = 0; k < m.arity; ++k)
        if (!within(alg, m[k], cap))
            return false;
    return true;
}

/// Every monomial that z can map onto m by acting on one leg has legs inside the cap.
bool reachable_inside(const AlgebraSpec& alg, const Monomial& m, const BasisVector& z, int cap)
{
    const Scalar dz = alg.degree(z);
    for (int k = 0; k < m.arity; ++k)
        if (abs_scalar(alg.degree(m[k]) - dz) > cap)
            return false;
    return legs_within(alg, m, cap);
}

using LegsByDegree = std::map<Scalar, std::vector<BasisVector>>;

LegsByDegree legs_by_degree(const AlgebraSpec& alg, int cap)
{
    LegsByDegree out;
    for (const auto& b : alg.generators(cap))
        out[alg.degree(b)].push_back(b);
    return out;
}

std::vector<Monomial> monomials_of_degree(const LegsByDegree& legs, int arity, const Scalar& deg)
{
    std::vector<Monomial> out;
    auto of = [&](const Scalar& d) -> const std::vector<BasisVector>* {
        auto it = legs.find(d);
        return it == legs.end() ? nullptr : &it->second;
    };
    if (arity == 1) {
        if (const auto* v = of(deg))
            for (const auto& a : *v)
                out.push_back(Monomial::of(a));
    } else if (arity == 2) {
        for (const auto& [da, as] : legs)
            if (const auto* bs = of(deg - da))
                for (const auto& a : as)
                    for (const auto& b : *bs)
                        out.push_back(Monomial::of(a, b));
    } else {
        for (const auto& [da, as] : legs)
            for (const auto& [db, bs] : legs)
                if (const auto* cs = of(deg - da - db))
                    for (const auto& a : as)
                        for (const auto& b : bs)
                            for (const auto& c : *cs)
                                out.push_back(Monomial::of(a, b, c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string coord_name(const Monomial& m) { return to_string(m); }

/// Derivation system: unknowns phi(b)_m for b in generators(window) and m of
/// degree deg b with legs inside cap.
struct DerivationSystem {
    LinearSystem system;
    std::vector<std::pair<BasisVector, Monomial>> keys;
    std::map<BasisVector, std::vector<std::pair<Monomial, int>>> unknowns_of;
};

DerivationSystem build_derivation_system(const AlgebraSpec& alg, int window, int cap, bool finite_support)
{
    DerivationSystem ds;
    const auto legs = legs_by_degree(alg, cap);
    const auto gens = alg.generators(window);
    // Outermost legs first: the rows then form a band and elimination stays sparse.
    std::vector<std::tuple<Scalar, Scalar, BasisVector, Monomial>> order;
    for (const auto& b : gens)
        for (const auto& m : monomials_of_degree(legs, 2, alg.degree(b))) {
            const Scalar s = abs_scalar(alg.degree(m[0]));
            const Scalar t = abs_scalar(alg.degree(m[1]));
            order.emplace_back(-std::max(s, t), alg.degree(m[0]), b, m);
        }
    std::sort(order.begin(), order.end());
    for (const auto& [outer, s, b, m] : order) {
        const int id = ds.system.add_unknown("phi(" + to_string(b) + ")[" + coord_name(m) + "]");
        ds.keys.emplace_back(b, m);
        ds.unknowns_of[b].emplace_back(m, id);
    }

    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const auto& x = gens[i];
            const auto& y = gens[j];
            const Element br = alg.bracket(x, y);
            bool inside = true;
            for (const auto& [c, k] : br)
                inside = inside && ds.unknowns_of.count(c);
            if (!inside)
                continue;

            std::map<Monomial, SparseVec> rows;
            for (const auto& [c, k] : br)
                for (const auto& [m, id] : ds.unknowns_of.at(c))
                    rows[m].emplace_back(id, k);
            auto act = [&](const BasisVector& z, const BasisVector& target, const Scalar& sign) {
                for (const auto& [m, id] : ds.unknowns_of.at(target))
                    for (const auto& [n, k] : diagonal_action(alg, z, TensorElement::monomial(m)))
                        rows[n].emplace_back(id, sign * k);
            };
            act(x, y, -1);
            act(y, x, 1);
            for (auto& [m, row] : rows) {
                if (!finite_support && (!reachable_inside(alg, m, x, cap) || !reachable_inside(alg, m, y, cap)))
                    continue;
                SparseVec r = normalize(std::move(row));
                if (!r.empty())
                    ds.system.add_row(std::move(r));
            }
        }
    }
    return ds;
}

/// Coordinates (b, m) with |deg b| <= window and legs of |degree| <= 2 window.
class CoreIndex {
public:
    CoreIndex(const AlgebraSpec& alg, int window, int cap) : alg_(alg), window_(window)
    {
        const auto legs = legs_by_degree(alg, cap);
        for (const auto& b : alg.generators(window))
            for (const auto& m : monomials_of_degree(legs, 2, alg.degree(b)))
                index_.emplace(std::make_pair(b, m), static_cast<int>(index_.size()));
        for (const auto& [key, id] : index_)
            key_of_.emplace(id, key);
    }

    std::optional<int> find(const BasisVector& b, const Monomial& m) const
    {
        auto it = index_.find({b, m});
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    SparseVec project(const DerivationSystem& ds, const SparseVec& v) const
    {
        SparseVec out;
        for (const auto& [col, c] : v) {
            const auto& [b, m] = ds.keys[static_cast<std::size_t>(col)];
            if (auto id = find(b, m))
                out.emplace_back(*id, c);
        }
        return normalize(std::move(out));
    }

    /// Restriction of an arbitrary rule.
    SparseVec restrict(const LinearRule& rule) const
    {
        SparseVec out;
        for (const auto& b : alg_.generators(window_))
            for (const auto& [m, c] : rule(b))
                if (auto id = find(b, m))
                    out.emplace_back(*id, c);
        return normalize(std::move(out));
    }

    EchelonBasis inner_span_of(const std::vector<TensorElement>& vs) const
    {
        EchelonBasis inner;
        const auto gens = alg_.generators(window_);
        for (const auto& t : vs) {
            SparseVec img;
            for (const auto& b : gens)
                for (const auto& [m, c] : diagonal_action(alg_, b, t))
                    if (auto id = find(b, m))
                        img.emplace_back(*id, c);
            inner.insert(normalize(std::move(img)));
        }
        return inner;
    }

    /// Restrictions of Delta_v for every degree-0 monomial v that reaches the core.
    EchelonBasis inner_span() const
    {
        EchelonBasis inner;
        const auto legs = legs_by_degree(alg_, 3 * window_);
        const auto gens = alg_.generators(window_);
        for (const auto& v : monomials_of_degree(legs, 2, 0)) {
            SparseVec img;
            const auto t = TensorElement::monomial(v);
            for (const auto& b : gens)
                for (const auto& [m, c] : diagonal_action(alg_, b, t))
                    if (auto id = find(b, m))
                        img.emplace_back(*id, c);
            inner.insert(std::move(img));
        }
        return inner;
    }

    LinearRule to_rule(const SparseVec& v, const std::string& name) const
    {
        LinearRule::Table table;
        for (const auto& b : alg_.generators(window_))
            table.emplace(b, TensorElement(2));
        for (const auto& [id, c] : v) {
            const auto& [b, m] = key_of_.at(id);
            table[b].add_term(m, c);
        }
        return LinearRule::table(alg_, 2, std::move(table), name);
    }

private:
    AlgebraSpec alg_;
    int window_;
    std::map<std::pair<BasisVector, Monomial>, int> index_;
    std::map<int, std::pair<BasisVector, Monomial>> key_of_;
};

/// Degree-0 tensors v whose Delta_v maps generators(window) into tensors with
/// legs inside cap.
std::vector<TensorElement> supported_inner(const AlgebraSpec& alg, int window, int cap)
{
    const auto legs = legs_by_degree(alg, cap);
    const auto monos = monomials_of_degree(legs, 2, 0);
    LinearSystem sys;
    for (const auto& m : monos)
        sys.add_unknown(coord_name(m));
    for (const auto& b : alg.generators(window)) {
        std::map<Monomial, SparseVec> rows;
        for (std::size_t id = 0; id < monos.size(); ++id)
            for (const auto& [n, k] : diagonal_action(alg, b, TensorElement::monomial(monos[id])))
                if (!legs_within(alg, n, cap))
                    rows[n].emplace_back(static_cast<int>(id), k);
        for (auto& [n, row] : rows)
            sys.add_row(std::move(row));
    }
    std::vector<TensorElement> out;
    for (const auto& v : solve_exact(sys).kernel) {
        TensorElement t(2);
        for (const auto& [id, c] : v)
            t.add_term(monos[static_cast<std::size_t>(id)], c);
        out.push_back(std::move(t));
    }
    return out;
}

void require_h1_input(const AlgebraSpec& alg, int window)
{
    if (alg.kind() == AlgebraKind::DiffOps)
        throw std::invalid_argument("h1: differential operators have no finite window of orders");
    if (window < 3)
        throw std::invalid_argument("h1: window must be at least 3");
}

}  // namespace

InnerSolveResult inner_solve(const LinearRule& rule, int window)
{
    if (rule.codomain_arity() != 2)
        throw ArityMismatch("inner_solve expects a rule into L (x) L");
    const AlgebraSpec& alg = rule.domain();
    InnerSolveResult res;
    const auto legs = legs_by_degree(alg, window);
    res.unknowns = monomials_of_degree(legs, 2, 0);
    for (const auto& m : res.unknowns)
        res.system.add_unknown(coord_name(m));

    for (const auto& x : alg.generators(window)) {
        const TensorElement image = rule(x);
        const Scalar dx = alg.degree(x);
        for (const auto& [m, c] : image)
            if (degree(alg, m) != dx)
                throw std::invalid_argument("inner_solve: rule does not preserve degree at " + to_string(x));
        std::map<Monomial, SparseVec> rows;
        for (std::size_t id = 0; id < res.unknowns.size(); ++id)
            for (const auto& [n, k] : diagonal_action(alg, x, TensorElement::monomial(res.unknowns[id])))
                rows[n].emplace_back(static_cast<int>(id), k);
        for (const auto& [m, c] : image)
            rows[m];
        for (auto& [m, row] : rows) {
            if (!reachable_inside(alg, m, x, window))
                continue;
            res.system.add_row(std::move(row), image.coeff(m));
        }
    }
    res.report = solve_exact(res.system);
    if (res.report.solvable()) {
        TensorElement v(2);
        for (std::size_t id = 0; id < res.unknowns.size(); ++id)
            v.add_term(res.unknowns[id], res.report.particular[id]);
        res.v = std::move(v);
    }
    return res;
}

namespace {

EchelonBasis inner_span_for(const AlgebraSpec& alg, const CoreIndex& core, int window, H1Policy policy)
{
    if (policy == H1Policy::Interior)
        return core.inner_span();
    const int big = window + 2;
    return core.inner_span_of(supported_inner(alg, big, 2 * big));
}

}  // namespace

H1Report h1_degree_zero(const AlgebraSpec& alg, int window, H1Policy policy)
{
    require_h1_input(alg, window);
    const bool finite = policy == H1Policy::FiniteSupport;
    H1Report rep;
    rep.window = window;
    rep.policy = policy;
    rep.raw_nullity = solve_exact(build_derivation_system(alg, window, 2 * window, finite).system).nullity;

    const int big = window + 2;
    const auto ds = build_derivation_system(alg, big, 2 * big, finite);
    const SolveReport sol = solve_exact(ds.system);

    const CoreIndex core(alg, window, 2 * window);
    EchelonBasis span = inner_span_for(alg, core, window, policy);
    rep.inner_rank = span.rank();
    int k = 0;
    for (const auto& v : sol.kernel) {
        SparseVec p = core.project(ds, v);
        if (span.insert(p))
            rep.stable_classes.push_back(core.to_rule(p, "h1-class-" + std::to_string(k++)));
    }
    rep.dimension = rep.stable_classes.size();
    return rep;
}

std::size_t h1_span_rank(const AlgebraSpec& alg, int window, const std::vector<LinearRule>& rules, H1Policy policy)
{
    require_h1_input(alg, window);
    const CoreIndex core(alg, window, 2 * window);
    EchelonBasis span = inner_span_for(alg, core, window, policy);
    const std::size_t base = span.rank();
    for (const auto& r : rules)
        span.insert(core.restrict(r));
    return span.rank() - base;
}

namespace {

/// Basis tensors spanning the unknown space of one degree.
std::vector<TensorElement> tensor_basis(const std::vector<Monomial>& monos, int arity, bool antisymmetric)
{
    std::vector<TensorElement> out;
    for (const auto& m : monos) {
        if (!antisymmetric || arity == 1) {
            out.push_back(TensorElement::monomial(m));
            continue;
        }
        if (arity == 2) {
            if (!(m[0] < m[1]))
                continue;
            out.push_back(TensorElement::monomial(m) - TensorElement::monomial(Monomial::of(m[1], m[0])));
            continue;
        }
        if (!(m[0] < m[1] && m[1] < m[2]))
            continue;
        const auto& a = m[0];
        const auto& b = m[1];
        const auto& c = m[2];
        TensorElement t(3);
        t.add_term(Monomial::of(a, b, c), 1);
        t.add_term(Monomial::of(b, c, a), 1);
        t.add_term(Monomial::of(c, a, b), 1);
        t.add_term(Monomial::of(b, a, c), -1);
        t.add_term(Monomial::of(a, c, b), -1);
        t.add_term(Monomial::of(c, b, a), -1);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<TensorElement> invariants_exact(const AlgebraSpec& alg, int arity, int window, bool antisymmetric)
{
    const auto legs = legs_by_degree(alg, window);
    const auto gens = alg.generators(window);
    std::vector<Scalar> degrees;
    {
        std::vector<Scalar> leg_degs;
        for (const auto& [d, v] : legs)
            leg_degs.push_back(d);
        std::map<Scalar, int> seen;
        std::vector<Scalar> cur{0};
        for (int k = 0; k < arity; ++k) {
            std::vector<Scalar> next;
            for (const auto& a : cur)
                for (const auto& d : leg_degs)
                    next.push_back(a + d);
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            cur = std::move(next);
        }
        degrees = std::move(cur);
    }

    std::vector<TensorElement> out;
    for (const auto& deg : degrees) {
        const auto basis = tensor_basis(monomials_of_degree(legs, arity, deg), arity, antisymmetric);
        if (basis.empty())
            continue;
        LinearSystem sys;
        for (const auto& t : basis)
            sys.add_unknown(to_string(t));
        for (const auto& x : gens) {
            std::map<Monomial, SparseVec> rows;
            for (std::size_t id = 0; id < basis.size(); ++id)
                for (const auto& [n, k] : diagonal_action(alg, x, basis[id]))
                    rows[n].emplace_back(static_cast<int>(id), k);
            for (auto& [m, row] : rows) {
                SparseVec r = normalize(std::move(row));
                if (!r.empty())
                    sys.add_row(std::move(r));
            }
        }
        const auto sol = solve_exact(sys);
        for (const auto& v : sol.kernel) {
            TensorElement t(arity);
            for (const auto& [id, c] : v)
                t.add_scaled(basis[static_cast<std::size_t>(id)], c);
            out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace

std::vector<TensorElement> invariant_tensors(const AlgebraSpec& alg, int arity, int window, bool antisymmetric_only)
{
    if (arity < 1 || arity > 3)
        throw ArityMismatch("invariant_tensors: arity must be 1, 2 or 3");
    auto small = invariants_exact(alg, arity, window, antisymmetric_only);
    const auto large = invariants_exact(alg, arity, window + 2, antisymmetric_only);

    std::map<Monomial, int> col;
    auto to_sparse = [&](const TensorElement& t) {
        SparseVec v;
        for (const auto& [m, c] : t) {
            auto [it, fresh] = col.emplace(m, static_cast<int>(col.size()));
            v.emplace_back(it->second, c);
        }
        return normalize(std::move(v));
    };
    EchelonBasis stable;
    for (const auto& t : large)
        stable.insert(to_sparse(t));
    std::erase_if(small, [&](const TensorElement& t) { return !stable.contains(to_sparse(t)); });
    return small;
}

TensorElement HomSolveResult::image(const BasisVector& h, const SparseVec& x) const
{
    TensorElement t(2);
    for (const auto& [id, c] : x) {
        const auto& u = unknowns.at(static_cast<std::size_t>(id));
        if (u.h == h)
            t.add_term(u.m, c);
    }
    return t;
}

HomSolveResult module_hom_solve(int window, HomRows which)
{
    if (window < 3)
        throw std::invalid_argument("module_hom_solve: window must be at least 3");
    const AlgebraSpec hv = AlgebraSpec::twisted_hv();
    const AlgebraSpec w = AlgebraSpec::witt();
    const int cap = 2 * window;
    const auto legs = legs_by_degree(w, cap);

    std::vector<BasisVector> ideal;
    for (int m = -window; m <= window; ++m)
        ideal.push_back(BasisVector::I(m));
    for (const auto& c : {BasisVector::CL(), BasisVector::CI(), BasisVector::CLI()})
        ideal.push_back(c);
    std::sort(ideal.begin(), ideal.end());

    HomSolveResult res;
    std::map<BasisVector, std::vector<std::pair<Monomial, int>>> unknowns_of;
    for (const auto& h : ideal) {
        for (const auto& m : monomials_of_degree(legs, 2, hv.degree(h))) {
            const int id = res.system.add_unknown("f(" + to_string(h) + ")[" + coord_name(m) + "]");
            res.unknowns.push_back({h, m});
            unknowns_of[h].emplace_back(m, id);
        }
    }

    for (int n = -window; n <= window; ++n) {
        const auto ln = BasisVector::L(n);
        for (const auto& h : ideal) {
            const Scalar dh = hv.degree(h);
            if (which == HomRows::Partial && n != 0 && !(h.is_central_symbol() || dh == 0 || n + dh == 0))
                continue;
            const Element br = hv.bracket(ln, h);
            bool inside = true;
            for (const auto& [c, k] : br)
                inside = inside && unknowns_of.count(c);
            if (!inside)
                continue;
            std::map<Monomial, SparseVec> rows;
            for (const auto& [c, k] : br)
                for (const auto& [m, id] : unknowns_of.at(c))
                    rows[m].emplace_back(id, k);
            for (const auto& [m, id] : unknowns_of.at(h))
                for (const auto& [q, k] : diagonal_action(w, ln, TensorElement::monomial(m)))
                    rows[q].emplace_back(id, -k);
            for (auto& [m, row] : rows) {
                if (!reachable_inside(w, m, ln, cap))
                    continue;
                SparseVec r = normalize(std::move(row));
                if (!r.empty())
                    res.system.add_row(std::move(r));
            }
        }
    }
    res.report = solve_exact(res.system);
    return res;
}

}  // namespace hvb
