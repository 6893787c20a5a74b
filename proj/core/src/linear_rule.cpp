#include "hvb/linear_rule.hpp"

#include "hvb/errors.hpp"
#include "hvb/format.hpp"

namespace hvb {

LinearRule LinearRule::closed_form(AlgebraSpec alg, int codomain_arity, std::string name, Evaluator eval)
{
    LinearRule r(std::move(alg), codomain_arity, std::move(name));
    r.eval_ = std::move(eval);
    return r;
}

LinearRule LinearRule::table(AlgebraSpec alg, int codomain_arity, Table images, std::string name)
{
    for (const auto& [b, img] : images) {
        alg.require_admissible(b);
        if (img.arity() != codomain_arity)
            throw ArityMismatch("table image of " + to_string(b) + " has the wrong arity");
    }
    LinearRule r(std::move(alg), codomain_arity, std::move(name));
    r.table_ = std::make_shared<const Table>(std::move(images));
    return r;
}

LinearRule LinearRule::zero(AlgebraSpec alg, int codomain_arity)
{
    return closed_form(std::move(alg), codomain_arity, "zero",
                       [codomain_arity](const BasisVector&) { return TensorElement(codomain_arity); });
}

bool LinearRule::defined_at(const BasisVector& b) const
{
    if (!alg_.admits(b))
        return false;
    return !table_ || table_->count(b) > 0;
}

TensorElement LinearRule::operator()(const BasisVector& b) const
{
    alg_.require_admissible(b);
    if (table_) {
        auto it = table_->find(b);
        if (it == table_->end())
            throw OutOfWindow("rule '" + name_ + "' has no image for " + to_string(b));
        return it->second;
    }
    return eval_(b);
}

TensorElement LinearRule::operator()(const Element& x) const
{
    TensorElement out(arity_);
    for (const auto& [b, c] : x)
        out.add_scaled((*this)(b), c);
    return out;
}

LinearRule LinearRule::with_coboundary(TensorElement r) const
{
    LinearRule out = *this;
    out.r_ = std::move(r);
    return out;
}

LinearRule operator+(const LinearRule& a, const LinearRule& b)
{
    if (!(a.alg_ == b.alg_) || a.arity_ != b.arity_)
        throw ArityMismatch("cannot add rules with different domains or codomains");
    const std::string name = a.name_ + " + " + b.name_;
    if (!a.table_ && !b.table_) {
        return LinearRule::closed_form(a.alg_, a.arity_, name,
                                       [a, b](const BasisVector& x) { return a(x) + b(x); });
    }
    const LinearRule::Table& support = a.table_ ? *a.table_ : *b.table_;
    LinearRule::Table images;
    for (const auto& [x, img] : support)
        if (a.defined_at(x) && b.defined_at(x))
            images.emplace(x, a(x) + b(x));
    return LinearRule::table(a.alg_, a.arity_, std::move(images), name);
}

LinearRule scale(const Scalar& c, const LinearRule& r)
{
    const std::string name = to_string(c) + "*(" + r.name_ + ")";
    if (!r.table_)
        return LinearRule::closed_form(r.alg_, r.arity_, name, [c, r](const BasisVector& x) { return c * r(x); });
    LinearRule::Table images;
    for (const auto& [x, img] : *r.table_)
        images.emplace(x, c * img);
    return LinearRule::table(r.alg_, r.arity_, std::move(images), name);
}

LinearRule operator-(const LinearRule& a, const LinearRule& b) { return a + scale(Scalar(-1), b); }

LinearRule LinearRule::tabulate(int window) const
{
    Table images;
    for (const auto& b : alg_.generators(window))
        if (defined_at(b))
            images.emplace(b, (*this)(b));
    return table(alg_, arity_, std::move(images), name_);
}

LinearRule delta_r(const AlgebraSpec& alg, const TensorElement& r)
{
    if (r.arity() != 2)
        throw ArityMismatch("delta_r expects an arity-2 r");
    for (const auto& [m, c] : r) {
        alg.require_admissible(m[0]);
        alg.require_admissible(m[1]);
    }
    auto rule = LinearRule::closed_form(alg, 2, "delta_r(" + to_string(r) + ")",
                                        [alg, r](const BasisVector& x) { return diagonal_action(alg, x, r); });
    return rule.with_coboundary(r);
}

std::map<Scalar, LinearRule> homogeneous_components(const LinearRule& rule, int window)
{
    const AlgebraSpec& alg = rule.domain();
    std::map<Scalar, LinearRule::Table> parts;
    std::vector<BasisVector> domain;
    if (const auto* t = rule.table_images())
        for (const auto& [b, img] : *t)
            domain.push_back(b);
    else
        domain = alg.generators(window);

    for (const auto& b : domain) {
        const Scalar db = alg.degree(b);
        for (const auto& [m, c] : rule(b)) {
            const Scalar shift = degree(alg, m) - db;
            auto& table = parts[shift];
            auto [it, inserted] = table.try_emplace(b, TensorElement(rule.codomain_arity()));
            it->second.add_term(m, c);
        }
    }
    std::map<Scalar, LinearRule> out;
    for (auto& [shift, table] : parts) {
        // Every component is defined on the whole domain.
        for (const auto& b : domain)
            table.try_emplace(b, TensorElement(rule.codomain_arity()));
        out.emplace(shift, LinearRule::table(alg, rule.codomain_arity(), std::move(table),
                                             rule.name() + "[deg " + to_string(shift) + "]"));
    }
    return out;
}

}  // namespace hvb
