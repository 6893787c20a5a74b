#pragma once

#include "hvb/tensor.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace hvb {

/// A linear map from an algebra into L (arity 1) or L (x) L (arity 2), given
/// either by a closed-form evaluator on basis vectors or by a finite table.
/// Table rules throw OutOfWindow when evaluated outside their support.
class LinearRule {
public:
    using Evaluator = std::function<TensorElement(const BasisVector&)>;
    using Table = std::map<BasisVector, TensorElement>;

    static LinearRule closed_form(AlgebraSpec alg, int codomain_arity, std::string name, Evaluator eval);
    static LinearRule table(AlgebraSpec alg, int codomain_arity, Table images, std::string name = "table");
    static LinearRule zero(AlgebraSpec alg, int codomain_arity);

    const AlgebraSpec& domain() const { return alg_; }
    int codomain_arity() const { return arity_; }
    const std::string& name() const { return name_; }
    bool is_table() const { return table_ != nullptr; }
    /// Support of a table rule; nullptr for closed forms.
    const Table* table_images() const { return table_.get(); }

    TensorElement operator()(const BasisVector& b) const;
    TensorElement operator()(const Element& x) const;

    /// Table rules can evaluate b.
    bool defined_at(const BasisVector& b) const;

    /// Closed form + closed form stays closed; anything involving a table is a
    /// table on the common support.
    friend LinearRule operator+(const LinearRule& a, const LinearRule& b);
    friend LinearRule operator-(const LinearRule& a, const LinearRule& b);
    friend LinearRule scale(const Scalar& c, const LinearRule& r);

    /// Evaluates on generators(window) and freezes the result as a table.
    LinearRule tabulate(int window) const;

    /// r when this rule was produced by delta_r(alg, r).
    const std::optional<TensorElement>& coboundary_of() const { return r_; }

    LinearRule with_coboundary(TensorElement r) const;

private:
    LinearRule(AlgebraSpec alg, int arity, std::string name) : alg_(std::move(alg)), arity_(arity), name_(std::move(name)) {}

    AlgebraSpec alg_;
    int arity_;
    std::string name_;
    Evaluator eval_;
    std::shared_ptr<const Table> table_;
    std::optional<TensorElement> r_;
};

/// Delta_r(x) = x . r
LinearRule delta_r(const AlgebraSpec& alg, const TensorElement& r);

/// Splits a rule on window generators by degree shift deg(image term) - deg(b).
std::map<Scalar, LinearRule> homogeneous_components(const LinearRule& rule, int window);

}  // namespace hvb
