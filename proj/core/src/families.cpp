#include "hvb/families.hpp"

#include "hvb/errors.hpp"
#include "hvb/format.hpp"

#include <algorithm>

namespace hvb {

namespace {

using B = BasisVector;

TensorElement pure(const BasisVector& a, const BasisVector& b, const Scalar& c)
{
    return TensorElement::monomial(Monomial::of(a, b), c);
}

void require_selector(const AlgebraSpec& alg, const BasisVector& s, const char* which)
{
    const auto center = alg.center_basis();
    if (std::find(center.begin(), center.end(), s) == center.end())
        throw InvalidSelector(std::string(which) + " = " + to_string(s) + " is not a central basis vector of " + alg.id());
}

// z (x) x with coefficient c on the left plus x (x) z' with coefficient c' on the right.
TensorElement sided(const BasisVector& z, const Scalar& c, const BasisVector& x, const Scalar& c_dag,
                    const BasisVector& z_dag)
{
    return pure(z, x, c) + pure(x, z_dag, c_dag);
}

std::string param_name(const FamilyParams& p)
{
    return "alpha=" + to_string(p.alpha) + ",alpha_dag=" + to_string(p.alpha_dag) + ",beta=" + to_string(p.beta) +
           ",beta_dag=" + to_string(p.beta_dag) + ",gamma=" + to_string(p.gamma) + ",gamma_dag=" +
           to_string(p.gamma_dag) + ",z1=" + to_string(p.z1) + ",z1_dag=" + to_string(p.z1_dag) + ",w1=" +
           to_string(p.w1) + ",w1_dag=" + to_string(p.w1_dag);
}

}  // namespace

bool FamilyParams::in_d0() const
{
    return alpha == -alpha_dag && beta == -beta_dag && gamma == -gamma_dag && z1 == z1_dag && w1 == w1_dag;
}

LinearRule chi_family(const Scalar& alpha, const Scalar& beta, const Scalar& gamma)
{
    const auto alg = AlgebraSpec::twisted_hv();
    auto eval = [=](const BasisVector& x) {
        Element out;
        switch (x.family) {
        case Family::L:
            out.add_term(B::I(x.i), alpha * x.i + gamma);
            if (x.i == 0)
                out.add_term(B::CLI(), gamma + alpha);
            break;
        case Family::I:
            out.add_term(B::I(x.i), beta);
            if (x.i == 0)
                out.add_term(B::CI(), alpha + gamma);
            break;
        case Family::CL: out.add_term(B::CLI(), -24 * alpha); break;
        case Family::CLI:
            out.add_term(B::CLI(), beta);
            out.add_term(B::CI(), -alpha);
            break;
        case Family::CI: out.add_term(B::CI(), 2 * beta); break;
        default: break;
        }
        return TensorElement::from_element(out);
    };
    return LinearRule::closed_form(alg, 1,
                                   "chi(alpha=" + to_string(alpha) + ",beta=" + to_string(beta) +
                                       ",gamma=" + to_string(gamma) + ")",
                                   eval);
}

LinearRule rho_family(const FamilyParams& p)
{
    const auto alg = AlgebraSpec::twisted_hv();
    require_selector(alg, p.z1, "z1");
    require_selector(alg, p.z1_dag, "z1_dag");
    require_selector(alg, p.w1, "w1");
    require_selector(alg, p.w1_dag, "w1_dag");
    auto eval = [p](const BasisVector& x) {
        TensorElement out(2);
        const Scalar ga = p.gamma + p.alpha, ga_dag = p.gamma_dag + p.alpha_dag;
        switch (x.family) {
        case Family::L: {
            const int n = x.i;
            out += sided(p.z1, n * p.alpha + p.gamma, B::I(n), n * p.alpha_dag + p.gamma_dag, p.z1_dag);
            if (n == 0)
                out += sided(p.z1, ga, B::CLI(), ga_dag, p.z1_dag);
            break;
        }
        case Family::I:
            out += sided(p.w1, p.beta, B::I(x.i), p.beta_dag, p.w1_dag);
            if (x.i == 0)
                out += sided(p.z1, ga, B::CI(), ga_dag, p.z1_dag);
            break;
        case Family::CL: out += sided(p.z1, -24 * p.alpha, B::CLI(), -24 * p.alpha_dag, p.z1_dag); break;
        case Family::CLI:
            out += sided(p.w1, p.beta, B::CLI(), p.beta_dag, p.w1_dag);
            out -= sided(p.z1, p.alpha, B::CI(), p.alpha_dag, p.z1_dag);
            break;
        case Family::CI: out += sided(p.w1, 2 * p.beta, B::CI(), 2 * p.beta_dag, p.w1_dag); break;
        default: break;
        }
        return out;
    };
    return LinearRule::closed_form(alg, 2, "rho(" + param_name(p) + ")", eval);
}

LinearRule g1_family(const Scalar& alpha, const Scalar& alpha_dag, const Scalar& beta, const Scalar& beta_dag,
                     const Scalar& gamma, const Scalar& gamma_dag)
{
    const auto alg = AlgebraSpec::g1();
    auto eval = [=](const BasisVector& x) {
        TensorElement out(2);
        const int n = x.i;
        if (x.family == Family::L)
            out += sided(B::I(0), n * alpha + gamma, B::I(n), n * alpha_dag + gamma_dag, B::I(0));
        else if (x.family == Family::I)
            out += sided(B::I(0), beta, B::I(n), beta_dag, B::I(0));
        return out;
    };
    return LinearRule::closed_form(alg, 2,
                                   "g1(alpha=" + to_string(alpha) + ",alpha_dag=" + to_string(alpha_dag) +
                                       ",beta=" + to_string(beta) + ",beta_dag=" + to_string(beta_dag) +
                                       ",gamma=" + to_string(gamma) + ",gamma_dag=" + to_string(gamma_dag) + ")",
                                   eval);
}

LinearRule zeta_family(const Scalar& alpha, const Scalar& alpha_dag, int max_order)
{
    const auto alg = AlgebraSpec::diffops(max_order);
    auto eval = [=](const BasisVector& x) {
        TensorElement out(2);
        const int m = x.i, n = x.j;
        if (n == 0)
            return out;
        out += pure(B::E(m, n - 1), B::E(0, 0), alpha * n);
        out += pure(B::E(0, 0), B::E(m, n - 1), alpha_dag * n);
        return out;
    };
    return LinearRule::closed_form(alg, 2, "zeta(alpha=" + to_string(alpha) + ",alpha_dag=" + to_string(alpha_dag) + ")",
                                   eval);
}

LinearRule sv_family(const FamilyParams& p)
{
    const auto alg = AlgebraSpec::sv();
    require_selector(alg, p.z1, "z1");
    require_selector(alg, p.z1_dag, "z1_dag");
    require_selector(alg, p.w1, "w1");
    require_selector(alg, p.w1_dag, "w1_dag");
    auto eval = [p](const BasisVector& x) {
        TensorElement out(2);
        const int n = x.i;
        switch (x.family) {
        case Family::L:
            out += sided(p.z1, n * p.alpha + p.gamma, B::I(n), n * p.alpha_dag + p.gamma_dag, p.z1_dag);
            break;
        case Family::I: out += sided(p.w1, 2 * p.beta, B::I(n), 2 * p.beta_dag, p.w1_dag); break;
        case Family::Y: out += sided(p.w1, p.beta, B::Y(n), p.beta_dag, p.w1_dag); break;
        default: break;
        }
        return out;
    };
    return LinearRule::closed_form(alg, 2, "sv(" + param_name(p) + ")", eval);
}

std::vector<LinearRule> rho_generators()
{
    std::vector<LinearRule> out;
    const auto center = AlgebraSpec::twisted_hv().center_basis();
    for (int which = 0; which < 3; ++which) {
        for (const auto& z : center) {
            for (int dag = 0; dag < 2; ++dag) {
                FamilyParams p;
                Scalar* slot = nullptr;
                switch (which) {
                case 0: slot = dag ? &p.alpha_dag : &p.alpha; break;
                case 1: slot = dag ? &p.gamma_dag : &p.gamma; break;
                default: slot = dag ? &p.beta_dag : &p.beta; break;
                }
                *slot = 1;
                if (which < 2)
                    (dag ? p.z1_dag : p.z1) = z;
                else
                    (dag ? p.w1_dag : p.w1) = z;
                out.push_back(rho_family(p));
            }
        }
    }
    return out;
}

std::vector<LinearRule> g1_generators()
{
    std::vector<LinearRule> out;
    for (int k = 0; k < 6; ++k) {
        Scalar v[6] = {0, 0, 0, 0, 0, 0};
        v[k] = 1;
        out.push_back(g1_family(v[0], v[1], v[2], v[3], v[4], v[5]));
    }
    return out;
}

}  // namespace hvb
