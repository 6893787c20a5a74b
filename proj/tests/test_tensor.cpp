#include "support/oracles.hpp"
#include "support/testing.hpp"

#include "hvb/errors.hpp"
#include "hvb/linsolve.hpp"

#include <gtest/gtest.h>

using namespace hvb;
using hvb::fixture::E;
using hvb::fixture::T;

namespace {

const AlgebraSpec hv = AlgebraSpec::twisted_hv();

Monomial swapped(const Monomial& m) { return Monomial::of(m[1], m[0]); }

// Is u = (1 - tau) w for some w supported on the window? Decided by an exact solve.
bool in_image_of_one_minus_tau(const AlgebraSpec& alg, const TensorElement& u, int window)
{
    auto gens = alg.generators(window);
    std::map<Monomial, int> index;
    LinearSystem sys;
    for (const auto& a : gens)
        for (const auto& b : gens)
            index[Monomial::of(a, b)] = sys.add_unknown(to_string(Monomial::of(a, b)));
    for (const auto& [m, k] : index) {
        SparseVec row = normalize({{k, Scalar(1)}, {index.at(swapped(m)), Scalar(-1)}});
        sys.add_row(row, u.coeff(m));
    }
    return solve_exact(sys).solvable();
}

}  // namespace

TEST(DiagonalAction, LeibnizExample)
{
    const int n = 3;
    TensorElement t = TensorElement::product(Element(BasisVector::L(n)), Element(BasisVector::I(-n)));
    TensorElement want = T(hv, "2 L[4] (x) I[-3] - 3 L[3] (x) I[-2]");
    EXPECT_EQ(diagonal_action(hv, BasisVector::L(1), t), want);
}

TEST(DiagonalAction, CentralAndDegreeZero)
{
    std::mt19937_64 rng(4);
    for (int k = 0; k < 20; ++k) {
        TensorElement t = fixture::random_tensor(rng, hv, 2 + k % 2, 4);
        EXPECT_TRUE(diagonal_action(hv, BasisVector::CL(), t).is_zero());
    }
    EXPECT_TRUE(diagonal_action(hv, BasisVector::L(0), T(hv, "L[1] (x) I[-1]")).is_zero());
}

TEST(DiagonalAction, MatchesLegwiseOracle)
{
    std::mt19937_64 rng(14);
    for (int k = 0; k < 100; ++k) {
        TensorElement t = fixture::random_tensor(rng, hv, 1 + k % 3, 5);
        BasisVector x = fixture::random_basis(rng, hv, 5);
        EXPECT_EQ(diagonal_action(hv, x, t), oracle::act(hv, x, t));
    }
}

TEST(DiagonalAction, ModuleAxiom)
{
    std::mt19937_64 rng(15);
    for (const auto& alg : {hv, AlgebraSpec::sv(), AlgebraSpec::diffops(2)})
        for (int k = 0; k < 60; ++k) {
            Element x = fixture::random_element(rng, alg, 3, 2), y = fixture::random_element(rng, alg, 3, 2);
            TensorElement t = fixture::random_tensor(rng, alg, 2 + k % 2, 3);
            TensorElement lhs = diagonal_action(alg, alg.bracket(x, y), t);
            TensorElement rhs = diagonal_action(alg, x, diagonal_action(alg, y, t)) -
                                diagonal_action(alg, y, diagonal_action(alg, x, t));
            EXPECT_EQ(lhs, rhs) << alg.id();
        }
}

TEST(DiagonalAction, DegreeAdditivity)
{
    std::mt19937_64 rng(16);
    for (int k = 0; k < 60; ++k) {
        BasisVector x = fixture::random_basis(rng, hv, 4);
        Monomial m = Monomial::of(fixture::random_basis(rng, hv, 4), fixture::random_basis(rng, hv, 4));
        for (const auto& [n, c] : diagonal_action(hv, x, TensorElement::monomial(m)))
            EXPECT_EQ(degree(hv, n), hv.degree(x) + degree(hv, m));
    }
}

TEST(DiagonalAction, PreservesAntisymmetry)
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 60; ++k) {
        TensorElement u = fixture::random_antisymmetric(rng, hv, 4);
        for (const auto& x : hv.generators(3))
            EXPECT_TRUE(is_antisymmetric(diagonal_action(hv, x, u)));
    }
}

TEST(Twist, Examples)
{
    EXPECT_EQ(twist(T(hv, "L[1] (x) I[2]")), T(hv, "I[2] (x) L[1]"));
    EXPECT_EQ(twist(T(hv, "L[0] (x) L[0]")), T(hv, "L[0] (x) L[0]"));
    std::mt19937_64 rng(18);
    for (int k = 0; k < 50; ++k) {
        TensorElement t = fixture::random_tensor(rng, hv, 2, 4);
        EXPECT_EQ(twist(twist(t)), t);
    }
    EXPECT_THROW(twist(T(hv, "L[1] (x) L[2] (x) L[3]")), ArityMismatch);
}

TEST(Cyclic, Examples)
{
    TensorElement t = T(hv, "L[1] (x) L[2] (x) L[3]");
    EXPECT_EQ(cyclic(t), T(hv, "L[2] (x) L[3] (x) L[1]"));
    EXPECT_EQ(cyclic_sum(t), T(hv, "L[1] (x) L[2] (x) L[3] + L[2] (x) L[3] (x) L[1] + L[3] (x) L[1] (x) L[2]"));
    std::mt19937_64 rng(19);
    for (int k = 0; k < 50; ++k) {
        TensorElement u = fixture::random_tensor(rng, hv, 3, 4);
        EXPECT_EQ(cyclic(cyclic(cyclic(u))), u);
    }
    EXPECT_THROW(cyclic(T(hv, "L[1] (x) L[2]")), ArityMismatch);
}

TEST(AntisymSplit, Examples)
{
    auto s = antisym_split(T(hv, "L[1] (x) I[-1]"));
    EXPECT_EQ(s.antisymmetric, T(hv, "1/2 L[1] (x) I[-1] - 1/2 I[-1] (x) L[1]"));
    EXPECT_EQ(s.symmetric, T(hv, "1/2 L[1] (x) I[-1] + 1/2 I[-1] (x) L[1]"));

    s = antisym_split(T(hv, "L[0] (x) L[0]"));
    EXPECT_TRUE(s.antisymmetric.is_zero());
    EXPECT_EQ(s.symmetric, T(hv, "L[0] (x) L[0]"));

    TensorElement u = T(hv, "L[2] (x) L[-2] - L[-2] (x) L[2]");
    s = antisym_split(u);
    EXPECT_EQ(s.antisymmetric, u);
    EXPECT_TRUE(s.symmetric.is_zero());
}

TEST(AntisymSplit, Parts)
{
    std::mt19937_64 rng(20);
    for (int k = 0; k < 100; ++k) {
        TensorElement t = fixture::random_tensor(rng, hv, 2, 5);
        auto s = antisym_split(t);
        EXPECT_EQ(s.antisymmetric + s.symmetric, t);
        EXPECT_EQ(twist(s.antisymmetric), -s.antisymmetric);
        EXPECT_EQ(twist(s.symmetric), s.symmetric);
    }
}

TEST(AntisymSplit, KernelOfOnePlusTauIsImageOfOneMinusTau)
{
    std::mt19937_64 rng(21);
    AlgebraSpec g1 = AlgebraSpec::g1();
    for (int k = 0; k < 10; ++k) {
        TensorElement u = fixture::random_antisymmetric(rng, g1, 3);
        EXPECT_TRUE(in_image_of_one_minus_tau(g1, u, 3));
        TensorElement v = fixture::random_tensor(rng, g1, 2, 3);
        bool anti = (v + twist(v)).is_zero();
        EXPECT_EQ(in_image_of_one_minus_tau(g1, v, 3), anti);
    }
}

TEST(ReduceModCenter, Examples)
{
    auto r = reduce_mod_center(hv, T(hv, "L[1] (x) I[-1] - I[-1] (x) L[1] + CL (x) CI"));
    ASSERT_TRUE(std::holds_alternative<CentralReduction>(r));
    // Symmetric/antisymmetric split of the central part.
    const auto& ok = std::get<CentralReduction>(r);
    EXPECT_EQ(ok.antisymmetric, T(hv, "L[1] (x) I[-1] - I[-1] (x) L[1] + 1/2 CL (x) CI - 1/2 CI (x) CL"));
    EXPECT_EQ(ok.central, T(hv, "1/2 CL (x) CI + 1/2 CI (x) CL"));

    auto bad = reduce_mod_center(hv, T(hv, "L[1] (x) L[1]"));
    ASSERT_TRUE(std::holds_alternative<NotReducible>(bad));
    EXPECT_EQ(std::get<NotReducible>(bad).offending, T(hv, "L[1] (x) L[1]"));

    auto c = reduce_mod_center(hv, T(hv, "CL (x) CI + CI (x) CL"));
    ASSERT_TRUE(std::holds_alternative<CentralReduction>(c));
    EXPECT_TRUE(std::get<CentralReduction>(c).antisymmetric.is_zero());
    EXPECT_EQ(std::get<CentralReduction>(c).central, T(hv, "CL (x) CI + CI (x) CL"));
}

TEST(ReduceModCenter, RandomDecompositions)
{
    std::mt19937_64 rng(22);
    auto center = hv.center_basis();
    for (int k = 0; k < 50; ++k) {
        TensorElement u = fixture::random_antisymmetric(rng, hv, 4);
        TensorElement c(2);
        for (int j = 0; j < 3; ++j) {
            BasisVector a = center[rng() % center.size()], b = center[rng() % center.size()];
            c.add_term(Monomial::of(a, b), fixture::random_scalar(rng));
        }
        auto r = reduce_mod_center(hv, u + c);
        ASSERT_TRUE(std::holds_alternative<CentralReduction>(r));
        auto split = antisym_split(c);
        EXPECT_EQ(std::get<CentralReduction>(r).antisymmetric, u + split.antisymmetric);
        EXPECT_EQ(std::get<CentralReduction>(r).central, split.symmetric);
    }
}
