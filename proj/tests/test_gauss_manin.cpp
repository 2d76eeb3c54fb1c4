#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qk/gauss_manin.hpp"
#include "qk/recursion.hpp"

using namespace qk;

namespace
{

std::vector<Rat> R(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST(SolveConstants, M75)
{
    const ConstantTable t = solve_constants(7, 5, 3);
    EXPECT_EQ(t.row(1), R({120, 770, 1345, 770, 120}));
    EXPECT_EQ(t.row(2), R({211200, 692500, 211200}));
    EXPECT_EQ(t.row(3), R({31320000}));
}

TEST(SolveConstants, ConicByHand)
{
    // (5,3): degree-one 3(3+w)(3+2w) = 27 + 27w + 6w^2 in (1+w)^m gives L^1 = (6, 15, 6);
    // the only degree-two term is L_0^1 L_2^1
    const ConstantTable t = solve_constants(5, 3, 2);
    EXPECT_EQ(t.row(1), R({6, 15, 6}));
    EXPECT_EQ(t.at(2, 0), Rat(36));
}

TEST(SolveConstants, HighDimensionVanishes)
{
    const ConstantTable t = solve_constants(12, 5, 3);
    for (int d = 2; d <= 3; ++d) {
        for (const auto &v : t.row(d)) {
            EXPECT_TRUE(v.is_zero());
        }
    }
}

TEST(SolveConstants, RejectsNonFano)
{
    EXPECT_THROW(solve_constants(6, 5, 2), std::invalid_argument);
    EXPECT_THROW(solve_constants(5, 5, 2), std::invalid_argument);
}

TEST(SolveConstants, EqualsVirtualTable)
{
    for (int k = 1; k <= 5; ++k) {
        for (int N = k + 2; N <= 2 * k + 2; ++N) {
            EXPECT_EQ(virtual_table(N, k, 4).reflavored(Flavor::real), solve_constants(N, k, 4)) << N << "," << k;
        }
    }
}

TEST(Gamma, DegreeOne)
{
    // gamma_0^{5,3,1} = 27 + 27w + 6w^2 = 3(3+w)(3+2w)
    const GammaFamily g = gamma_from_table(solve_constants(5, 3, 1));
    EXPECT_EQ(g.at(0, 1), RatWPoly({Rat(27), Rat(27), Rat(6)}));
    const GammaFamily h = gamma_from_table(solve_constants(7, 5, 3));
    RatWPoly want(Rat(5));
    for (int j = 1; j <= 4; ++j) {
        want *= RatWPoly::linear(Rat(5), Rat(j));
    }
    EXPECT_EQ(h.at(0, 1), want);
    for (int d = 2; d <= 3; ++d) {
        EXPECT_TRUE(h.at(0, d).is_zero()) << d;
    }
}

TEST(Gamma, ZeroTable)
{
    const GammaFamily g = gamma_from_table(ConstantTable(7, 5, 3, Flavor::real));
    for (const auto &[key, p] : g.values()) {
        EXPECT_TRUE(p.is_zero());
    }
}

TEST(Gamma, ClosedFormMatchesRecursion)
{
    for (int k = 1; k <= 5; ++k) {
        for (int N = k; N <= 2 * k + 2; ++N) {
            const ConstantTable t = virtual_table(N, k, 4);
            EXPECT_EQ(gamma_recursive(t), gamma_closed(t)) << N << "," << k;
        }
    }
}

TEST(Gamma, ScalingInN)
{
    for (int k = 2; k <= 5; ++k) {
        for (int N = k + 2; N <= 2 * k; ++N) {
            EXPECT_TRUE(gamma_scaling_check(N, k, 3)) << N << "," << k;
        }
    }
}

TEST(ReduceToOde, M75)
{
    const ScalarODE ode = reduce_to_ode(GMSystem(solve_constants(7, 5, 3)));
    EXPECT_EQ(ode.order, 6);
    EXPECT_EQ(ode.levels[1], R({120, 1250, 4375, 6250, 3125}));
    EXPECT_TRUE(ode.levels[2].empty());
    EXPECT_TRUE(ode.levels[3].empty());
}

TEST(ReduceToOde, ZeroTableGivesPureDerivative)
{
    const ScalarODE ode = reduce_to_ode(GMSystem(ConstantTable(7, 5, 2, Flavor::real)));
    ScalarODE want = givental_ode(7, 5, 2);
    want.levels[1].clear();
    EXPECT_EQ(ode, want);
}

TEST(ReduceToOde, EqualsGiventalOperator)
{
    for (int k = 1; k <= 5; ++k) {
        for (int N = k + 2; N <= 2 * k + 2; ++N) {
            EXPECT_EQ(reduce_to_ode(GMSystem(solve_constants(N, k, 4))), givental_ode(N, k, 4)) << N << "," << k;
        }
    }
}

TEST(ReduceToOde, MatchesDirectElimination)
{
    // eliminate psi_1..psi_{N-1} with noncommuting operators instead of gamma bookkeeping
    for (const auto &[N, k] : std::vector<std::pair<int, int>>{{7, 5}, {5, 3}, {9, 4}, {6, 4}, {8, 5}}) {
        const ConstantTable t = solve_constants(N, k, 3);
        const auto P = oracle::eliminate(t);
        const ScalarODE ode = reduce_to_ode(GMSystem(t));
        for (int d = 1; d <= 3; ++d) {
            EXPECT_EQ(dpoly_trim(ode.levels[static_cast<std::size_t>(d)]), P[static_cast<std::size_t>(d)])
                << N << "," << k << " d=" << d;
        }
        EXPECT_EQ(P[1], oracle::givental_level_one(k));
    }
}

TEST(ReduceToOde, ArbitraryTableMatchesElimination)
{
    // a table that is not the Givental one: both reductions must still agree
    ConstantTable t(7, 5, 3, Flavor::real);
    int c = 1;
    for (int d = 1; d <= 3; ++d) {
        for (int m = t.m_lo(d); m <= t.m_hi(d); ++m) {
            t.set(d, m, Rat(c * c - 3, c + 1));
            ++c;
        }
    }
    const ConstantTable &s = t;
    const auto P = oracle::eliminate(s);
    const ScalarODE ode = reduce_to_ode(GMSystem(s));
    for (int d = 1; d <= 3; ++d) {
        EXPECT_EQ(dpoly_trim(ode.levels[static_cast<std::size_t>(d)]), P[static_cast<std::size_t>(d)]) << d;
    }
}

TEST(GammaScalingIdentity, Symbolic)
{
    EXPECT_TRUE(theorem4_check(7, 5, 2).ok);
    EXPECT_TRUE(theorem4_check(5, 3, 2).ok);
    for (int k = 1; k <= 5; ++k) {
        for (int N = k + 2; N <= 2 * k + 1; ++N) {
            for (int d = 1; d <= 3; ++d) {
                const CheckResult r = theorem4_check(N, k, d);
                EXPECT_TRUE(r.ok) << r.report;
            }
        }
    }
}

TEST(GammaScalingIdentity, NumericOnTables)
{
    for (const auto &[N, k] : std::vector<std::pair<int, int>>{{7, 5}, {5, 3}, {6, 4}}) {
        for (int d = 1; d <= 3; ++d) {
            EXPECT_TRUE(theorem4_check_numeric(solve_constants(N + 1, k, 3), d).ok);
        }
    }
}

TEST(Symmetry, Tables)
{
    const ConstantTable t = solve_constants(7, 5, 3);
    EXPECT_EQ(t.at(2, 0), t.at(2, 2));
    EXPECT_TRUE(symmetry_check(t));
    for (int k = 1; k <= 5; ++k) {
        for (int N = 1; N <= 2 * k + 2; ++N) {
            EXPECT_TRUE(symmetry_check(virtual_table(N, k, 3))) << N << "," << k;
        }
    }
    ConstantTable bad(7, 5, 1, Flavor::real);
    bad.set(1, 0, Rat(1));
    EXPECT_FALSE(symmetry_check(bad));
}
