#include <random>

#include <gtest/gtest.h>

#include "qk/pdo.hpp"

using namespace qk;

namespace
{

RatFunc poly(std::initializer_list<Rat> c) { return RatFunc(DPolyR(std::vector<Rat>(c))); }

RatFunc dsym() { return RatFunc::shifted_d(Rat(0)); }

Rat eval(const RatFunc &r, const Rat &s) { return r.num().eval(s) / r.den().eval(s); }

RatFunc random_ratfunc(std::mt19937 &g)
{
    std::uniform_int_distribution<int> c(-5, 5);
    DPolyR n{Rat(c(g)), Rat(c(g)), Rat(c(g), 3)};
    if (n.is_zero()) {
        n = DPolyR(Rat(1));
    }
    // denominators with roots at half-integers stay nonzero on the integer test points
    const DPolyR d = DPolyR::linear(Rat(2 * c(g) + 1, 2), Rat(1));
    return RatFunc(n, d);
}

PDO random_pdo(std::mt19937 &g, int D)
{
    PDO p(D);
    for (int d = 0; d <= D; ++d) {
        p[d] = random_ratfunc(g);
    }
    return p;
}

} // namespace

TEST(RatFunc, Reduction)
{
    // (D^2 - 1)/(D - 1) = D + 1
    const RatFunc r(DPolyR{Rat(-1), Rat(0), Rat(1)}, DPolyR::linear(Rat(-1), Rat(1)));
    EXPECT_EQ(r, RatFunc::shifted_d(Rat(1)));
    EXPECT_EQ(r.den(), DPolyR(Rat(1)));
    // denominators are monic
    const RatFunc s(DPolyR(Rat(3)), DPolyR::linear(Rat(2), Rat(4)));
    EXPECT_EQ(s.den(), DPolyR::linear(Rat(1, 2), Rat(1)));
    EXPECT_THROW(RatFunc(DPolyR(Rat(1)), DPolyR()), std::domain_error);
    EXPECT_THROW(RatFunc().inverse(), std::domain_error);
}

TEST(RatFunc, FieldAxiomsRandomized)
{
    std::mt19937 g(11);
    for (int it = 0; it < 30; ++it) {
        const RatFunc a = random_ratfunc(g), b = random_ratfunc(g), c = random_ratfunc(g);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * a.inverse(), RatFunc(Rat(1)));
        EXPECT_EQ((a * b).shift(Rat(3)), a.shift(Rat(3)) * b.shift(Rat(3)));
    }
}

TEST(PDOMul, ShiftRule)
{
    const int D = 2;
    const PDO e = PDO::graded(D, 1, RatFunc(Rat(1)));
    // D e^x = e^x (D + 1)
    EXPECT_EQ(PDO::d_pow(D, 1) * e, PDO::graded(D, 1, RatFunc::shifted_d(Rat(1))));
    // (1/D) e^x = e^x / (D + 1)
    EXPECT_EQ(PDO::d_pow(D, -1) * e, PDO::graded(D, 1, RatFunc::shifted_d(Rat(1)).inverse()));
    // (e^x R)(e^x S) = e^{2x} R(D+1) S(D)
    std::mt19937 g(5);
    for (int it = 0; it < 10; ++it) {
        const RatFunc r = random_ratfunc(g), s = random_ratfunc(g);
        EXPECT_EQ(PDO::graded(D, 1, r) * PDO::graded(D, 1, s), PDO::graded(D, 2, r.shift(Rat(1)) * s));
    }
    // products past the truncation drop out
    EXPECT_EQ(PDO::graded(D, 2, dsym()) * PDO::graded(D, 1, dsym()), PDO(D));
    EXPECT_THROW(PDO(2) * PDO(3), std::invalid_argument);
}

TEST(PDOMul, ActionOnExponentials)
{
    // (A B) e^{sx} computed pointwise: sum_{i+j=n} A_i(s + j) B_j(s)
    std::mt19937 g(17);
    const int D = 3;
    for (int it = 0; it < 5; ++it) {
        const PDO a = random_pdo(g, D), b = random_pdo(g, D);
        const PDO ab = a * b;
        for (int s = -2; s <= 3; ++s) {
            for (int n = 0; n <= D; ++n) {
                Rat want;
                for (int j = 0; j <= n; ++j) {
                    want += eval(a[n - j], Rat(s + j)) * eval(b[j], Rat(s));
                }
                EXPECT_EQ(eval(ab[n], Rat(s)), want);
            }
        }
    }
}

TEST(PDOMul, AssociativeRandomized)
{
    std::mt19937 g(23);
    for (int D = 0; D <= 3; ++D) {
        for (int it = 0; it < 4; ++it) {
            const PDO a = random_pdo(g, D), b = random_pdo(g, D), c = random_pdo(g, D);
            EXPECT_EQ((a * b) * c, a * (b * c));
        }
    }
}

TEST(PDOInverse, TwoSided)
{
    std::mt19937 g(29);
    for (int it = 0; it < 5; ++it) {
        const PDO a = random_pdo(g, 3);
        const PDO b = a.inverse();
        EXPECT_EQ(a * b, PDO::one(3));
        EXPECT_EQ(b * a, PDO::one(3));
    }
}

TEST(GeometricInverse, GradeOneCancellation)
{
    for (const auto &[N, k] : std::vector<std::pair<int, int>>{{3, 5}, {2, 3}, {4, 6}, {5, 5}}) {
        RatFunc want(Rat(1));
        for (int m = 0; m < k; ++m) {
            want *= poly({Rat(m), Rat(k)});
        }
        want *= dsym().pow(-N);
        EXPECT_EQ(geometric_generator(N, k, 1)[1], want);
        EXPECT_EQ(closed_form_inverse(N, k, 1)[1], want);
    }
}

TEST(GeometricInverse, SeriesEqualsClosedForm)
{
    for (const auto &[N, k] : std::vector<std::pair<int, int>>{{3, 5}, {2, 3}, {4, 6}, {1, 3}, {6, 4}}) {
        const GeometricInverse g = geometric_inverse(N, k, 3);
        EXPECT_EQ(g.series, g.closed_form) << N << "," << k;
        // (1 - A) * inverse = 1
        const PDO one_minus_a = PDO::one(3) - geometric_generator(N, k, 3);
        EXPECT_EQ(one_minus_a * g.series, PDO::one(3));
        EXPECT_EQ(g.series * one_minus_a, PDO::one(3));
    }
    // grade 2 of (3,5) through explicit products
    const PDO A = geometric_generator(3, 5, 2);
    EXPECT_EQ((A * A)[2], closed_form_inverse(3, 5, 2)[2]);
}

TEST(GeometricInverse, DegreeZeroIsIdentity)
{
    const GeometricInverse g = geometric_inverse(4, 0, 3);
    EXPECT_EQ(g.closed_form, PDO::one(3));
    EXPECT_EQ(g.series, PDO::one(3));
}

TEST(BuildF, GradeZeroIsOne)
{
    for (const auto &F : build_F(virtual_table(3, 5, 2), 6)) {
        EXPECT_EQ(F[0], RatFunc(Rat(1)));
    }
    EXPECT_THROW(build_F(virtual_table(5, 5, 2), 3), std::invalid_argument);
}

TEST(BuildF, StabilizesToClosedForm)
{
    for (const auto &[N, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 5}, {4, 6}}) {
        const Stabilization s = stabilize_F(N, k, 3);
        EXPECT_EQ(s.limit, closed_form_inverse(N, k, 3)) << N << "," << k;
        for (int d = 0; d <= 3; ++d) {
            EXPECT_LE(s.j0[static_cast<std::size_t>(d)], 2 * (k - N) * d);
        }
        // the stabilized grades really stay fixed further out
        const auto F = build_F(virtual_table(N, k, 3), 2 * (k - N) * 3 + 6);
        for (int d = 0; d <= 3; ++d) {
            for (std::size_t j = static_cast<std::size_t>(s.j0[static_cast<std::size_t>(d)]); j < F.size(); ++j) {
                EXPECT_EQ(F[j][d], s.limit[d]);
            }
        }
    }
}

TEST(BuildF, GradeOneSequenceSettles)
{
    // (3,5), D=2: grade 1 of F_j is not yet the limit at j = 0
    const auto F = build_F(virtual_table(3, 5, 2), 8);
    const PDO g = geometric_inverse(3, 5, 2).closed_form;
    EXPECT_NE(F[0][1], g[1]);
    EXPECT_EQ(F[8][1], g[1]);
}

TEST(BuildF, NegConsistency)
{
    for (const auto &[N, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 5}, {4, 6}}) {
        EXPECT_TRUE(neg_consistency_check(N, k, 3)) << N << "," << k;
    }
}

TEST(Twist, PassesAndShiftsDegreeOne)
{
    for (int k = 2; k <= 4; ++k) {
        const TwistReport r = twist_check(k, 3);
        EXPECT_TRUE(r.ok) << k;
        const Rat kf = factorial(k);
        for (int m = r.real_table.m_lo(1); m <= r.real_table.m_hi(1); ++m) {
            EXPECT_EQ(r.real_table.at(1, m), r.virtual_table.at(1, m) - kf);
        }
        for (int d = 2; d <= 3; ++d) {
            for (int m = r.real_table.m_lo(d); m <= r.real_table.m_hi(d); ++m) {
                EXPECT_EQ(r.real_table.at(d, m), r.virtual_table.at(d, m));
            }
        }
    }
    // k = 2: every degree-one constant is 2 - 2 = 0
    const TwistReport r2 = twist_check(2, 3);
    for (const auto &v : r2.virtual_table.row(1)) {
        EXPECT_EQ(v, Rat(2));
    }
    for (const auto &v : r2.shifted_degree_one) {
        EXPECT_TRUE(v.is_zero());
    }
    EXPECT_THROW(twist_check(1, 3), std::invalid_argument);
}

TEST(Twist, ConjugationByExponential)
{
    // e^{-g} D e^{g} = D + g' with g = c e^x
    const PDO op = PDO::d_pow(2, 1);
    PDO want = PDO::d_pow(2, 1);
    want[1] = RatFunc(Rat(5));
    EXPECT_EQ(shift_by_exponential(op, Rat(5)), want);
    // D^2 -> (D + c e^x)^2 = D^2 + e^x (2c D + c) + c^2 e^{2x}
    PDO sq = PDO::d_pow(2, 2);
    sq[1] = poly({Rat(3), Rat(6)});
    sq[2] = RatFunc(Rat(9));
    EXPECT_EQ(shift_by_exponential(PDO::d_pow(2, 2), Rat(3)), sq);
}
