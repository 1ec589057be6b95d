#include <random>

#include <gtest/gtest.h>

#include "frobex/linalg.hpp"

using namespace frobex;

namespace {

Mat random_mat(CycField f, std::size_t r, std::size_t c, std::mt19937_64& rng, double density = 0.7)
{
    std::uniform_int_distribution<int> v(-3, 3);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<long> zexp(0, static_cast<long>(f.conductor()) - 1);
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (u(rng) < density)
                m.set(i, j, CycScalar(f, static_cast<long>(v(rng))) * CycScalar::zeta(f, zexp(rng)));
    return m;
}

Vec random_vec(CycField f, std::size_t n, std::mt19937_64& rng)
{
    return random_mat(f, n, 1, rng).column_vec(0);
}

Mat permutation(CycField f, const std::vector<std::size_t>& p)
{
    Mat m(f, p.size(), p.size());
    for (std::size_t j = 0; j < p.size(); ++j)
        m.set(p[j], j, CycScalar(f, 1L));
    return m;
}

} // namespace

TEST(MatMul, IdentityAndInverse)
{
    std::mt19937_64 rng(1);
    CycField f = field_make(12);
    Mat m = random_mat(f, 3, 3, rng, 1.0);
    EXPECT_EQ(Mat::identity(f, 3) * m, m);
    auto inv = inverse(m);
    if (inv)
        EXPECT_TRUE((m * *inv).is_identity());
    Mat singular(f, 2, 2);
    singular.set(0, 0, CycScalar(f, 1L));
    singular.set(1, 0, CycScalar(f, 2L));
    EXPECT_FALSE(inverse(singular).has_value());
}

TEST(MatMul, PermutationsCompose)
{
    CycField f = field_make(1);
    std::vector<std::size_t> p{1, 2, 0}, q{2, 0, 1}, pq(3);
    for (std::size_t j = 0; j < 3; ++j)
        pq[j] = p[q[j]];
    EXPECT_EQ(permutation(f, p) * permutation(f, q), permutation(f, pq));
}

TEST(MatMul, AssociativeOnRandomTriples)
{
    std::mt19937_64 rng(2);
    CycField f = field_make(8);
    for (int t = 0; t < 20; ++t) {
        Mat a = random_mat(f, 2, 3, rng), b = random_mat(f, 3, 4, rng), c = random_mat(f, 4, 2, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(MatMul, Errors)
{
    Mat a(field_make(1), 2, 3), b(field_make(1), 2, 3), c(field_make(8), 3, 3);
    EXPECT_THROW(a * b, ShapeMismatch);
    EXPECT_THROW(a * c, FieldMismatch);
}

TEST(Kron, IdentityAndMixedProduct)
{
    CycField f = field_make(4);
    EXPECT_TRUE(kron(Mat::identity(f, 2), Mat::identity(f, 3)).is_identity());
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Mat a = random_mat(f, 2, 2, rng), b = random_mat(f, 2, 2, rng), c = random_mat(f, 2, 2, rng),
            d = random_mat(f, 2, 2, rng);
        EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
    }
}

TEST(Kron, IndexPairing)
{
    CycField f = field_make(1);
    Mat a(f, 2, 2), b(f, 3, 3);
    a.set(1, 0, CycScalar(f, 5L));
    b.set(2, 1, CycScalar(f, 7L));
    Mat k = kron(a, b);
    EXPECT_EQ(k.at(1 * 3 + 2, 0 * 3 + 1), CycScalar(f, 35L));
    EXPECT_EQ(k.nnz(), 1u);
}

TEST(Kron, SwapActsOnFirstFactors)
{
    CycField f = field_make(1);
    Mat s = kron(swap_map(2, 2, f), Mat::identity(f, 2));
    Vec e100 = Vec::basis(f, 8, 1 * 4 + 0 * 2 + 0);
    Vec e010 = Vec::basis(f, 8, 0 * 4 + 1 * 2 + 0);
    EXPECT_EQ(s * e100, e010);
}

TEST(Swap, CoherenceAndNaturality)
{
    CycField f = field_make(8);
    EXPECT_TRUE(swap_map(1, 4, f).is_identity());
    EXPECT_TRUE(swap_map(4, 1, f).is_identity());
    Mat s22 = swap_map(2, 2, f);
    EXPECT_TRUE((s22 * s22).is_identity());
    EXPECT_TRUE((swap_map(3, 2, f) * swap_map(2, 3, f)).is_identity());
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        Mat g = random_mat(f, 2, 2, rng), h = random_mat(f, 3, 3, rng);
        EXPECT_EQ(swap_map(2, 3, f) * kron(g, h), kron(h, g) * swap_map(2, 3, f));
    }
}

TEST(Solve, Trivial)
{
    CycField f = field_make(3);
    Vec b(f, {CycScalar(f, 1L), CycScalar::zeta(f, 1), CycScalar(f, 2L)});
    auto s = solve_linear(Mat::identity(f, 3), b);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->solution, b);
    EXPECT_TRUE(s->nullspace.empty());

    auto z = solve_linear(Mat(f, 2, 3), Vec(f, 2));
    ASSERT_TRUE(z);
    EXPECT_TRUE(z->solution.is_zero());
    EXPECT_EQ(z->nullspace.size(), 3u);

    Vec nz(f, 2);
    nz[1] = CycScalar(f, 1L);
    EXPECT_FALSE(solve_linear(Mat(f, 2, 3), nz).has_value());
}

TEST(Solve, RandomSystemsSatisfyEquations)
{
    std::mt19937_64 rng(5);
    CycField f = field_make(12);
    for (int t = 0; t < 30; ++t) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        Mat a = random_mat(f, r, c, rng, 0.5);
        Vec x = random_vec(f, c, rng);
        Vec b = a * x;
        auto s = solve_linear(a, b);
        ASSERT_TRUE(s);
        EXPECT_EQ(a * s->solution, b);
        for (const Vec& v : s->nullspace)
            EXPECT_TRUE((a * v).is_zero());
        EXPECT_EQ(s->nullspace.size() + rank(a), c);
    }
}

TEST(Sparse, SetAndDifference)
{
    CycField f = field_make(1);
    Mat a(f, 2, 2);
    a.set(0, 1, CycScalar(f, 3L));
    a.set(0, 1, CycScalar(f));
    EXPECT_TRUE(a.is_zero());
    Mat b = Mat::identity(f, 2);
    auto d = a.first_difference(b);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->first, 0u);
    EXPECT_EQ(d->second, 0u);
    EXPECT_FALSE(b.first_difference(b).has_value());
    EXPECT_EQ(b.transpose(), b);
    EXPECT_EQ(direct_sum(b, Mat::identity(f, 1)), Mat::identity(f, 3));
}
