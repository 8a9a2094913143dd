#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hopfforge/rational.hpp"
#include "hopfforge/sparse_matrix.hpp"

using hopfforge::Rational;
using namespace hopfforge::ratlin;

namespace {

using Dense = std::vector<std::vector<Rational>>;

// Leibniz expansion; only used on tiny matrices.
Rational leibniz_det(const Dense& m)
{
    std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational det;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Rational term = inversions % 2 ? Rational(-1) : Rational(1);
        for (std::size_t i = 0; i < n; ++i)
            term *= m[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i])
                s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

// Largest k with a nonzero k x k minor.
int minor_rank(const Dense& m)
{
    std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    for (std::size_t k = std::min(rows, cols); k > 0; --k)
        for (const auto& rs : subsets(rows, k))
            for (const auto& cs : subsets(cols, k)) {
                Dense sub(k, std::vector<Rational>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = m[rs[i]][cs[j]];
                if (!leibniz_det(sub).is_zero())
                    return static_cast<int>(k);
            }
    return 0;
}

Dense random_rank_matrix(std::mt19937& rng, int rows, int cols, int r)
{
    std::uniform_int_distribution<int> dist(-3, 3);
    Dense a(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(r)));
    Dense b(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (auto& row : a)
        for (auto& x : row)
            x = dist(rng);
    for (auto& row : b)
        for (auto& x : row)
            x = Rational(dist(rng), 1 + std::abs(dist(rng)));
    Dense m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int k = 0; k < r; ++k)
                m[i][j] += a[i][k] * b[k][j];
    return m;
}

} // namespace

TEST(Rational, ReducedForm)
{
    Rational q(6, -4);
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(q.denominator(), 2);
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_THROW(Rational::parse("1/0"), std::exception);
    EXPECT_THROW(Rational::parse("abc"), std::exception);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, BigDenominators)
{
    Rational x(1);
    for (int i = 0; i < 40; ++i)
        x /= Rational(24);
    EXPECT_EQ(x * Rational(24) / x, Rational(24));
    EXPECT_GT(x.denominator(), mpz_class("1000000000000000000000000000000"));
}

TEST(Rref, Identity)
{
    auto r = rref(SparseMatrix::identity(2));
    EXPECT_EQ(r.matrix, SparseMatrix::identity(2));
    EXPECT_EQ(r.pivots, (std::vector<int>{0, 1}));
}

TEST(Rref, RankOneForced)
{
    auto r = rref(SparseMatrix::from_dense({{2, 4}, {1, 2}}));
    EXPECT_EQ(r.matrix.to_dense(), (Dense{{1, 2}, {0, 0}}));
    EXPECT_EQ(r.pivots, (std::vector<int>{0}));
}

TEST(Rref, RankMatchesMinorOracle)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        Dense d = random_rank_matrix(rng, 5, 7, 3);
        int oracle = minor_rank(d);
        EXPECT_EQ(oracle, 3);
        EXPECT_EQ(rank(SparseMatrix::from_dense(d)), oracle);
    }
}

TEST(Rref, Idempotent)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = SparseMatrix::from_dense(random_rank_matrix(rng, 6, 5, 1 + trial % 4));
        auto once = rref(m);
        auto twice = rref(once.matrix);
        EXPECT_EQ(once.matrix, twice.matrix);
        EXPECT_EQ(once.pivots, twice.pivots);
    }
}

TEST(SolveAffine, IdentitySystem)
{
    Column b{Rational(3), Rational(-1, 2)};
    auto s = solve_affine(SparseMatrix::identity(2), b);
    ASSERT_TRUE(s.particular);
    EXPECT_EQ(*s.particular, b);
    EXPECT_TRUE(s.nullspace.empty());
}

TEST(SolveAffine, ZeroMatrix)
{
    auto s = solve_affine(SparseMatrix(1, 2), Column{Rational(0)});
    ASSERT_TRUE(s.particular);
    EXPECT_EQ(*s.particular, (Column{0, 0}));
    EXPECT_EQ(s.nullspace.size(), 2u);
}

TEST(SolveAffine, FreeVariablesZero)
{
    auto s = solve_affine(SparseMatrix::from_dense({{1, 1}}), Column{Rational(1)});
    ASSERT_TRUE(s.particular);
    EXPECT_EQ(*s.particular, (Column{1, 0}));
    ASSERT_EQ(s.nullspace.size(), 1u);
    EXPECT_EQ(s.nullspace[0], (Column{-1, 1}));
}

TEST(SolveAffine, Inconsistent)
{
    auto s = solve_affine(SparseMatrix::from_dense({{1, 1}, {2, 2}}), Column{Rational(1), Rational(3)});
    EXPECT_FALSE(s.particular);
}

TEST(SolveAffine, SolutionProperties)
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = random_rank_matrix(rng, 5, 6, 1 + trial % 5);
        auto a = SparseMatrix::from_dense(d);
        Column x0(6);
        for (auto& v : x0)
            v = dist(rng);
        Column b = a.multiply(x0);
        auto s = solve_affine(a, b);
        ASSERT_TRUE(s.particular);
        EXPECT_EQ(a.multiply(*s.particular), b);
        for (const auto& v : s.nullspace)
            EXPECT_EQ(a.multiply(v), Column(5));
        EXPECT_EQ(static_cast<int>(s.nullspace.size()), 6 - rank(a));
        if (!s.nullspace.empty()) {
            Dense n;
            for (const auto& v : s.nullspace)
                n.push_back(v);
            EXPECT_EQ(rank(SparseMatrix::from_dense(n)), static_cast<int>(s.nullspace.size()));
        }
    }
}
