#include <gtest/gtest.h>

#include "extlab/linalg.hpp"
#include "generators.hpp"

using namespace extlab;

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(65537), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(65521));
}

TEST(PrimeField, Arithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.neg(0), 0u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_int(-15), 6u);
  for (Scalar a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_THROW(f.inv(0), std::domain_error);
}

TEST(Linalg, NullspaceOfKnownMatrix) {
  const PrimeField f(2);
  Matrix a(2, 3);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 1) = 1;
  a(1, 2) = 1;
  const Matrix n = nullspace(f, a);
  ASSERT_EQ(n.rows(), 1u);
  EXPECT_EQ(n(0, 0), 1u);
  EXPECT_EQ(n(0, 1), 1u);
  EXPECT_EQ(n(0, 2), 1u);
}

TEST(Linalg, SubspaceSumAndIntersection) {
  const PrimeField f(3);
  Matrix a(1, 3), b(1, 3);
  a(0, 0) = 1;
  b(0, 1) = 1;
  const Subspace sa(f, 3, a), sb(f, 3, b);
  EXPECT_EQ(sa.sum(f, sb).dim(), 2u);
  EXPECT_EQ(sa.intersect(f, sb).dim(), 0u);
  EXPECT_EQ(sa.intersect(f, sa.sum(f, sb)).dim(), 1u);
  const Vector v{2, 0, 0};
  EXPECT_TRUE(sa.contains(f, v));
  EXPECT_EQ(sa.coordinates(f, v), (Vector{2}));
}

TEST(LinalgProperty, RankNullity) {
  gen::Rng rng(11);
  for (Scalar p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 200; ++trial) {
      const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 7));
      const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 7));
      const auto r = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
      const Matrix a = gen::low_rank_matrix(rng, f, rows, cols, r);
      const Matrix n = nullspace(f, a);
      EXPECT_EQ(rank(f, a) + n.rows(), cols);
      // every null vector is killed: A n^T = 0, i.e. n A^T = 0
      EXPECT_TRUE(multiply(f, n, a.transpose()).is_zero() || n.rows() == 0);
      EXPECT_EQ(rank(f, a), rank(f, a.transpose()));
    }
  }
}

TEST(LinalgProperty, SolveLeftFindsPreimages) {
  gen::Rng rng(12);
  const PrimeField f(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const Matrix b = gen::matrix(rng, f, rows, cols);
    const Matrix x = gen::matrix(rng, f, 1, rows);
    const Vector v = apply(f, x.row(0), b);
    const auto sol = solve_left(f, b, v);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(apply(f, *sol, b), v);
  }
}

TEST(LinalgProperty, IntersectionDimensionFormula) {
  gen::Rng rng(13);
  const PrimeField f(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
    const Subspace a(f, n, gen::matrix(rng, f, static_cast<std::size_t>(gen::uniform(rng, 0, 5)), n));
    const Subspace b(f, n, gen::matrix(rng, f, static_cast<std::size_t>(gen::uniform(rng, 0, 5)), n));
    EXPECT_EQ(a.sum(f, b).dim() + a.intersect(f, b).dim(), a.dim() + b.dim());
  }
}
