#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "kmss/linalg.hpp"
#include "kmss/matrix.hpp"
#include "kmss/poset.hpp"

namespace kmss {
namespace {

ZMatrix random_matrix(std::mt19937& g, std::size_t rows, std::size_t cols, int lo, int hi, double zero_rate = 0.3) {
  std::uniform_int_distribution<int> v(lo, hi);
  std::bernoulli_distribution zero(zero_rate);
  ZMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = zero(g) ? 0 : v(g);
  return m;
}

// Product of random elementary operations.
ZMatrix random_unimodular(std::mt19937& g, std::size_t n) {
  ZMatrix u = ZMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    const std::size_t a = pick(g), b = pick(g);
    if (a == b) continue;
    const int k = coef(g);
    for (std::size_t c = 0; c < n; ++c) u(a, c) += k * u(b, c);
  }
  return u;
}

// gcd of all k x k minors, by brute force.
BigInt determinantal_divisor(const ZMatrix& m, std::size_t k) {
  BigInt g = 0;
  std::vector<std::size_t> rows, cols;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
    if (rows.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t r = start; r < m.rows(); ++r) {
      rows.push_back(r);
      pick_rows(r + 1);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t start) {
    if (cols.size() == k) {
      ZMatrix sub(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
      const BigInt d = linalg::determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t c = start; c < m.cols(); ++c) {
      cols.push_back(c);
      pick_cols(c + 1);
      cols.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

TEST(Linalg, DeterminantSmallCases) {
  EXPECT_EQ(linalg::determinant(ZMatrix::from_rows({{2, -1}, {-1, 2}})), 3);
  EXPECT_EQ(linalg::determinant(ZMatrix::from_rows({{2, -2}, {-2, 2}})), 0);
  EXPECT_EQ(linalg::determinant(ZMatrix::from_rows({{2, -1, -2}, {-1, 2, -2}, {-2, -2, 2}})), -18);
  EXPECT_EQ(linalg::determinant(ZMatrix(0, 0)), 1);
}

TEST(Linalg, Valuation) {
  EXPECT_EQ(linalg::valuation(24, 3), 1U);
  EXPECT_EQ(linalg::valuation(80, 5), 1U);
  EXPECT_EQ(linalg::valuation(-250, 5), 3U);
  EXPECT_EQ(linalg::valuation(7, 2), 0U);
}

TEST(Linalg, SmithKnownForms) {
  const auto inv = linalg::smith_invariants(ZMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  ASSERT_EQ(inv.size(), 3U);
  EXPECT_EQ(inv[0], 2);
  EXPECT_EQ(inv[1], 6);
  EXPECT_EQ(inv[2], 12);
  EXPECT_TRUE(linalg::smith_invariants(ZMatrix(3, 4)).empty());
}

TEST(LinalgProperty, SmithMatchesDeterminantalDivisors) {
  auto g = std::mt19937(11);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const ZMatrix m = random_matrix(g, dim(g), dim(g), -6, 6);
    const auto dense = linalg::smith_invariants(m);
    const auto sparse = linalg::smith_invariants(SparseMatrix::from_dense(m));
    ASSERT_EQ(dense, sparse) << m;
    BigInt prefix = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
      const BigInt dk = determinantal_divisor(m, k);
      if (dk == 0) {
        EXPECT_EQ(dense.size(), k - 1) << m;
        break;
      }
      ASSERT_GE(dense.size(), k) << m;
      prefix *= dense[k - 1];
      EXPECT_EQ(prefix, dk) << m;
    }
  }
}

TEST(LinalgProperty, SmithRankAgreesWithBareiss) {
  auto g = std::mt19937(12);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const ZMatrix m = random_matrix(g, dim(g), dim(g), -3, 3, 0.6);
    const auto inv = linalg::smith_invariants(SparseMatrix::from_dense(m));
    EXPECT_EQ(inv.size(), linalg::rank_bareiss(m)) << m;
    for (std::size_t k = 1; k < inv.size(); ++k) EXPECT_EQ(inv[k] % inv[k - 1], 0);
  }
}

TEST(LinalgProperty, SmithInvariantUnderUnimodularChange) {
  auto g = std::mt19937(13);
  for (int trial = 0; trial < 60; ++trial) {
    const ZMatrix m = random_matrix(g, 5, 4, -4, 4);
    const ZMatrix t = random_unimodular(g, 5) * m * random_unimodular(g, 4);
    EXPECT_EQ(linalg::smith_invariants(m), linalg::smith_invariants(SparseMatrix::from_dense(t)));
  }
}

TEST(LinalgProperty, RankModPMatchesSmith) {
  auto g = std::mt19937(14);
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    for (int trial = 0; trial < 60; ++trial) {
      const ZMatrix m = random_matrix(g, 6, 7, -5, 5);
      std::size_t expected = 0;
      for (const auto& d : linalg::smith_invariants(m))
        if (d % p != 0) ++expected;
      EXPECT_EQ(linalg::rank_mod_p(m, p), expected);
      EXPECT_EQ(linalg::rank_mod_p(SparseMatrix::from_dense(m), p), expected);
    }
  }
}

TEST(LinalgProperty, KernelIsSaturatedAndComplete) {
  auto g = std::mt19937(15);
  for (int trial = 0; trial < 80; ++trial) {
    const ZMatrix m = random_matrix(g, 3, 6, -4, 4);
    const ZMatrix k = linalg::kernel_basis(m);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(k.cols(), 6 - linalg::rank_bareiss(m));
    EXPECT_EQ(linalg::saturate(k), k);
    // Saturated: the Smith invariants of a saturated basis are all 1.
    for (const auto& d : linalg::smith_invariants(k)) EXPECT_EQ(d, 1);
  }
}

TEST(LinalgProperty, CanonicalBasisIsLatticeInvariant) {
  auto g = std::mt19937(16);
  for (int trial = 0; trial < 80; ++trial) {
    const ZMatrix b = random_matrix(g, 4, 3, -5, 5, 0.1);
    if (linalg::rank_bareiss(b) < 3) continue;
    EXPECT_EQ(linalg::canonical_basis(b), linalg::canonical_basis(b * random_unimodular(g, 3)));
  }
}

TEST(Linalg, IntersectionOfSublattices) {
  // 2Z x Z and Z x 3Z meet in 2Z x 3Z.
  const ZMatrix a = ZMatrix::from_rows({{2, 0}, {0, 1}});
  const ZMatrix b = ZMatrix::from_rows({{1, 0}, {0, 3}});
  EXPECT_EQ(linalg::intersect_lattices(a, b), linalg::canonical_basis(ZMatrix::from_rows({{2, 0}, {0, 3}})));
}

TEST(Linalg, SolveIntegral) {
  const ZMatrix basis = ZMatrix::from_rows({{2, 0}, {0, 1}, {0, 0}});
  const auto x = linalg::solve_integral(basis, ZMatrix::from_rows({{4}, {-3}, {0}}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, ZMatrix::from_rows({{2}, {-3}}));
  EXPECT_FALSE(linalg::solve_integral(basis, ZMatrix::from_rows({{1}, {0}, {0}})));
  EXPECT_FALSE(linalg::solve_integral(basis, ZMatrix::from_rows({{0}, {0}, {1}})));
}

TEST(Poset, ChainsOfThreeElementChain) {
  const FinitePoset p(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_EQ(p.max_chain_degree(), 2U);
  EXPECT_EQ(p.chain_count(0), 3U);
  EXPECT_EQ(p.chain_count(1), 3U);
  EXPECT_EQ(p.chain_count(2), 1U);
  EXPECT_EQ(p.covering_pairs().size(), 2U);
}

TEST(Poset, RejectsCycles) { EXPECT_ANY_THROW(FinitePoset(2, {{0, 1}, {1, 0}})); }

}  // namespace
}  // namespace kmss
