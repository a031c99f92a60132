#include <gtest/gtest.h>

#include <random>

#include "chromkh/snf.hpp"

using namespace chromkh;

namespace {

using Dense = std::vector<std::vector<BigInt>>;

BigInt det(Dense a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    BigInt term = a[0][c] * det(minor);
    d += (c % 2 ? -term : term);
  }
  return d;
}

void subsets(int n, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int x = from; x < n; ++x) {
    cur.push_back(x);
    subsets(n, k, x + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from gcds of k x k minors.
std::pair<long, std::vector<BigInt>> reference(const Dense& a) {
  const int r = static_cast<int>(a.size()), c = r ? static_cast<int>(a[0].size()) : 0;
  std::vector<BigInt> dk{BigInt(1)};
  for (int k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(r, k, 0, cur, rs);
    subsets(c, k, 0, cur, cs);
    BigInt g = 0;
    for (auto& rr : rs)
      for (auto& cc : cs) {
        Dense m;
        for (int x : rr) {
          std::vector<BigInt> row;
          for (int y : cc) row.push_back(a[x][y]);
          m.push_back(row);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det(m).get_mpz_t());
      }
    if (g == 0) break;
    dk.push_back(g);
  }
  std::vector<BigInt> inv;
  for (std::size_t k = 1; k < dk.size(); ++k) {
    BigInt s = dk[k] / dk[k - 1];
    if (s != 1) inv.push_back(s);
  }
  return {static_cast<long>(dk.size()) - 1, inv};
}

SparseMatrix sparse(const Dense& a) {
  SparseMatrix m;
  m.rows = static_cast<int>(a.size());
  m.cols = m.rows ? static_cast<int>(a[0].size()) : 0;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.add(r, c, a[r][c].get_si());
  return m;
}

std::map<BigInt, int> primary(const std::vector<BigInt>& ds) {
  SmithResult s;
  s.divisors = ds;
  return torsion_primary(s);
}

}  // namespace

TEST(Smith, Diagonal) {
  SparseMatrix m;
  m.rows = 3;
  m.cols = 3;
  m.add(0, 0, 2);
  m.add(1, 1, 3);
  auto r = smith(m);
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(torsion_primary(r), (std::map<BigInt, int>{{BigInt(2), 1}, {BigInt(3), 1}}));
}

TEST(Smith, DuplicateEntriesSum) {
  SparseMatrix m;
  m.rows = 1;
  m.cols = 1;
  m.add(0, 0, 3);
  m.add(0, 0, 3);
  auto r = smith(m);
  EXPECT_EQ(torsion_primary(r), (std::map<BigInt, int>{{BigInt(2), 1}, {BigInt(3), 1}}));
}

TEST(Smith, Empty) {
  SparseMatrix m;
  m.rows = 4;
  m.cols = 0;
  auto r = smith(m);
  EXPECT_EQ(r.rank, 0);
  EXPECT_TRUE(r.divisors.empty());
}

TEST(Smith, PrimaryDecomposition) {
  EXPECT_EQ(primary({BigInt(12), BigInt(2)}), (std::map<BigInt, int>{{BigInt(2), 1}, {BigInt(4), 1}, {BigInt(3), 1}}));
}

TEST(Smith, RandomAgainstDeterminantalDivisors) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(-4, 4), dim(1, 4), sparse_coin(0, 2);
  for (int trial = 0; trial < 400; ++trial) {
    int r = dim(rng), c = dim(rng);
    Dense a(r, std::vector<BigInt>(c, 0));
    for (auto& row : a)
      for (auto& x : row) x = sparse_coin(rng) ? val(rng) : 0;
    auto [rank, inv] = reference(a);
    auto got = smith(sparse(a));
    ASSERT_EQ(got.rank, rank) << "trial " << trial;
    ASSERT_EQ(torsion_primary(got), primary(inv)) << "trial " << trial;
  }
}

// Entries whose eliminations overflow 64 bits force the GMP rerun.
TEST(Smith, OverflowFallsBackToBigInt) {
  const long big = 3037000499L;  // about sqrt(2^63)
  Dense a{{BigInt(big), BigInt(big - 1), BigInt(7)},
          {BigInt(big - 2), BigInt(big), BigInt(5)},
          {BigInt(big - 3), BigInt(big - 5), BigInt(big)}};
  auto [rank, inv] = reference(a);
  auto got = smith(sparse(a));
  EXPECT_EQ(got.rank, rank);
  EXPECT_EQ(torsion_primary(got), primary(inv));
}

TEST(Smith, CokernelOfBoundary) {
  // d: Z^3 -> Z^3 of a triangle's edge-to-vertex incidence
  SparseMatrix m;
  m.rows = 3;
  m.cols = 3;
  for (int e = 0; e < 3; ++e) {
    m.add(e, e, 1);
    m.add((e + 1) % 3, e, -1);
  }
  auto r = smith(m);
  EXPECT_EQ(r.rank, 2);
  EXPECT_TRUE(r.divisors.empty());
}
