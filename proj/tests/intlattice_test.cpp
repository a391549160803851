#include "heisrat/intlattice.hpp"

#include <gtest/gtest.h>

#include <random>

namespace heisrat {
namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

bool is_canonical_hnf(const IntMatrix& h) {
  long last_pivot = -1;
  bool seen_zero = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (p == h.cols()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || static_cast<long>(p) <= last_pivot || h(r, p) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h(above, p) < 0 || h(above, p) >= h(r, p)) return false;
    last_pivot = static_cast<long>(p);
  }
  return true;
}

// Cofactor expansion, only for the small minors below.
mpz_class det_oracle(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const mpz_class term = m(0, c) * det_oracle(minor);
    sum += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return sum;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// d_k = gcd of k x k minors; invariant factors are d_k / d_{k-1}.
std::vector<mpz_class> invariant_factors_oracle(const IntMatrix& a) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
        mpz_class d = det_oracle(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

TEST(IntLattice, HnfExample) {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto r = hnf(a);
  EXPECT_EQ(r.H, (IntMatrix{{2, 4, 4}, {0, 6, 0}, {0, 0, 12}}));
  EXPECT_EQ(r.U * a, r.H);
  EXPECT_TRUE(is_unimodular(r.U));
}

TEST(IntLattice, SnfExample) {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  EXPECT_EQ(invariant_factors(a), (std::vector<mpz_class>{2, 6, 12}));
  EXPECT_EQ(det(a), mpz_class(-144));
}

TEST(IntLattice, LatticeOperations) {
  const auto full = Lattice::full(2);
  const auto sub = Lattice::span(IntMatrix{{2, 0}, {1, 3}});
  EXPECT_EQ(lattice_index(sub, full), mpz_class(6));
  EXPECT_TRUE(sub.contains({3, 3}));
  EXPECT_FALSE(sub.contains({1, 0}));
  EXPECT_THROW(lattice_index(full, sub), NotSublatticeError);
  EXPECT_FALSE(lattice_index(Lattice::span(IntMatrix{{1, 0}}), full));
  EXPECT_TRUE(lattice_equal(sub, Lattice::span(IntMatrix{{1, 3}, {3, 3}, {2, 0}})));
  // e0 + 2 e1 == 0 mod 3.
  const auto k = kernel_of_congruence(IntMatrix{{1, 2}}, {3});
  EXPECT_EQ(lattice_index(k, full), mpz_class(3));
  EXPECT_TRUE(k.contains({1, 1}));
  EXPECT_FALSE(k.contains({1, 0}));
  const auto coords = sub.coordinates({3, 3});
  ASSERT_TRUE(coords);
  mpz_class x = 0, y = 0;
  for (std::size_t r = 0; r < sub.rank(); ++r) {
    x += (*coords)[r] * sub.basis()(r, 0);
    y += (*coords)[r] * sub.basis()(r, 1);
  }
  EXPECT_EQ(x, 3);
  EXPECT_EQ(y, 3);
}

TEST(IntLattice, UnimodularInverse) {
  const IntMatrix u{{2, 1}, {1, 1}};
  EXPECT_EQ(inverse_unimodular(u) * u, IntMatrix::identity(2));
  EXPECT_THROW(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), std::domain_error);
  EXPECT_THROW(det(IntMatrix{{1, 2}}), std::invalid_argument);
}

TEST(IntLatticeProperty, HnfCanonicalForm) {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_matrix(rng, size(rng), size(rng));
    const auto r = hnf(a);
    ASSERT_EQ(r.U * a, r.H);
    ASSERT_TRUE(is_unimodular(r.U));
    ASSERT_TRUE(is_canonical_hnf(r.H)) << r.H;
    EXPECT_EQ(hnf(r.H).H, r.H);
    // Any unimodular row transform of A has the same HNF.
    const auto mix = hnf(random_matrix(rng, a.rows(), a.rows())).U;
    EXPECT_EQ(hnf(mix * a).H, r.H);
  }
}

TEST(IntLatticeProperty, SnfDivisibilityChain) {
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_matrix(rng, size(rng), size(rng));
    const auto s = snf(a);
    ASSERT_EQ(s.U * a * s.V, s.D);
    ASSERT_TRUE(is_unimodular(s.U));
    ASSERT_TRUE(is_unimodular(s.V));
    for (std::size_t r = 0; r < s.D.rows(); ++r)
      for (std::size_t c = 0; c < s.D.cols(); ++c)
        if (r != c) {
          ASSERT_EQ(s.D(r, c), 0);
        }
    const std::size_t k = std::min(s.D.rows(), s.D.cols());
    for (std::size_t i = 0; i < k; ++i) {
      ASSERT_GE(s.D(i, i), 0);
      if (i + 1 < k) {
        if (s.D(i, i) == 0) {
          ASSERT_EQ(s.D(i + 1, i + 1), 0);
        } else {
          ASSERT_TRUE(mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t()));
        }
      }
    }
  }
}

TEST(IntLatticeProperty, InvariantFactorsMatchDeterminantalDivisors) {
  std::mt19937_64 rng(3003);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(rng, size(rng), size(rng));
    EXPECT_EQ(invariant_factors(a), invariant_factors_oracle(a)) << a;
    if (a.rows() == a.cols()) {
      EXPECT_EQ(det(a), det_oracle(a));
    }
  }
}

}  // namespace
}  // namespace heisrat
