#include "heisrat/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace heisrat {
namespace {

using Complex = std::complex<double>;

// Numeric oracle: sum_i c_i * exp(2 pi i k / N), independent of the reduction.
Complex approx(const Cyclotomic& a) {
  Complex sum = 0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(a.order());
    sum += a.coeffs()[i].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

Cyclotomic random_element(std::mt19937_64& rng, long order) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<mpq_class> c(static_cast<std::size_t>(order));
  for (auto& x : c) x = coeff(rng);
  return Cyclotomic::from_power_coeffs(order, c);
}

TEST(Cyclotomic, PhiValues) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(15), 8);
  EXPECT_EQ(euler_phi(16), 8);
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(15), (std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1}));
}

TEST(Cyclotomic, RootsOfUnity) {
  for (long n = 1; n <= 12; ++n) {
    EXPECT_TRUE(root_of_unity(n, 1).pow(n).is_one()) << n;
    EXPECT_EQ(root_of_unity(n, n + 3), root_of_unity(n, 3));
    EXPECT_EQ(root_of_unity(n, -1), root_of_unity(n, 1).inv());
  }
  // Sum of all n-th roots is zero for n > 1.
  for (long n = 2; n <= 12; ++n) {
    Cyclotomic sum;
    for (long k = 0; k < n; ++k) sum += root_of_unity(n, k);
    EXPECT_TRUE(sum.is_zero()) << n;
  }
  EXPECT_EQ(root_of_unity(2, 1), Cyclotomic(-1));
  EXPECT_EQ(root_of_unity(8, 2), root_of_unity(4, 1));
}

TEST(Cyclotomic, MixedOrderPromotion) {
  const auto a = root_of_unity(3, 1) * root_of_unity(4, 1);
  EXPECT_EQ(a, root_of_unity(12, 7));
  EXPECT_EQ(a.order(), 12);
  const auto r = try_as_root_of_unity(a);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (RootOfUnity{12, 7}));
  EXPECT_EQ(try_as_root_of_unity(Cyclotomic(1)), (RootOfUnity{1, 0}));
  EXPECT_EQ(try_as_root_of_unity(Cyclotomic(-1)), (RootOfUnity{2, 1}));
  EXPECT_FALSE(try_as_root_of_unity(Cyclotomic(2)));
  EXPECT_FALSE(try_as_root_of_unity(root_of_unity(5, 1) + Cyclotomic(1)));
}

TEST(Cyclotomic, Rendering) {
  EXPECT_EQ(to_string(root_of_unity(6, 5)), "z{6}^5");
  EXPECT_EQ(to_string(Cyclotomic(mpq_class(3, 4))), "3/4");
  EXPECT_EQ(to_string(Cyclotomic(-1)), "-1");
}

TEST(Cyclotomic, InverseOfZeroThrows) { EXPECT_THROW(Cyclotomic().inv(), DomainError); }

TEST(Cyclotomic, FieldAxiomsAgainstNumericOracle) {
  std::mt19937_64 rng(17);
  const long orders[] = {3, 4, 5, 6, 7, 8, 9, 12, 15};
  for (int trial = 0; trial < 300; ++trial) {
    const long p = orders[rng() % std::size(orders)];
    const long q = orders[rng() % std::size(orders)];
    const auto a = random_element(rng, p);
    const auto b = random_element(rng, q);
    const Complex za = approx(a), zb = approx(b);
    EXPECT_LT(std::abs(approx(a + b) - (za + zb)), 1e-8);
    EXPECT_LT(std::abs(approx(a * b) - za * zb), 1e-6);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inv()).is_one());
      EXPECT_LT(std::abs(approx(a.inv()) - 1.0 / za), 1e-6 * (1 + std::abs(1.0 / za)));
    }
  }
}

TEST(Cyclotomic, PromoteKeepsValue) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_element(rng, 6);
    const auto b = a.promote(24);
    EXPECT_EQ(b.order(), 24);
    EXPECT_EQ(a, b);
    EXPECT_LT(std::abs(approx(a) - approx(b)), 1e-9);
  }
}

}  // namespace
}  // namespace heisrat
