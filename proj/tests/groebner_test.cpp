#include "heisrat/groebner.hpp"

#include <gtest/gtest.h>

#include <random>

namespace heisrat {
namespace {

RationalPolynomial var(std::size_t n, std::size_t i) { return RationalPolynomial::variable(n, i); }
RationalPolynomial num(std::size_t n, long c) { return RationalPolynomial::constant(n, c); }

// S-polynomial from the public arithmetic only.
RationalPolynomial s_poly(const RationalPolynomial& f, const RationalPolynomial& g, const TermOrder& order) {
  const auto tf = sorted_terms(f, order).front();
  const auto tg = sorted_terms(g, order).front();
  Monomial l(f.vars()), mf(f.vars()), mg(f.vars());
  for (std::size_t i = 0; i < l.size(); ++i) {
    l[i] = std::max(tf.first[i], tg.first[i]);
    mf[i] = l[i] - tf.first[i];
    mg[i] = l[i] - tg.first[i];
  }
  return RationalPolynomial::monomial(mf, 1 / tf.second) * f - RationalPolynomial::monomial(mg, 1 / tg.second) * g;
}

void expect_groebner(const std::vector<RationalPolynomial>& gens, const GroebnerBasis& gb) {
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero()) << to_string(g);
  for (std::size_t i = 0; i < gb.polys.size(); ++i) {
    EXPECT_EQ(sorted_terms(gb.polys[i], gb.order).front().second, 1);
    for (std::size_t j = i + 1; j < gb.polys.size(); ++j)
      EXPECT_TRUE(normal_form(s_poly(gb.polys[i], gb.polys[j], gb.order), gb).is_zero());
  }
}

RationalPolynomial random_poly(std::mt19937_64& rng, std::size_t vars, int max_deg) {
  RationalPolynomial f(vars);
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    Monomial e(vars, 0);
    int budget = static_cast<int>(rng() % (max_deg + 1));
    for (std::size_t i = 0; i < vars && budget > 0; ++i) {
      const int k = static_cast<int>(rng() % (budget + 1));
      e[i] = k;
      budget -= k;
    }
    f.add_term(e, static_cast<long>(rng() % 7) - 3);
  }
  return f;
}

TEST(Groebner, TermOrders) {
  const auto grevlex = TermOrder::grevlex();
  const auto lex = TermOrder::lex();
  EXPECT_EQ(grevlex.compare({2, 0, 0}, {0, 1, 1}), 1);
  EXPECT_EQ(grevlex.compare({1, 0, 1}, {0, 2, 0}), -1);
  EXPECT_EQ(grevlex.compare({0, 0, 3}, {1, 0, 0}), 1);
  EXPECT_EQ(lex.compare({0, 0, 3}, {1, 0, 0}), -1);
  const TermOrder reversed(TermOrder::Kind::lex, {2, 1, 0});
  EXPECT_EQ(reversed.compare({0, 0, 1}, {5, 0, 0}), 1);
  const auto f = var(2, 0) * var(2, 1) - var(2, 1).pow(3) + num(2, 2);
  EXPECT_EQ(to_string(f), "-x1^3 + x0*x1 + 2");
  EXPECT_EQ(leading_monomial(f, lex), (Monomial{1, 1}));
}

TEST(Groebner, SingleGenerator) {
  const std::vector<RationalPolynomial> gens{var(1, 0).pow(2) - num(1, 1)};
  const auto gb = buchberger(gens);
  ASSERT_EQ(gb.polys.size(), 1U);
  EXPECT_EQ(gb.polys[0], gens[0]);
  EXPECT_TRUE(gb.reduced);
  EXPECT_FALSE(gb.is_unit());
}

TEST(Groebner, NilpotentExample) {
  const std::vector<RationalPolynomial> gens{var(2, 0) * var(2, 1), var(2, 0).pow(2) + var(2, 1).pow(2)};
  const auto gb = buchberger(gens);
  const auto cube = var(2, 1).pow(3);
  EXPECT_NE(std::find(gb.polys.begin(), gb.polys.end(), cube), gb.polys.end());
  expect_groebner(gens, gb);
}

TEST(Groebner, UnitAndZeroIdeals) {
  const auto unit = buchberger({num(2, 1)});
  ASSERT_EQ(unit.polys.size(), 1U);
  EXPECT_TRUE(unit.is_unit());
  EXPECT_TRUE(buchberger({num(1, 3), var(1, 0)}).is_unit());
  EXPECT_TRUE(buchberger({RationalPolynomial(2)}).polys.empty());
  // x - 1 and x - 2 have no common zero.
  EXPECT_TRUE(buchberger({var(1, 0) - num(1, 1), var(1, 0) - num(1, 2)}).is_unit());
}

TEST(Groebner, NormalForm) {
  const auto gb = buchberger({var(1, 0)});
  EXPECT_TRUE(normal_form(var(1, 0), gb).is_zero());
  EXPECT_EQ(normal_form(var(1, 0) + num(1, 1), gb), num(1, 1));
  const auto circle = buchberger({var(2, 0).pow(2) + var(2, 1).pow(2) - num(2, 1)}, TermOrder::lex());
  // x0^2 -> 1 - x1^2
  EXPECT_EQ(normal_form(var(2, 0).pow(3), circle), var(2, 0) - var(2, 0) * var(2, 1).pow(2));
}

TEST(Groebner, BudgetExceededCarriesStats) {
  std::vector<RationalPolynomial> gens;
  const std::size_t n = 4;
  for (std::size_t i = 0; i < n; ++i) {
    RationalPolynomial f(n);
    for (std::size_t j = 0; j < n; ++j) f += var(n, j).pow(static_cast<unsigned>(i + 1)) * var(n, (j + 1) % n);
    gens.push_back(f);
  }
  try {
    buchberger(gens, TermOrder(), {2, 1000000, 1U << 20});
    FAIL() << "expected budget exhaustion";
  } catch (const GroebnerBudgetExceeded& e) {
    EXPECT_GE(e.stats().pairs_reduced, 2U);
  }
}

TEST(GroebnerProperty, RandomIdealsSatisfyPostconditions) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t vars = 2 + rng() % 2;
    std::vector<RationalPolynomial> gens;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_poly(rng, vars, 3));
    const TermOrder order = (trial % 2 == 0) ? TermOrder::grevlex() : TermOrder::lex();
    GroebnerBasis gb;
    try {
      gb = buchberger(gens, order, GroebnerBudget::large());
    } catch (const GroebnerBudgetExceeded&) {
      continue;
    }
    expect_groebner(gens, gb);
    // Ideal members reduce to zero; normal forms are idempotent.
    RationalPolynomial member(vars);
    for (const auto& g : gens) member += random_poly(rng, vars, 2) * g;
    EXPECT_TRUE(normal_form(member, gb).is_zero());
    const auto f = random_poly(rng, vars, 4);
    const auto r = normal_form(f, gb);
    EXPECT_EQ(normal_form(r, gb), r);
    EXPECT_TRUE(normal_form(f - r, gb).is_zero());
  }
}

TEST(GroebnerProperty, OrdersDescribeSameIdeal) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<RationalPolynomial> gens{random_poly(rng, 2, 3), random_poly(rng, 2, 3)};
    const auto a = buchberger(gens, TermOrder::grevlex(), GroebnerBudget::large());
    const auto b = buchberger(gens, TermOrder::lex(), GroebnerBudget::large());
    for (const auto& p : a.polys) EXPECT_TRUE(normal_form(p, b).is_zero());
    for (const auto& p : b.polys) EXPECT_TRUE(normal_form(p, a).is_zero());
  }
}

}  // namespace
}  // namespace heisrat
