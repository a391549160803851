#include "heisrat/laurent.hpp"

#include <gtest/gtest.h>

#include <random>

#include "heisrat/polynomial_text.hpp"

namespace heisrat {
namespace {

constexpr long kScalarOrder = 12;

struct Sampler {
  std::mt19937_64 rng;
  std::size_t dim;

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  ExponentVector exponent(long lo, long hi) {
    ExponentVector e(dim);
    for (auto& x : e) x = uniform(lo, hi);
    return e;
  }

  Cyclotomic coefficient() {
    const long k = uniform(0, 3);
    if (k == 0) return Cyclotomic(uniform(-3, 3));
    return root_of_unity(kScalarOrder, uniform(0, kScalarOrder - 1)) * Cyclotomic(uniform(1, 2));
  }

  LaurentPolynomial polynomial() {
    LaurentPolynomial f(dim);
    const long terms = uniform(0, 4);
    for (long t = 0; t < terms; ++t) f.add_term(exponent(-2, 2), coefficient());
    return f;
  }

  ScaledMonomialMap map() {
    std::vector<ExponentVector> cols(dim);
    for (auto& c : cols) c = exponent(-1, 1);
    std::vector<Cyclotomic> scalars(dim);
    for (auto& s : scalars) s = root_of_unity(kScalarOrder, uniform(0, kScalarOrder - 1));
    return ScaledMonomialMap(cols, scalars);
  }
};

// Term-by-term oracle: x^e -> prod_j (s_j x^{col_j})^{e_j}.
LaurentPolynomial pullback_oracle(const LaurentPolynomial& f, const ScaledMonomialMap& m) {
  LaurentPolynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector img(f.dim(), 0);
    Cyclotomic scalar = c;
    for (std::size_t j = 0; j < f.dim(); ++j) {
      for (std::size_t i = 0; i < f.dim(); ++i) img[i] += e[j] * m.entry(i, j);
      scalar *= m.scalar(j).pow(e[j]);
    }
    out.add_term(img, scalar);
  }
  return out;
}

TEST(Laurent, ArithmeticBasics) {
  const auto x = LaurentPolynomial::variable(2, 0);
  const auto y = LaurentPolynomial::variable(2, 1);
  const auto f = (x + y) * (x - y);
  EXPECT_EQ(f, x * x - y * y);
  EXPECT_EQ(x.pow(-2) * x.pow(2), LaurentPolynomial::constant(2, 1));
  EXPECT_THROW((x + y).pow(-1), std::domain_error);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_THROW(x + LaurentPolynomial::variable(3, 0), DimensionError);
}

TEST(Laurent, Homogeneity) {
  const VariableNames v = VariableNames::indexed("x", 3);
  EXPECT_EQ(is_homogeneous(parse_polynomial("x0^2*x1^-1 + x2", v, 3)), 1);
  EXPECT_EQ(is_homogeneous(parse_polynomial("x0^-1*x1", v, 3)), 0);
  EXPECT_FALSE(is_homogeneous(parse_polynomial("x0 + 1", v, 3)));
  EXPECT_FALSE(is_homogeneous(LaurentPolynomial(3)));
}

TEST(Laurent, SubstituteZero) {
  const VariableNames v = VariableNames::indexed("x", 3);
  const auto f = parse_polynomial("x0*x1 + x1^2 + x2", v, 3);
  EXPECT_EQ(render(substitute_zero(f, 0)), "x1^2 + x2");
  EXPECT_THROW(substitute_zero(parse_polynomial("x0^-1 + x1", v, 3), 0), RestrictionError);
}

TEST(Laurent, PullbackExamples) {
  const VariableNames v = VariableNames::indexed("x", 2);
  // x0 -> x1, x1 -> x0.
  const auto swap = ScaledMonomialMap::permutation({1, 0});
  EXPECT_EQ(render(pullback(parse_polynomial("x0^2*x1^-1", v, 2), swap)), "x0^-1*x1^2");
  const auto neg = ScaledMonomialMap::diagonal({Cyclotomic(-1), Cyclotomic(1)});
  EXPECT_EQ(render(pullback(parse_polynomial("x0^3 + x1", v, 2), neg)), "-x0^3 + x1");
  EXPECT_THROW(ScaledMonomialMap::diagonal({Cyclotomic(2), Cyclotomic(1)}), std::invalid_argument);
}

TEST(Laurent, InverseAndPower) {
  // x0 -> x0 x1, x1 -> x1 is unimodular.
  const ScaledMonomialMap shear({{1, 0}, {1, 1}}, {root_of_unity(3, 1), Cyclotomic(1)});
  EXPECT_TRUE(compose(shear, inverse(shear)).is_identity());
  EXPECT_TRUE(compose(inverse(shear), shear).is_identity());
  EXPECT_EQ(power(shear, 3), compose(shear, compose(shear, shear)));
  EXPECT_TRUE(power(shear, 0).is_identity());
  const ScaledMonomialMap square({{2, 0}, {0, 1}}, {Cyclotomic(1), Cyclotomic(1)});
  EXPECT_THROW(inverse(square), std::domain_error);
}

TEST(LaurentProperty, PullbackIsRingHomomorphismAndContravariant) {
  Sampler s{std::mt19937_64(0xabc), 3};
  for (int trial = 0; trial < 500; ++trial) {
    s.dim = static_cast<std::size_t>(s.uniform(1, 3));
    const auto f = s.polynomial();
    const auto g = s.polynomial();
    const auto a = s.map();
    const auto b = s.map();
    EXPECT_EQ(pullback(f, a), pullback_oracle(f, a));
    EXPECT_EQ(pullback(f + g, a), pullback(f, a) + pullback(g, a));
    EXPECT_EQ(pullback(f * g, a), pullback(f, a) * pullback(g, a));
    EXPECT_EQ(pullback(f, compose(a, b)), pullback(pullback(f, a), b));
    EXPECT_EQ(pullback(f, ScaledMonomialMap::identity(s.dim)), f);
  }
}

TEST(Parser, RoundTrip) {
  const VariableNames v = VariableNames::indexed("x", 3);
  const char* cases[] = {"x0^2*x1 - 3*x2 + 1", "x0^-1*x1", "z{4}^3*x0 - 1/2", "0"};
  for (const char* text : cases) {
    const auto f = parse_polynomial(text, v, 3);
    EXPECT_EQ(render(f), text);
    EXPECT_EQ(parse_polynomial(render(f), v, 3), f);
  }
  EXPECT_EQ(parse_polynomial("w^3", v, 3), LaurentPolynomial::constant(3, 1));
  EXPECT_EQ(parse_polynomial("(x0 + x1)^2", v, 3), parse_polynomial("x0^2 + 2*x0*x1 + x1^2", v, 3));
  EXPECT_EQ(parse_polynomial("-x0 - -x1", v, 3), parse_polynomial("x1 - x0", v, 3));
}

TEST(Parser, Errors) {
  const VariableNames v = VariableNames::indexed("x", 3);
  const std::pair<const char*, std::size_t> cases[] = {
      {"x0 +", 4}, {"(x0 + x1)^-1", 0}, {"x5", 0}, {"", 0}, {"x0 * )", 5}, {"1/0", 2}, {"x0 x1", 3},
  };
  for (const auto& [text, position] : cases) {
    try {
      parse_polynomial(text, v, 3);
      ADD_FAILURE() << "no error for '" << text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), position) << text;
    }
  }
}

}  // namespace
}  // namespace heisrat
