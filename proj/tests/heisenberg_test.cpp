#include "heisrat/heisenberg.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "heisrat/polynomial_text.hpp"

namespace heisrat {
namespace {

// Normal-form multiplication, written out by hand:
// (a1, b1, c1)(a2, b2, c2) = (a1 + a2, b1 + b2, c1 + c2 - a2 b1).
HeisenbergElement cocycle(long n, const HeisenbergElement& x, const HeisenbergElement& y) {
  auto mod = [n](long v) { return ((v % n) + n) % n; };
  return {n, mod(x.a + y.a), mod(x.b + y.b), mod(x.c + y.c - y.a * x.b)};
}

TEST(Heisenberg, GroupOrderAndCenter) {
  for (long n = 1; n <= 6; ++n) {
    const auto g = schrodinger(n);
    const auto elements = enumerate_group(g);
    EXPECT_EQ(static_cast<long>(elements.size()), n * n * n) << n;
    const auto z = center(elements);
    EXPECT_EQ(static_cast<long>(z.size()), n);
    const auto lambda = g.commutator();
    const auto scalar = lambda.as_scalar();
    ASSERT_TRUE(scalar);
    EXPECT_EQ(*scalar, g.omega());
    for (long k = 0; k < n; ++k)
      EXPECT_NE(std::find(z.begin(), z.end(), power(lambda, k)), z.end());
  }
}

TEST(Heisenberg, GeneratorsPullBackAsDocumented) {
  const auto g = schrodinger(4);
  const VariableNames v = VariableNames::indexed("x", 4);
  EXPECT_EQ(render(pullback(parse_polynomial("x1 + x2", v, 4), g.xi())), "z{4}^3*x1 - x2");
  EXPECT_EQ(render(pullback(parse_polynomial("x0^2*x3", v, 4), g.eta())), "x0*x1^2");
  // omega^c xi^a eta^b pulls x_j back to omega^{c - a j} x_{j + b}.
  const auto m = g.realize(g.element(1, 2, 3));
  const auto f = pullback(parse_polynomial("x1", v, 4), m);
  EXPECT_EQ(f, parse_polynomial("w^2*x3", v, 4));
}

TEST(Heisenberg, MultiplicationMatchesCocycleExhaustively) {
  for (long n = 1; n <= 4; ++n) {
    const auto g = schrodinger(n);
    for (long i = 0; i < n * n * n; ++i)
      for (long j = 0; j < n * n * n; ++j) {
        const auto x = g.element(i % n, (i / n) % n, i / (n * n));
        const auto y = g.element(j % n, (j / n) % n, j / (n * n));
        const auto xy = g.multiply(x, y);
        ASSERT_EQ(xy, cocycle(n, x, y));
        ASSERT_EQ(g.realize(xy), compose(g.realize(x), g.realize(y)));
      }
  }
}

TEST(Heisenberg, DecomposeAndInverse) {
  std::mt19937_64 rng(5);
  for (long n = 2; n <= 7; ++n) {
    const auto g = schrodinger(n);
    for (int t = 0; t < 30; ++t) {
      const auto x = g.element(static_cast<long>(rng() % n), static_cast<long>(rng() % n), static_cast<long>(rng() % n));
      EXPECT_EQ(g.decompose(g.realize(x)), x);
      EXPECT_TRUE(compose(g.realize(x), g.realize(g.inverse(x))).is_identity());
    }
    const auto outside = ScaledMonomialMap::scalar(static_cast<std::size_t>(n), root_of_unity(2 * n, 1));
    EXPECT_THROW(g.decompose(outside), InvariantViolation);
  }
}

TEST(Heisenberg, OtherOmegaChoice) {
  const auto g = schrodinger(5, 2);
  EXPECT_EQ(enumerate_group(g).size(), 125U);
  EXPECT_EQ(*g.commutator().as_scalar(), root_of_unity(5, 2));
}

TEST(Heisenberg, Spectra) {
  const auto g = schrodinger(3);
  const auto xi_spec = spectrum_roots(g.xi());
  EXPECT_EQ(xi_spec, (std::vector<RootOfUnity>{{1, 0}, {3, 1}, {3, 2}}));
  EXPECT_TRUE(has_simple_spectrum(g.xi()));
  EXPECT_TRUE(has_simple_spectrum(g.eta()));
  // The cyclic shift on 4 variables squared has eigenvalues 1, 1, -1, -1.
  const auto g4 = schrodinger(4);
  EXPECT_FALSE(has_simple_spectrum(power(g4.eta(), 2)));
  EXPECT_FALSE(has_simple_spectrum(power(g4.xi(), 2)));
  EXPECT_EQ(spectrum(power(g4.xi(), 2)).size(), 4U);
}

TEST(Heisenberg, FixedPoints) {
  const auto g = schrodinger(3);
  const auto pts = fixed_points_projective(g.xi());
  ASSERT_EQ(pts.size(), 3U);
  std::set<std::vector<std::string>> seen;
  for (const auto& p : pts) {
    std::vector<std::string> s;
    for (const auto& c : p) s.push_back(to_string(c));
    seen.insert(s);
  }
  EXPECT_EQ(seen, (std::set<std::vector<std::string>>{{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}));
  // eta fixes (1 : w^k : w^{2k}).
  for (const auto& p : fixed_points_projective(g.eta())) {
    ASSERT_EQ(p.size(), 3U);
    EXPECT_TRUE(p[0].is_one());
    EXPECT_EQ(p[2], p[1] * p[1]);
  }
}

TEST(Heisenberg, StabilizerOrbitsForThree) {
  const auto orbits = stabilizer_orbit_report(schrodinger(3));
  ASSERT_EQ(orbits.size(), 4U);
  for (const auto& o : orbits) {
    EXPECT_EQ(o.stabilizer_order, 3);
    EXPECT_EQ(o.points.size(), 3U);
  }
  EXPECT_THROW(stabilizer_orbit_report(schrodinger(7)), ResourceLimitError);
}

TEST(Heisenberg, MolienAgainstReynoldsRank) {
  EXPECT_EQ(molien_dimensions(3, 9), (std::vector<long>{1, 0, 0, 2, 0, 0, 4, 0, 0, 7}));
  EXPECT_EQ(molien_dimensions(2, 4), (std::vector<long>{1, 0, 1, 0, 2}));
  for (long n = 2; n <= 3; ++n) {
    const auto m = molien_dimensions(n, 3 * n);
    for (long d = 0; d <= 3 * n; ++d) EXPECT_EQ(m[d], invariant_dimension_bruteforce(n, d)) << n << " " << d;
  }
  EXPECT_THROW(invariant_dimension_bruteforce(4, 12, 10), ResourceLimitError);
}

TEST(Heisenberg, ReynoldsIsProjection) {
  const auto g = schrodinger(3);
  const VariableNames v = VariableNames::indexed("x", 3);
  const auto f = parse_polynomial("x0^3 + 2*x0*x1^2 - x2", v, 3);
  const auto r = reynolds(f, g);
  EXPECT_EQ(reynolds(r, g), r);
  EXPECT_EQ(r, parse_polynomial("1/3*x0^3 + 1/3*x1^3 + 1/3*x2^3", v, 3));
  EXPECT_TRUE(reynolds(parse_polynomial("x0", v, 3), g).is_zero());
}

TEST(Heisenberg, SemiInvariantCharacters) {
  const auto g = schrodinger(4);
  const VariableNames v = VariableNames::indexed("x", 4);
  const auto f1 = parse_polynomial("x0*x1^3 + x1*x2^3 + x2*x3^3 + x3*x0^3", v, 4);
  EXPECT_EQ(character_of_semiinvariant(f1, g), (std::pair<long, long>{1, 0}));
  EXPECT_FALSE(character_of_semiinvariant(parse_polynomial("x0 + x1", v, 4), g));
  EXPECT_EQ(omega_power(root_of_unity(4, 3), g), 3);
  EXPECT_FALSE(omega_power(root_of_unity(8, 1), g));
}

TEST(Heisenberg, MonomialsAndRank) {
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6U);
  EXPECT_EQ(monomials_of_degree(4, 0).size(), 1U);
  const VariableNames v = VariableNames::indexed("x", 2);
  EXPECT_EQ(span_rank({parse_polynomial("x0 + x1", v, 2), parse_polynomial("2*x0 + 2*x1", v, 2),
                       parse_polynomial("x0", v, 2)}),
            2U);
}

}  // namespace
}  // namespace heisrat
