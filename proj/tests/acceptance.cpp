// Runs the nine acceptance criteria and prints one line per criterion.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "heisrat/groebner.hpp"
#include "heisrat/heisenberg.hpp"
#include "heisrat/intlattice.hpp"
#include "heisrat/linsys.hpp"
#include "heisrat/rationalize.hpp"

using namespace heisrat;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

HeisenbergElement cocycle(long n, const HeisenbergElement& x, const HeisenbergElement& y) {
  auto mod = [n](long v) { return ((v % n) + n) % n; };
  return {n, mod(x.a + y.a), mod(x.b + y.b), mod(x.c + y.c - y.a * x.b)};
}

Outcome group_structure() {
  Outcome o;
  for (long n = 1; n <= 8; ++n) {
    const auto g = schrodinger(n);
    const auto elements = enumerate_group(g);
    o.require(static_cast<long>(elements.size()) == n * n * n, "order at n = " + std::to_string(n));
    const auto z = center(elements);
    o.require(static_cast<long>(z.size()) == n, "center at n = " + std::to_string(n));
    const auto lambda = g.commutator();
    std::set<std::vector<Exponent>> powers;
    for (long k = 0; k < n; ++k) powers.insert(power(lambda, k).key());
    std::set<std::vector<Exponent>> center_keys;
    for (const auto& e : z) center_keys.insert(e.key());
    o.require(powers == center_keys, "commutator does not generate the center at n = " + std::to_string(n));
    if (n > 4) continue;
    for (long i = 0; i < n * n * n; ++i)
      for (long j = 0; j < n * n * n; ++j) {
        const auto x = g.element(i % n, (i / n) % n, i / (n * n));
        const auto y = g.element(j % n, (j / n) % n, j / (n * n));
        const auto xy = g.multiply(x, y);
        o.require(xy == cocycle(n, x, y) && g.realize(xy) == compose(g.realize(x), g.realize(y)),
                  "homomorphism at n = " + std::to_string(n));
      }
  }
  if (o.passed) o.detail = "n = 1..8: n^3 elements, center of order n generated by the commutator";
  return o;
}

Outcome simple_spectrum() {
  Outcome o;
  std::string failures;
  for (long n = 2; n <= 8; ++n) {
    long repeated = 0, bad_fixed = 0;
    for (const auto& m : enumerate_group(schrodinger(n))) {
      if (m.as_scalar()) continue;
      if (!has_simple_spectrum(m)) {
        ++repeated;
        continue;
      }
      if (static_cast<long>(fixed_points_projective(m).size()) != n) ++bad_fixed;
    }
    if (repeated > 0 || bad_fixed > 0) {
      o.passed = false;
      if (!failures.empty()) failures += ", ";
      failures += "n = " + std::to_string(n) + ": " + std::to_string(repeated) + " with repeated eigenvalues";
    }
  }
  o.detail = o.passed ? "n = 2..8: every noncentral element has n distinct eigenvalues and n fixed points"
                      : failures;
  return o;
}

Outcome characters() {
  Outcome o;
  for (long n = 2; n <= 8; ++n) {
    const auto g = schrodinger(n);
    for (long k = 1; k <= n; ++k) {
      const auto f = to_laurent(f_poly(n, k));
      const auto xi = pullback(f, g.xi());
      o.require(xi == f * g.omega().pow(k) || xi == f * g.omega().pow(-k), "xi character of f_k");
      o.require(pullback(f, g.eta()) == f, "eta does not fix f_k");
    }
    if (n > 6) continue;
    const auto elements = enumerate_group(g);
    for (const auto& p : system_L(n)) {
      const auto f = to_laurent(p);
      for (const auto& e : elements) o.require(pullback(f, e) == f, "invariance at n = " + std::to_string(n));
    }
  }
  if (o.passed) o.detail = "n = 2..8: xi*f_k = omega^k f_k, eta*f_k = f_k; degree-n^2 members fixed by H_n for n <= 6";
  return o;
}

Outcome basepoint_freeness() {
  Outcome o;
  std::string summary;
  for (long n = 2; n <= 4; ++n) {
    const auto r = basepoint_free_certificate(n);
    if (!summary.empty()) summary += "; ";
    summary += "n = " + std::to_string(n) + " " + to_string(r.verdict());
    if (r.base_point) summary += " (common zero x_1 = z{" + std::to_string(2 * n) + "}, x_3 = 1)";
    o.passed = o.passed && r.verdict() == RadicalVerdict::in_radical;
  }
  o.detail = summary;
  return o;
}

const Check* find_check(const TowerStep& step, const std::string& name) {
  for (const auto& c : step.checks)
    if (c.name == name) return &c;
  return nullptr;
}

Outcome rationalization_tower() {
  Outcome o;
  const std::set<std::string> expected{kCiteTailReduction, kCiteLinearization, kCiteFischer};
  const std::vector<std::pair<std::string, std::string>> witnesses{
      {"lambda", "invariant_index_is_n"},    {"xi", "invariant_index_is_n"},
      {"w", "w_change_unimodular"},          {"w", "eta_last_w_is_inverse_product"},
      {"linearize", "eta_W_n_is_W_1"},
  };
  for (long n = 3; n <= 8; ++n) {
    const auto cert = build_certificate(n);
    const auto tag = " at n = " + std::to_string(n);
    o.require(cert.all_verified_or_cited(), "certificate failed" + tag);
    const auto cites = cert.citations();
    o.require(cites.size() == 3 && std::set<std::string>(cites.begin(), cites.end()) == expected, "citations" + tag);
    for (const auto& [step_name, check] : witnesses) {
      const auto it = std::find_if(cert.steps.begin(), cert.steps.end(),
                                   [&](const TowerStep& s) { return s.name == step_name; });
      const Check* c = it == cert.steps.end() ? nullptr : find_check(*it, check);
      o.require(c && c->passed, check + tag);
    }
  }
  const auto two = build_certificate(2);
  o.require(two.all_verified_or_cited() && !two.steps.empty() && two.steps.front().name == "trivial-case",
            "trivial-case certificate at n = 2");
  if (o.passed) o.detail = "n = 3..8 AllVerifiedOrCited with 3 cited steps; n = 2 trivial case";
  return o;
}

Outcome projective_shadow() {
  Outcome o;
  for (long n = 2; n <= 8; ++n) {
    const auto r = projective_tower(n);
    o.require(r.passed() && r.xi_invariant_index == n && r.eta_order == n, "n = " + std::to_string(n));
  }
  if (o.passed) o.detail = "n = 2..8: xi-invariant degree-0 sublattice of index n, eta of order n";
  return o;
}

Outcome molien_agreement() {
  Outcome o;
  for (long n = 2; n <= 4; ++n) {
    const auto m = molien_dimensions(n, 3 * n);
    for (long d = 0; d <= 3 * n; ++d) {
      const auto tag = "n = " + std::to_string(n) + ", d = " + std::to_string(d);
      o.require(m[d] == invariant_dimension_bruteforce(n, d), "mismatch at " + tag);
      if (d % n != 0) o.require(m[d] == 0, "nonzero off multiples at " + tag);
    }
  }
  if (o.passed) o.detail = "n = 2..4, d <= 3n: Molien equals Reynolds rank, zero off multiples of n";
  return o;
}

Outcome showcase() {
  Outcome o;
  const auto r = n3_showcase();
  for (const auto& c : r.checks) o.require(c.passed, c.name);
  o.require(r.orbit_count == 4, "orbit count");
  o.require(r.stabilizer_orders == std::vector<long>{3, 3, 3, 3}, "stabilizer orders");
  if (o.passed) o.detail = "4 invariants, Hesse pencil fixed, dims match Molien for d <= 9, 4 orbits with stabilizer 3";
  return o;
}

IntMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  IntMatrix m(size(rng), size(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
  return m;
}

bool snf_ok(const IntMatrix& a) {
  const auto s = snf(a);
  if (!(s.U * a * s.V == s.D) || !is_unimodular(s.U) || !is_unimodular(s.V)) return false;
  const std::size_t k = std::min(s.D.rows(), s.D.cols());
  for (std::size_t r = 0; r < s.D.rows(); ++r)
    for (std::size_t c = 0; c < s.D.cols(); ++c)
      if (r != c && s.D(r, c) != 0) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (s.D(i, i) < 0) return false;
    if (s.D(i, i) == 0 ? s.D(i + 1, i + 1) != 0
                       : !mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t()))
      return false;
  }
  return true;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(9);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_matrix(rng);
    const auto h = hnf(a);
    o.require(h.U * a == h.H && is_unimodular(h.U) && hnf(h.H).H == h.H, "HNF");
    o.require(snf_ok(a), "SNF");
  }
  auto unit = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  for (int t = 0; t < 500; ++t) {
    const std::size_t dim = static_cast<std::size_t>(unit(1, 3));
    auto poly = [&] {
      LaurentPolynomial f(dim);
      for (long k = unit(0, 3); k > 0; --k) {
        ExponentVector e(dim);
        for (auto& x : e) x = unit(-2, 2);
        f.add_term(e, root_of_unity(12, unit(0, 11)) * Cyclotomic(unit(1, 3)));
      }
      return f;
    };
    auto map = [&] {
      std::vector<ExponentVector> cols(dim, ExponentVector(dim));
      std::vector<Cyclotomic> scalars(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        for (auto& x : cols[j]) x = unit(-1, 1);
        scalars[j] = root_of_unity(12, unit(0, 11));
      }
      return ScaledMonomialMap(cols, scalars);
    };
    const auto f = poly(), g = poly();
    const auto a = map(), b = map();
    o.require(pullback(f * g, a) == pullback(f, a) * pullback(g, a) && pullback(f + g, a) == pullback(f, a) + pullback(g, a),
              "pullback homomorphism");
    o.require(pullback(f, compose(a, b)) == pullback(pullback(f, a), b), "pullback contravariance");
  }
  // Every basis computed here re-checks its S-pair postcondition internally;
  // an InvariantViolation escapes as a failure.
  std::size_t bases = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t vars = static_cast<std::size_t>(unit(2, 3));
    std::vector<RationalPolynomial> gens;
    for (long k = unit(1, 3); k > 0; --k) {
      RationalPolynomial f(vars);
      for (long m = unit(1, 3); m > 0; --m) {
        Monomial e(vars);
        for (auto& x : e) x = static_cast<int>(unit(0, 2));
        f.add_term(e, unit(-3, 3));
      }
      gens.push_back(f);
    }
    try {
      const auto gb = buchberger(gens, t % 2 ? TermOrder::lex() : TermOrder::grevlex(), GroebnerBudget::large());
      for (const auto& g : gens) o.require(normal_form(g, gb).is_zero(), "generator does not reduce to 0");
      ++bases;
    } catch (const GroebnerBudgetExceeded&) {
    }
  }
  for (long n = 2; n <= 3; ++n) bases += static_cast<std::size_t>(basepoint_free_certificate(n).variables.size());
  if (o.passed)
    o.detail = "1000 HNF/SNF matrices, 500 pullback samples, " + std::to_string(bases) + " Groebner bases checked";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 means no bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "group structure", 5, group_structure},
      {2, "simple spectrum", 10, simple_spectrum},
      {3, "semi-invariant characters", 0, characters},
      {4, "basepoint-freeness", 60, basepoint_freeness},
      {5, "rationalization tower", 0, rationalization_tower},
      {6, "projective factorization", 0, projective_shadow},
      {7, "Molien agreement", 0, molien_agreement},
      {8, "n = 3 showcase", 0, showcase},
      {9, "property suites", 0, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.passed = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s bound)";
    }
    if (!o.passed) ++failed;
    std::printf("criterion %d %-26s %s  %s  [%.2fs]\n", c.id, c.name, o.passed ? "PASS" : "FAIL", o.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
