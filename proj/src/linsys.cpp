#include "heisrat/linsys.hpp"

#include <chrono>
#include <future>
#include <stdexcept>

#include "heisrat/heisenberg.hpp"
#include "heisrat/polynomial_text.hpp"

namespace heisrat {

namespace {

std::size_t idx(long i, long n) { return static_cast<std::size_t>(((i % n) + n) % n); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

RationalPolynomial f_poly(long n, long k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("f_poly: need 1 <= k <= n");
  return f_poly_m(n, k, n);
}

RationalPolynomial f_poly_m(long n, long k, long m) {
  if (n < 1 || m < n || k < 1 || k > m) throw std::invalid_argument("f_poly_m: need 1 <= k <= m, m >= n");
  const std::size_t sz = static_cast<std::size_t>(n);
  RationalPolynomial f(sz);
  for (long i = 0; i < n; ++i) {
    Monomial e(sz, 0);
    e[idx(i, n)] += static_cast<int>(k);
    e[idx(i + 1, n)] += static_cast<int>(m - k);
    f.add_term(e, 1);
  }
  return f;
}

RationalPolynomial product_member(long n, long m) {
  if (n < 1 || m < n) throw std::invalid_argument("product_member: need m >= n >= 1");
  Monomial e(static_cast<std::size_t>(n), 1);
  e.back() = static_cast<int>(m - n + 1);
  return RationalPolynomial::monomial(std::move(e));
}

std::vector<RationalPolynomial> system_L(long n) {
  if (n < 2) throw std::invalid_argument("system_L: n must be at least 2");
  std::vector<RationalPolynomial> out;
  for (long k = 1; k <= n; ++k) out.push_back(f_poly(n, k).pow(static_cast<unsigned>(n)));
  out.push_back(product_member(n, n).pow(static_cast<unsigned>(n)));
  return out;
}

std::vector<RationalPolynomial> system_L_degree_n(long n) {
  if (n < 2) throw std::invalid_argument("system_L_degree_n: n must be at least 2");
  return system_L_m(n, n);
}

std::vector<RationalPolynomial> system_L_m(long n, long m) {
  std::vector<RationalPolynomial> out;
  for (long k = 1; k <= m; ++k) out.push_back(f_poly_m(n, k, m));
  out.push_back(product_member(n, m));
  return out;
}

std::vector<RationalPolynomial> restrict_system_to_hyperplane(const std::vector<RationalPolynomial>& system,
                                                              std::size_t i) {
  std::vector<RationalPolynomial> out;
  for (const auto& f : system) {
    auto r = f.substitute_zero(i);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

LaurentPolynomial to_laurent(const RationalPolynomial& f) {
  LaurentPolynomial out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    out.add_term(ExponentVector(e.begin(), e.end()), Cyclotomic(c, 1));
  }
  return out;
}

RationalPolynomial from_laurent(const LaurentPolynomial& f) {
  RationalPolynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    const auto q = c.as_rational();
    if (!q) throw std::invalid_argument("from_laurent: coefficient is not rational");
    Monomial m;
    for (Exponent x : e) {
      if (x < 0) throw std::invalid_argument("from_laurent: negative exponent");
      m.push_back(static_cast<int>(x));
    }
    out.add_term(m, *q);
  }
  return out;
}

const char* to_string(RadicalVerdict v) {
  switch (v) {
    case RadicalVerdict::in_radical:
      return "in_radical";
    case RadicalVerdict::not_in_radical:
      return "not_in_radical";
    case RadicalVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

RadicalOutcome variable_in_radical(const std::vector<RationalPolynomial>& gens, std::size_t i,
                                   const GroebnerBudget& budget) {
  if (gens.empty()) throw std::invalid_argument("variable_in_radical: no generators");
  const std::size_t vars = gens.front().vars();
  if (i >= vars) throw std::out_of_range("variable_in_radical: variable index out of range");
  RadicalOutcome out;
  out.variable = i;
  const auto start = std::chrono::steady_clock::now();

  std::vector<RationalPolynomial> extended;
  for (const auto& g : gens) extended.push_back(g.extended(1));
  Monomial ux(vars + 1, 0);
  ux[i] = 1;
  ux[vars] = 1;
  RationalPolynomial rab = RationalPolynomial::constant(vars + 1, 1);
  rab.add_term(ux, -1);
  extended.push_back(std::move(rab));

  try {
    const auto gb = buchberger(extended, TermOrder::grevlex(), budget);
    out.stats = gb.stats;
    out.verdict = gb.is_unit() ? RadicalVerdict::in_radical : RadicalVerdict::not_in_radical;
    out.detail = gb.is_unit() ? "basis {1}" : "basis has " + std::to_string(gb.polys.size()) + " elements";
  } catch (const GroebnerBudgetExceeded& e) {
    out.stats = e.stats();
    out.verdict = RadicalVerdict::inconclusive;
    out.detail = e.what();
  }
  out.seconds = seconds_since(start);
  return out;
}

Cyclotomic evaluate(const RationalPolynomial& f, const std::vector<Cyclotomic>& point) {
  if (point.size() != f.vars()) throw std::invalid_argument("evaluate: point dimension mismatch");
  Cyclotomic sum;
  for (const auto& [e, c] : f.terms()) {
    Cyclotomic term(c, 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= point[i].pow(e[i]);
    }
    sum += term;
  }
  return sum;
}

std::optional<std::vector<Cyclotomic>> explicit_base_point(long n) {
  if (n < 4) return std::nullopt;
  std::vector<Cyclotomic> point(static_cast<std::size_t>(n), Cyclotomic(0));
  point[1] = root_of_unity(2 * n, 1);
  point[3] = Cyclotomic(1);
  for (const auto& f : system_L_degree_n(n)) {
    if (!evaluate(f, point).is_zero()) return std::nullopt;
  }
  return point;
}

RadicalVerdict BasepointFreeReport::verdict() const {
  bool inconclusive = false;
  for (const auto& v : variables) {
    if (v.verdict == RadicalVerdict::not_in_radical) return RadicalVerdict::not_in_radical;
    if (v.verdict == RadicalVerdict::inconclusive) inconclusive = true;
  }
  return inconclusive ? RadicalVerdict::inconclusive : RadicalVerdict::in_radical;
}

BasepointFreeReport basepoint_free_certificate(long n, const GroebnerBudget& budget, long max_n, bool parallel) {
  if (n < 2) throw std::invalid_argument("basepoint_free_certificate: n must be at least 2");
  if (n > max_n) {
    throw std::invalid_argument("basepoint_free_certificate: n = " + std::to_string(n) +
                                " exceeds the supported maximum " + std::to_string(max_n));
  }
  const auto start = std::chrono::steady_clock::now();
  const auto gens = system_L_degree_n(n);
  BasepointFreeReport report;
  report.n = n;
  const std::size_t sz = static_cast<std::size_t>(n);
  if (parallel) {
    std::vector<std::future<RadicalOutcome>> runs;
    for (std::size_t i = 0; i < sz; ++i) {
      runs.push_back(std::async(std::launch::async, [&gens, &budget, i] { return variable_in_radical(gens, i, budget); }));
    }
    for (auto& r : runs) report.variables.push_back(r.get());
  } else {
    for (std::size_t i = 0; i < sz; ++i) report.variables.push_back(variable_in_radical(gens, i, budget));
  }
  report.base_point = explicit_base_point(n);
  if (report.base_point) {
    for (const auto& v : report.variables) {
      if (v.verdict == RadicalVerdict::in_radical && !(*report.base_point)[v.variable].is_zero()) {
        throw InvariantViolation("basepoint_free_certificate: Groebner run contradicts an exact base point");
      }
    }
  }
  report.seconds = seconds_since(start);
  return report;
}

ShowcaseReport n3_showcase() {
  ShowcaseReport rep;
  const VariableNames xyz{{"x", "y", "z"}};
  const std::vector<std::string> texts{"x*y*z", "x^3 + y^3 + z^3", "x^3*y^3 + y^3*z^3 + z^3*x^3",
                                       "x^3*y^6 + y^3*z^6 + z^3*x^6"};
  std::vector<LaurentPolynomial> gens;
  for (const auto& t : texts) {
    gens.push_back(parse_polynomial(t, xyz, 3));
    rep.generators.push_back(render(gens.back(), xyz));
  }

  const GroupAction g(3);
  const auto elements = enumerate_group(g);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bool fixed = true;
    for (const auto& e : elements) fixed = fixed && pullback(gens[k], e) == gens[k];
    rep.checks.push_back({"invariant: " + rep.generators[k], fixed,
                          "checked against all " + std::to_string(elements.size()) + " group elements"});
  }
  for (std::size_t k : {std::size_t{1}, std::size_t{0}}) {
    const bool xi_ok = pullback(gens[k], g.xi()) == gens[k];
    const bool eta_ok = pullback(gens[k], g.eta()) == gens[k];
    rep.checks.push_back({"hesse pencil: xi and eta fix " + rep.generators[k], xi_ok && eta_ok, ""});
  }

  const long max_deg = 9;
  rep.molien = molien_dimensions(3, max_deg);
  const long degs[4] = {3, 3, 6, 9};
  for (long d = 0; d <= max_deg; ++d) {
    std::vector<LaurentPolynomial> products;
    for (long a = 0; a * degs[0] <= d; ++a)
      for (long b = 0; a * degs[0] + b * degs[1] <= d; ++b)
        for (long c = 0; a * degs[0] + b * degs[1] + c * degs[2] <= d; ++c) {
          const long rest = d - a * degs[0] - b * degs[1] - c * degs[2];
          if (rest % degs[3] != 0) continue;
          const long e = rest / degs[3];
          products.push_back(gens[0].pow(a) * gens[1].pow(b) * gens[2].pow(c) * gens[3].pow(e));
        }
    const std::size_t dim = products.empty() ? 0 : span_rank(products);
    rep.generated_dims.push_back(dim);
    const long expected = rep.molien[static_cast<std::size_t>(d)];
    rep.checks.push_back({"degree " + std::to_string(d) + " dimension", static_cast<long>(dim) == expected,
                          "generated " + std::to_string(dim) + ", molien " + std::to_string(expected)});
  }

  const auto orbits = stabilizer_orbit_report(g);
  rep.orbit_count = orbits.size();
  bool all_three = true;
  for (const auto& o : orbits) {
    rep.stabilizer_orders.push_back(o.stabilizer_order);
    all_three = all_three && o.stabilizer_order == 3;
  }
  rep.checks.push_back({"four orbits with stabilizer order 3", orbits.size() == 4 && all_three,
                        std::to_string(orbits.size()) + " orbits"});
  return rep;
}

}  // namespace heisrat
