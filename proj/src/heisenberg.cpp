#include "heisrat/heisenberg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace heisrat {

namespace {

long mod(long a, long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

long inverse_mod(long a, long m) {
  if (m == 1) return 0;
  long old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: not a unit");
  return mod(old_s, m);
}

RootOfUnity minimal_root(long order, long exponent) {
  exponent = mod(exponent, order);
  if (exponent == 0) return {1, 0};
  const long g = std::gcd(order, exponent);
  return {order / g, exponent / g};
}

bool root_less(const RootOfUnity& x, const RootOfUnity& y) {
  return std::pair(x.order, x.exponent) < std::pair(y.order, y.exponent);
}

// sigma(j): index of the single variable in the image of variable j.
std::vector<std::size_t> permutation_of(const ScaledMonomialMap& m) {
  if (!m.is_generalized_permutation()) {
    throw std::invalid_argument("spectrum: map is not a generalized permutation");
  }
  std::vector<std::size_t> sigma(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const auto& col = m.image(j);
    sigma[j] = static_cast<std::size_t>(std::find(col.begin(), col.end(), 1) - col.begin());
  }
  return sigma;
}

std::vector<std::vector<std::size_t>> cycles_of(const std::vector<std::size_t>& sigma) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t j = start; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

// One eigenvector of the point map, coordinates zeta_order^{exps[j]}, or zero
// where exps[j] < 0.
struct AngleVector {
  long order = 1;
  std::vector<long> exps;
};

std::vector<AngleVector> eigen_angles(const ScaledMonomialMap& m) {
  const auto sigma = permutation_of(m);
  const long L = m.scalar_order();
  std::vector<AngleVector> out;
  for (const auto& cyc : cycles_of(sigma)) {
    const long len = static_cast<long>(cyc.size());
    const long order = L * len;
    long k_sum = 0;
    for (std::size_t j : cyc) k_sum += m.scalar_exponents()[j];
    for (long t = 0; t < len; ++t) {
      // mu = zeta_order^{k_sum + L t}; P_{sigma(j)} = mu * c_j^{-1} * P_j.
      const long mu = k_sum + L * t;
      AngleVector v{order, std::vector<long>(m.dim(), -1)};
      long cur = 0;
      for (std::size_t idx = 0; idx < cyc.size(); ++idx) {
        const std::size_t j = cyc[idx];
        v.exps[j] = mod(cur, order);
        cur += mu - m.scalar_exponents()[j] * len;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<long> normalize_angles(std::vector<long> p, long order) {
  long base = -1;
  for (long e : p) {
    if (e >= 0) {
      base = e;
      break;
    }
  }
  for (auto& e : p) {
    if (e >= 0) e = mod(e - base, order);
  }
  return p;
}

}  // namespace

GroupAction::GroupAction(long n, long omega_exponent) : n_(n), omega_exponent_(0) {
  if (n < 1) throw std::invalid_argument("GroupAction: level must be positive");
  omega_exponent_ = mod(omega_exponent, n);
  if (std::gcd(omega_exponent_, n) != 1 && n > 1) {
    throw std::invalid_argument("GroupAction: omega must be a primitive n-th root of unity");
  }
  std::vector<Cyclotomic> scalars;
  std::vector<std::size_t> shift;
  for (long i = 0; i < n; ++i) {
    scalars.push_back(root_of_unity(n, -i * omega_exponent_));
    shift.push_back(static_cast<std::size_t>((i + 1) % n));
  }
  xi_ = ScaledMonomialMap::diagonal(scalars);
  eta_ = ScaledMonomialMap::permutation(shift);
}

HeisenbergElement GroupAction::element(long a, long b, long c) const {
  return {n_, mod(a, n_), mod(b, n_), mod(c, n_)};
}

ScaledMonomialMap GroupAction::realize(const HeisenbergElement& e) const {
  if (e.n != n_) throw std::invalid_argument("GroupAction::realize: level mismatch");
  const auto central = ScaledMonomialMap::scalar(static_cast<std::size_t>(n_), omega().pow(e.c));
  return compose(central, compose(power(xi_, e.a), power(eta_, e.b)));
}

HeisenbergElement GroupAction::decompose(const ScaledMonomialMap& m) const {
  if (m.dim() != static_cast<std::size_t>(n_)) throw InvariantViolation("decompose: dimension mismatch");
  // x_j pulls back to omega^{c - a j} x_{j + b}.
  const auto& first = m.image(0);
  const long b = std::find(first.begin(), first.end(), 1) - first.begin();
  for (long j = 0; j < n_; ++j) {
    ExponentVector expected(static_cast<std::size_t>(n_), 0);
    expected[static_cast<std::size_t>((j + b) % n_)] = 1;
    if (m.image(static_cast<std::size_t>(j)) != expected) {
      throw InvariantViolation("decompose: map is not a Heisenberg element (permutation part)");
    }
  }
  if (n_ % m.scalar_order() != 0) {
    throw InvariantViolation("decompose: scalar outside the n-th roots of unity");
  }
  const long stride = n_ / m.scalar_order();
  const long e_inv = inverse_mod(omega_exponent_, n_);
  std::vector<long> t(static_cast<std::size_t>(n_));
  for (long j = 0; j < n_; ++j) {
    t[static_cast<std::size_t>(j)] = mod(m.scalar_exponents()[static_cast<std::size_t>(j)] * stride * e_inv, n_);
  }
  const long c = t[0];
  const long a = n_ > 1 ? mod(c - t[1], n_) : 0;
  for (long j = 0; j < n_; ++j) {
    if (t[static_cast<std::size_t>(j)] != mod(c - a * j, n_)) {
      throw InvariantViolation("decompose: map is not a Heisenberg element (scalar part)");
    }
  }
  return {n_, a, mod(b, n_), c};
}

HeisenbergElement GroupAction::multiply(const HeisenbergElement& x, const HeisenbergElement& y) const {
  return decompose(compose(realize(x), realize(y)));
}

HeisenbergElement GroupAction::inverse(const HeisenbergElement& x) const {
  return decompose(heisrat::inverse(realize(x)));
}

ScaledMonomialMap GroupAction::commutator() const {
  return compose(xi_, compose(eta_, compose(heisrat::inverse(xi_), heisrat::inverse(eta_))));
}

GroupAction schrodinger(long n, long omega_exponent) { return GroupAction(n, omega_exponent); }

std::vector<ScaledMonomialMap> enumerate_group(const GroupAction& g) {
  std::vector<ScaledMonomialMap> elements{ScaledMonomialMap::identity(static_cast<std::size_t>(g.n()))};
  std::set<std::vector<Exponent>> seen{elements.front().key()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto* gen : {&g.xi(), &g.eta()}) {
      auto next = compose(elements[i], *gen);
      if (seen.insert(next.key()).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::vector<ScaledMonomialMap> center(const std::vector<ScaledMonomialMap>& elements) {
  std::vector<ScaledMonomialMap> out;
  for (const auto& e : elements) {
    if (e.as_scalar()) out.push_back(e);
  }
  return out;
}

std::vector<RootOfUnity> spectrum_roots(const ScaledMonomialMap& m) {
  const auto sigma = permutation_of(m);
  const long L = m.scalar_order();
  std::vector<RootOfUnity> out;
  for (const auto& cyc : cycles_of(sigma)) {
    const long len = static_cast<long>(cyc.size());
    long k_sum = 0;
    for (std::size_t j : cyc) k_sum += m.scalar_exponents()[j];
    for (long t = 0; t < len; ++t) out.push_back(minimal_root(L * len, k_sum + L * t));
  }
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

std::vector<Cyclotomic> spectrum(const ScaledMonomialMap& m) {
  std::vector<Cyclotomic> out;
  for (const auto& r : spectrum_roots(m)) out.push_back(root_of_unity(r.order, r.exponent));
  return out;
}

bool has_simple_spectrum(const ScaledMonomialMap& m) {
  const auto roots = spectrum_roots(m);
  return std::adjacent_find(roots.begin(), roots.end()) == roots.end();
}

std::vector<ProjectivePoint> fixed_points_projective(const ScaledMonomialMap& m) {
  if (!has_simple_spectrum(m)) throw std::domain_error("fixed_points_projective: repeated eigenvalue");
  std::vector<ProjectivePoint> out;
  for (const auto& v : eigen_angles(m)) {
    ProjectivePoint p;
    for (long e : v.exps) p.push_back(e < 0 ? Cyclotomic(0) : root_of_unity(v.order, e));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<OrbitRecord> stabilizer_orbit_report(const GroupAction& g, long max_n) {
  const long n = g.n();
  if (n > max_n) {
    throw ResourceLimitError("stabilizer_orbit_report: n = " + std::to_string(n) +
                             " exceeds the limit " + std::to_string(max_n));
  }
  const auto elements = enumerate_group(g);
  const long order = n * n;  // every fixed-point coordinate lies in Q(zeta_{n^2})
  std::vector<std::vector<long>> points;
  std::set<std::vector<long>> seen;
  for (const auto& e : elements) {
    if (e.as_scalar()) continue;
    for (const auto& v : eigen_angles(e)) {
      if (order % v.order != 0) throw InvariantViolation("fixed point outside Q(zeta_{n^2})");
      std::vector<long> p = v.exps;
      for (auto& x : p) {
        if (x >= 0) x *= order / v.order;
      }
      p = normalize_angles(std::move(p), order);
      if (seen.insert(p).second) points.push_back(std::move(p));
    }
  }

  auto act = [&](const ScaledMonomialMap& h, const std::vector<long>& p) {
    const auto sigma = permutation_of(h);
    const long stride = order / h.scalar_order();
    std::vector<long> q(p.size(), -1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      const long src = p[sigma[j]];
      if (src >= 0) q[j] = mod(src + h.scalar_exponents()[j] * stride, order);
    }
    return normalize_angles(std::move(q), order);
  };

  std::vector<OrbitRecord> out;
  std::set<std::vector<long>> assigned;
  for (const auto& p : points) {
    if (assigned.count(p)) continue;
    std::set<std::vector<long>> orbit;
    long fixing = 0;
    for (const auto& h : elements) {
      auto q = act(h, p);
      if (q == p) ++fixing;
      orbit.insert(std::move(q));
    }
    OrbitRecord rec;
    rec.stabilizer_order = fixing / n;
    for (const auto& q : orbit) {
      assigned.insert(q);
      ProjectivePoint pt;
      for (long x : q) pt.push_back(x < 0 ? Cyclotomic(0) : root_of_unity(order, x));
      rec.points.push_back(std::move(pt));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

LaurentPolynomial reynolds(const LaurentPolynomial& f, const std::vector<ScaledMonomialMap>& elements) {
  LaurentPolynomial sum(f.dim());
  for (const auto& g : elements) sum += pullback(f, g);
  sum *= Cyclotomic(mpq_class(1, static_cast<long>(elements.size())));
  return sum;
}

LaurentPolynomial reynolds(const LaurentPolynomial& f, const GroupAction& g) {
  return reynolds(f, enumerate_group(g));
}

std::vector<ExponentVector> monomials_of_degree(std::size_t vars, long d) {
  std::vector<ExponentVector> out;
  if (vars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  ExponentVector e(vars, 0);
  // Enumerate compositions of d into `vars` parts.
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == vars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::size_t span_rank(const std::vector<LaurentPolynomial>& family) {
  std::map<ExponentVector, LaurentPolynomial, GrlexLess> pivots;
  for (auto f : family) {
    while (!f.is_zero()) {
      const auto& [lead, coeff] = *f.terms().rbegin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const ExponentVector key = lead;
        f *= coeff.inv();
        pivots.emplace(key, std::move(f));
        break;
      }
      f -= it->second * Cyclotomic(coeff);
    }
  }
  return pivots.size();
}

long invariant_dimension_bruteforce(long n, long d, std::size_t max_monomials) {
  const auto monos = monomials_of_degree(static_cast<std::size_t>(n), d);
  if (monos.size() > max_monomials) {
    throw ResourceLimitError("invariant_dimension_bruteforce: " + std::to_string(monos.size()) +
                             " monomials exceed the limit");
  }
  const auto elements = enumerate_group(schrodinger(n));
  std::vector<LaurentPolynomial> images;
  for (const auto& e : monos) {
    auto r = reynolds(LaurentPolynomial::monomial(e), elements);
    if (!r.is_zero()) images.push_back(std::move(r));
  }
  return static_cast<long>(span_rank(images));
}

std::vector<std::pair<RootOfUnity, long>> cycle_factors(const ScaledMonomialMap& m) {
  const auto sigma = permutation_of(m);
  std::vector<std::pair<RootOfUnity, long>> out;
  for (const auto& cyc : cycles_of(sigma)) {
    long k_sum = 0;
    for (std::size_t j : cyc) k_sum += m.scalar_exponents()[j];
    out.emplace_back(minimal_root(m.scalar_order(), k_sum), static_cast<long>(cyc.size()));
  }
  return out;
}

std::vector<long> molien_dimensions(long n, long d_max) {
  if (d_max < 0) return {};
  const auto elements = enumerate_group(schrodinger(n));
  const std::size_t len = static_cast<std::size_t>(d_max) + 1;
  std::vector<Cyclotomic> total(len, Cyclotomic(0));
  for (const auto& g : elements) {
    std::vector<Cyclotomic> series(len, Cyclotomic(0));
    series[0] = Cyclotomic(1);
    for (const auto& [s, cycle_len] : cycle_factors(g)) {
      // Multiply by 1 / (1 - s t^L).
      const Cyclotomic root = root_of_unity(s.order, s.exponent);
      const std::size_t step = static_cast<std::size_t>(cycle_len);
      for (std::size_t i = step; i < len; ++i) series[i] += root * series[i - step];
    }
    for (std::size_t i = 0; i < len; ++i) total[i] += series[i];
  }
  std::vector<long> out;
  const mpq_class scale(1, static_cast<long>(elements.size()));
  for (const auto& c : total) {
    auto q = c.as_rational();
    if (!q) throw InvariantViolation("molien_dimensions: non-rational coefficient");
    const mpq_class v = *q * scale;
    if (v.get_den() != 1 || v < 0) throw InvariantViolation("molien_dimensions: non-integral coefficient");
    out.push_back(v.get_num().get_si());
  }
  return out;
}

std::optional<long> omega_power(const Cyclotomic& value, const GroupAction& g) {
  auto r = try_as_root_of_unity(value);
  if (!r || g.n() % r->order != 0) return std::nullopt;
  const long s = r->exponent * (g.n() / r->order);
  return mod(s * inverse_mod(g.omega_exponent(), g.n()), g.n());
}

std::optional<std::pair<long, long>> character_of_semiinvariant(const LaurentPolynomial& f,
                                                                const GroupAction& g) {
  if (f.is_zero() || f.dim() != static_cast<std::size_t>(g.n())) return std::nullopt;
  auto eigen = [&](const ScaledMonomialMap& m) -> std::optional<long> {
    const auto image = pullback(f, m);
    const auto& [e, c] = *f.terms().begin();
    auto it = image.terms().find(e);
    if (it == image.terms().end()) return std::nullopt;
    const Cyclotomic ratio = it->second * c.inv();
    if (!(image == f * ratio)) return std::nullopt;
    return omega_power(ratio, g);
  };
  auto kx = eigen(g.xi());
  auto ke = eigen(g.eta());
  if (!kx || !ke) return std::nullopt;
  return std::pair{*kx, *ke};
}

}  // namespace heisrat
