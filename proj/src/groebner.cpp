#include "heisrat/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heisrat {

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial RationalPolynomial::constant(std::size_t vars, const mpq_class& c) {
  RationalPolynomial p(vars);
  p.add_term(Monomial(vars, 0), c);
  return p;
}

RationalPolynomial RationalPolynomial::variable(std::size_t vars, std::size_t i) {
  if (i >= vars) throw std::out_of_range("RationalPolynomial::variable: index out of range");
  Monomial e(vars, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

RationalPolynomial RationalPolynomial::monomial(Monomial e, const mpq_class& c) {
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("RationalPolynomial: negative exponent");
  }
  RationalPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

int RationalPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool RationalPolynomial::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return std::accumulate(t.first.begin(), t.first.end(), 0) == d; });
}

void RationalPolynomial::add_term(const Monomial& e, const mpq_class& c) {
  if (e.size() != vars_) throw std::invalid_argument("RationalPolynomial: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.vars_ != vars_) throw std::invalid_argument("RationalPolynomial: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.vars_ != vars_) throw std::invalid_argument("RationalPolynomial: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
  if (other.vars_ != vars_) throw std::invalid_argument("RationalPolynomial: variable count mismatch");
  RationalPolynomial out(vars_);
  Monomial e(vars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) {
      for (std::size_t i = 0; i < vars_; ++i) e[i] = a[i] + b[i];
      out.add_term(e, ca * cb);
    }
  *this = std::move(out);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

RationalPolynomial RationalPolynomial::pow(unsigned k) const {
  RationalPolynomial result = constant(vars_, 1);
  RationalPolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

RationalPolynomial RationalPolynomial::extended(std::size_t extra) const {
  RationalPolynomial out(vars_ + extra);
  for (const auto& [e, c] : terms_) {
    Monomial f = e;
    f.resize(vars_ + extra, 0);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

RationalPolynomial RationalPolynomial::substitute_zero(std::size_t i) const {
  if (i >= vars_) throw std::out_of_range("substitute_zero: index out of range");
  RationalPolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) out.terms_.emplace(e, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// TermOrder

TermOrder::TermOrder(Kind kind, std::vector<std::size_t> priority) : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("TermOrder: priority must be a permutation of 0..d-1");
  }
}

std::vector<std::size_t> TermOrder::priority_for(std::size_t vars) const {
  if (priority_.empty()) {
    std::vector<std::size_t> p(vars);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }
  if (priority_.size() != vars) throw std::invalid_argument("TermOrder: priority length mismatch");
  return priority_;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const auto p = priority_for(a.size());
  if (kind_ == Kind::grevlex) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = p.size(); k-- > 0;) {
      const std::size_t i = p[k];
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i : p) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::pair<Monomial, mpq_class>> sorted_terms(const RationalPolynomial& f, const TermOrder& order) {
  std::vector<std::pair<Monomial, mpq_class>> out(f.terms().begin(), f.terms().end());
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return order.compare(x.first, y.first) > 0; });
  return out;
}

Monomial leading_monomial(const RationalPolynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading_monomial: zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [e, c] : f.terms()) {
    if (!best || order.compare(e, *best) > 0) best = &e;
  }
  return *best;
}

std::string to_string(const RationalPolynomial& f, const std::vector<std::string>& names, const TermOrder& order) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(f, order)) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool need_star = false;
    if (mag != 1 || constant) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << names.at(i);
      if (e[i] != 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

std::string to_string(const RationalPolynomial& f) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < f.vars(); ++i) names.push_back("x" + std::to_string(i));
  return to_string(f, names);
}

bool GroebnerBasis::is_unit() const {
  return polys.size() == 1 && polys.front().size() == 1 && polys.front().degree() == 0;
}

// ---------------------------------------------------------------------------
// Engine. Variables are permuted so that internal index 0 is the largest.

namespace {

struct Mono {
  std::vector<int> e;
  int deg = 0;
};

struct Term {
  Mono m;
  mpz_class c;
};

using Poly = std::vector<Term>;  // descending, nonzero coefficients

class Engine {
 public:
  Engine(std::size_t vars, const TermOrder& order)
      : vars_(vars), lex_(order.kind() == TermOrder::Kind::lex), priority_(order.priority_for(vars)) {}

  int cmp(const Mono& a, const Mono& b) const {
    if (!lex_) {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (std::size_t i = vars_; i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      }
      return 0;
    }
    for (std::size_t i = 0; i < vars_; ++i) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
  }

  static bool divides(const Mono& a, const Mono& b) {
    if (a.deg > b.deg) return false;
    for (std::size_t i = 0; i < a.e.size(); ++i) {
      if (a.e[i] > b.e[i]) return false;
    }
    return true;
  }

  static Mono lcm(const Mono& a, const Mono& b) {
    Mono m{std::vector<int>(a.e.size()), 0};
    for (std::size_t i = 0; i < a.e.size(); ++i) {
      m.e[i] = std::max(a.e[i], b.e[i]);
      m.deg += m.e[i];
    }
    return m;
  }

  static bool coprime(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i) {
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    }
    return true;
  }

  static Mono quotient(const Mono& a, const Mono& b) {
    Mono m{std::vector<int>(a.e.size()), a.deg - b.deg};
    for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = a.e[i] - b.e[i];
    return m;
  }

  static Mono product(const Mono& a, const Mono& b) {
    Mono m{std::vector<int>(a.e.size()), a.deg + b.deg};
    for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = a.e[i] + b.e[i];
    return m;
  }

  /// a * f - b * t * g
  /// a * f[start..] - b * t * g
  Poly combine(const Poly& f, const mpz_class& a, const mpz_class& b, const Mono& t, const Poly& g,
               std::size_t start = 0) const {
    Poly out;
    out.reserve(f.size() - start + g.size());
    std::size_t i = start, j = 0;
    Term scratch;
    while (i < f.size() || j < g.size()) {
      if (j < g.size()) scratch.m = product(t, g[j].m);
      const int c = i == f.size() ? -1 : j == g.size() ? 1 : cmp(f[i].m, scratch.m);
      if (c > 0) {
        out.push_back({f[i].m, a * f[i].c});
        ++i;
      } else if (c < 0) {
        out.push_back({scratch.m, -b * g[j].c});
        ++j;
      } else {
        mpz_class v = a * f[i].c - b * g[j].c;
        if (v != 0) out.push_back({scratch.m, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static mpz_class content(const Poly& f) {
    mpz_class g = 0;
    for (const auto& t : f) {
      g = gcd(g, t.c);
      if (g == 1) break;
    }
    return g;
  }

  static void make_primitive(Poly& f) {
    if (f.empty()) return;
    mpz_class g = content(f);
    if (f.front().c < 0) g = -g;
    if (g != 1) {
      for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
  }

  /// Full reduction of f by G. On return, result = scale * f - (ideal element).
  Poly reduce(Poly f, const std::vector<Poly>& G, GroebnerStats& stats, std::size_t max_steps,
              mpq_class* scale, std::size_t max_bits = 0) const {
    std::size_t& steps = stats.reduction_steps;
    Poly r;
    std::size_t since_content = 0;
    std::size_t head = 0;
    while (head < f.size()) {
      const Term& lead = f[head];
      const Poly* div = nullptr;
      for (const auto& g : G) {
        if (divides(g.front().m, lead.m)) {
          div = &g;
          break;
        }
      }
      if (!div) {
        r.push_back(std::move(f[head]));
        ++head;
        continue;
      }
      if (++steps > max_steps) throw GroebnerBudgetExceeded("Groebner reduction step budget exhausted", stats);
      const mpz_class g = gcd(lead.c, div->front().c);
      const mpz_class a = div->front().c / g;
      const mpz_class b = lead.c / g;
      const Mono t = quotient(lead.m, div->front().m);
      f = combine(f, a, b, t, *div, head);
      head = 0;
      if (a != 1) {
        for (auto& term : r) term.c *= a;
        if (scale) *scale *= a;
      }
      if (++since_content >= 8) {
        since_content = 0;
        if (max_bits && !f.empty() && mpz_sizeinbase(f.front().c.get_mpz_t(), 2) > max_bits) {
          throw GroebnerBudgetExceeded("Groebner coefficient size budget exhausted", stats);
        }
        mpz_class c = gcd(content(f), content(r));
        if (c > 1) {
          for (auto& term : f) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), c.get_mpz_t());
          for (auto& term : r) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), c.get_mpz_t());
          if (scale) *scale /= c;
        }
      }
    }
    return r;
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    const Mono l = lcm(f.front().m, g.front().m);
    const mpz_class c = gcd(f.front().c, g.front().c);
    const mpz_class a = g.front().c / c;
    const mpz_class b = f.front().c / c;
    // a * (l / lm f) * f - b * (l / lm g) * g
    const Poly left = combine(Poly{}, 0, -a, quotient(l, f.front().m), f);
    return combine(left, 1, b, quotient(l, g.front().m), g);
  }

  Poly from(const RationalPolynomial& p) const {
    mpz_class den = 1;
    for (const auto& [e, c] : p.terms()) den = lcm_z(den, c.get_den());
    Poly out;
    for (const auto& [e, c] : p.terms()) {
      Mono m{std::vector<int>(vars_), 0};
      for (std::size_t k = 0; k < vars_; ++k) {
        m.e[k] = e[priority_[k]];
        m.deg += m.e[k];
      }
      mpq_class v = c * den;
      out.push_back({std::move(m), v.get_num()});
    }
    std::sort(out.begin(), out.end(), [&](const Term& x, const Term& y) { return cmp(x.m, y.m) > 0; });
    return out;
  }

  RationalPolynomial to(const Poly& f, const mpq_class& divisor) const {
    RationalPolynomial out(vars_);
    Monomial e(vars_);
    for (const auto& t : f) {
      for (std::size_t k = 0; k < vars_; ++k) e[priority_[k]] = t.m.e[k];
      out.add_term(e, mpq_class(t.c) / divisor);
    }
    return out;
  }

  static mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }

 private:
  std::size_t vars_;
  bool lex_;
  std::vector<std::size_t> priority_;
};

struct Pair {
  std::size_t i, j;
  Mono lcm;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<RationalPolynomial>& gens, const TermOrder& order,
                         const GroebnerBudget& budget) {
  if (gens.empty()) throw std::invalid_argument("buchberger: no generators");
  const std::size_t vars = gens.front().vars();
  for (const auto& g : gens) {
    if (g.vars() != vars) throw std::invalid_argument("buchberger: variable count mismatch");
  }
  const Engine eng(vars, order);
  GroebnerBasis result;
  result.order = order;
  result.reduced = true;
  GroebnerStats& stats = result.stats;

  std::vector<Poly> G;
  bool unit = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Poly p = eng.from(g);
    Engine::make_primitive(p);
    if (p.front().m.deg == 0) unit = true;
    G.push_back(std::move(p));
  }

  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, Engine::lcm(G[i].front().m, G[j].front().m)});
      pending.insert({i, j});
    }
  };
  if (!unit) {
    for (std::size_t j = 0; j < G.size(); ++j) add_pairs_for(j);
  }

  while (!unit && !pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const int c = eng.cmp(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && std::tie(pairs[k].j, pairs[k].i) < std::tie(pairs[best].j, pairs[best].i))) best = k;
    }
    const Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    pending.erase({p.i, p.j});

    if (Engine::coprime(G[p.i].front().m, G[p.j].front().m)) {
      ++stats.pairs_coprime;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j || !Engine::divides(G[k].front().m, p.lcm)) continue;
      const auto ik = std::minmax(p.i, k);
      const auto jk = std::minmax(p.j, k);
      chain = !pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second});
    }
    if (chain) {
      ++stats.pairs_chain;
      continue;
    }
    if (++stats.pairs_reduced > budget.max_pairs) {
      throw GroebnerBudgetExceeded("Groebner S-pair budget exhausted", stats);
    }
    Poly r = eng.reduce(eng.spoly(G[p.i], G[p.j]), G, stats, budget.max_reduction_steps, nullptr,
                        budget.max_coefficient_bits);
    if (r.empty()) continue;
    Engine::make_primitive(r);
    for (const auto& t : r) {
      if (mpz_sizeinbase(t.c.get_mpz_t(), 2) > budget.max_coefficient_bits) {
        throw GroebnerBudgetExceeded("Groebner coefficient size budget exhausted", stats);
      }
    }
    if (r.front().m.deg == 0) {
      unit = true;
      break;
    }
    G.push_back(std::move(r));
    stats.max_basis_size = std::max(stats.max_basis_size, G.size());
    add_pairs_for(G.size() - 1);
  }
  stats.max_basis_size = std::max(stats.max_basis_size, G.size());

  if (unit) {
    result.polys.push_back(RationalPolynomial::constant(vars, 1));
  } else {
    // Minimalize, then interreduce.
    std::vector<Poly> minimal;
    for (std::size_t a = 0; a < G.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
        if (a == b || !Engine::divides(G[b].front().m, G[a].front().m)) continue;
        // Equal leading monomials: keep the earliest.
        redundant = eng.cmp(G[a].front().m, G[b].front().m) != 0 || b < a;
      }
      if (!redundant) minimal.push_back(G[a]);
    }
    std::vector<Poly> reduced;
    GroebnerStats scratch;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<Poly> others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (b != a) others.push_back(minimal[b]);
      }
      Poly tail(minimal[a].begin() + 1, minimal[a].end());
      mpq_class scale = 1;
      Poly rest = eng.reduce(std::move(tail), others, scratch, static_cast<std::size_t>(-1), &scale);
      // scale * tail - (ideal) = rest, so scale * lead + rest is in the ideal.
      Poly full;
      full.push_back({minimal[a].front().m, 0});
      const mpz_class den = scale.get_den();
      full.front().c = scale.get_num() * minimal[a].front().c;
      for (auto& t : rest) {
        t.c *= den;
        full.push_back(std::move(t));
      }
      Engine::make_primitive(full);
      reduced.push_back(std::move(full));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Poly& x, const Poly& y) { return eng.cmp(x.front().m, y.front().m) > 0; });
    for (const auto& p : reduced) result.polys.push_back(eng.to(p, mpq_class(p.front().c)));
  }

  // Postconditions, checked rather than trusted.
  for (const auto& g : gens) {
    if (!normal_form(g, result).is_zero()) {
      throw InvariantViolation("buchberger: an input generator does not reduce to zero");
    }
  }
  std::vector<Poly> final_polys;
  for (const auto& p : result.polys) final_polys.push_back(eng.from(p));
  GroebnerStats scratch;
  for (std::size_t j = 0; j < final_polys.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Poly r = eng.reduce(eng.spoly(final_polys[i], final_polys[j]), final_polys, scratch,
                                static_cast<std::size_t>(-1), nullptr);
      if (!r.empty()) throw InvariantViolation("buchberger: an S-polynomial does not reduce to zero");
    }
  return result;
}

RationalPolynomial normal_form(const RationalPolynomial& f, const GroebnerBasis& gb) {
  const std::size_t vars = f.vars();
  if (f.is_zero()) return f;
  const Engine eng(vars, gb.order);
  std::vector<Poly> G;
  for (const auto& g : gb.polys) {
    if (g.vars() != vars) throw std::invalid_argument("normal_form: variable count mismatch");
    G.push_back(eng.from(g));
  }
  // from() clears denominators of f: record that factor in the scale.
  mpz_class den = 1;
  for (const auto& [e, c] : f.terms()) den = Engine::lcm_z(den, c.get_den());
  mpq_class scale = den;
  GroebnerStats stats;
  const Poly r = eng.reduce(eng.from(f), G, stats, static_cast<std::size_t>(-1), &scale);
  return eng.to(r, scale);
}

}  // namespace heisrat
