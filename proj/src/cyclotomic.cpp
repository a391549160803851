#include "heisrat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace heisrat {

namespace {

using QPoly = std::vector<mpq_class>;  // lowest degree first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<long> compute_cyclotomic(long n) {
  // t^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      const long c = num[i];
      if (c == 0) continue;
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
      if (i == dd) break;
    }
    num = std::move(quot);
  }
  return num;
}

struct PhiCache {
  std::mutex mu;
  std::map<long, std::vector<long>> table;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

// Reduces an arbitrary power-coefficient vector modulo Phi_n in place and
// resizes it to phi(n).
void reduce_mod_phi(QPoly& a, long n) {
  const auto phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    const mpq_class c = a[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) a[i - deg + j] -= c * phi[j];
    }
    a[i] = 0;
  }
  a.resize(deg, mpq_class(0));
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) continue;
    const mpq_class c = a[i] / lead;
    q[i - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
    if (i == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

std::string root_text(long order, long exponent) {
  std::string s = "z{" + std::to_string(order) + "}";
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  auto& cache = phi_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.table.find(n); it != cache.table.end()) return it->second;
  }
  auto phi = compute_cyclotomic(n);
  std::lock_guard lock(cache.mu);
  cache.table.emplace(n, phi);
  return phi;
}

Cyclotomic::Cyclotomic() : Cyclotomic(mpq_class(0), 1) {}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(mpq_class(value), 1) {}

Cyclotomic::Cyclotomic(mpq_class value, long order) : order_(order) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), mpq_class(0));
  coeffs_[0] = std::move(value);
}

Cyclotomic::Cyclotomic(long order, std::vector<mpq_class> reduced)
    : order_(order), coeffs_(std::move(reduced)) {}

Cyclotomic Cyclotomic::from_power_coeffs(long order, std::vector<mpq_class> coeffs) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  reduce_mod_phi(coeffs, order);
  return Cyclotomic(order, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::optional<mpq_class> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promote(long m) const {
  if (m == order_) return *this;
  if (m < 1 || m % order_ != 0) {
    throw std::invalid_argument("Cyclotomic::promote: target order must be a multiple");
  }
  const long stride = m / order_;
  QPoly power(static_cast<std::size_t>(stride) * (coeffs_.size() - 1) + 1, mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    power[i * static_cast<std::size_t>(stride)] = coeffs_[i];
  }
  return from_power_coeffs(m, std::move(power));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.order_ != order_) {
    const long m = std::lcm(order_, other.order_);
    *this = promote(m);
    return *this += other.promote(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.order_ != order_) {
    const long m = std::lcm(order_, other.order_);
    *this = promote(m);
    return *this *= other.promote(m);
  }
  if (auto r = other.as_rational()) {
    for (auto& c : coeffs_) c *= *r;
    return *this;
  }
  if (auto r = as_rational()) {
    const mpq_class s = *r;
    coeffs_ = other.coeffs_;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  auto prod = poly_mul(coeffs_, other.coeffs_);
  reduce_mod_phi(prod, order_);
  coeffs_ = std::move(prod);
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const long m = std::lcm(a.order_, b.order_);
  return a.promote(m).coeffs_ == b.promote(m).coeffs_;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DomainError("Cyclotomic::inv: inverse of zero");
  if (auto r = as_rational()) return Cyclotomic(1 / *r, order_);
  // Extended Euclid: s * a + t * phi = g with g a nonzero constant.
  const auto phi_int = cyclotomic_polynomial(order_);
  QPoly phi(phi_int.begin(), phi_int.end());
  QPoly r0 = phi, r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi is irreducible, so the last nonzero remainder is a constant.
  const mpq_class g = r1.at(0);
  for (auto& c : s1) c /= g;
  return from_power_coeffs(order_, std::move(s1));
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Cyclotomic result(mpq_class(1), order_);
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Cyclotomic root_of_unity(long n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: order must be positive");
  k %= n;
  if (k < 0) k += n;
  QPoly power(static_cast<std::size_t>(k) + 1, mpq_class(0));
  power[static_cast<std::size_t>(k)] = 1;
  return Cyclotomic::from_power_coeffs(n, std::move(power));
}

std::optional<RootOfUnity> try_as_root_of_unity(const Cyclotomic& a) {
  // Roots of unity in Q(zeta_N) are exactly the lcm(2, N)-th roots of unity.
  const long big = std::lcm(2L, a.order());
  const Cyclotomic lifted = a.promote(big);
  for (long k = 0; k < big; ++k) {
    if (root_of_unity(big, k).coeffs() == lifted.coeffs()) {
      const long g = std::gcd(k, big);
      return RootOfUnity{big / g, k / g};
    }
  }
  return std::nullopt;
}

std::string to_string(const Cyclotomic& a) {
  if (auto r = a.as_rational()) return rational_text(*r);
  if (auto root = try_as_root_of_unity(a)) return root_text(root->order, root->exponent);
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const mpq_class& c = a.coeffs()[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rational_text(mag);
    } else {
      if (mag != 1) os << rational_text(mag) << "*";
      os << root_text(a.order(), static_cast<long>(i));
    }
  }
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << to_string(a); }

}  // namespace heisrat
