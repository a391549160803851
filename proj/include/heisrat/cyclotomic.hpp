#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A value is stored as sum_i c_i * zeta_N^i, 0 <= i < phi(N), i.e. its unique
// remainder modulo the N-th cyclotomic polynomial. Values living at different
// orders are promoted to the lcm order before any arithmetic or comparison,
// so there is no global ambient field.

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "heisrat/errors.hpp"

namespace heisrat {

long euler_phi(long n);

/// Coefficients of Phi_N, lowest degree first. Monic of degree phi(N).
std::vector<long> cyclotomic_polynomial(long n);

class Cyclotomic {
 public:
  /// Zero of Q(zeta_1) = Q.
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT: implicit integer embedding is intended
  explicit Cyclotomic(mpq_class value, long order = 1);

  /// Builds sum_i coeffs[i] * zeta_order^i for a coefficient vector of any
  /// length, reducing modulo Phi_order.
  static Cyclotomic from_power_coeffs(long order, std::vector<mpq_class> coeffs);

  long order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<mpq_class> as_rational() const;

  /// Same value viewed in Q(zeta_m); m must be a multiple of order().
  Cyclotomic promote(long m) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Multiplicative inverse; throws DomainError on zero.
  Cyclotomic inv() const;
  Cyclotomic pow(long k) const;

 private:
  Cyclotomic(long order, std::vector<mpq_class> reduced);

  long order_;
  std::vector<mpq_class> coeffs_;
};

/// zeta_n^k, reduced.
Cyclotomic root_of_unity(long n, long k);

/// zeta_order^exponent with gcd(exponent, order) = 1 (or (1, 0) for 1).
struct RootOfUnity {
  long order = 1;
  long exponent = 0;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Minimal (order, exponent) presentation when the value is a root of unity.
std::optional<RootOfUnity> try_as_root_of_unity(const Cyclotomic& a);

/// Roots of unity render as "z{N}^k"; rationals as "p/q"; anything else as a
/// parenthesised rational combination of powers of z{N}.
std::string to_string(const Cyclotomic& a);
std::ostream& operator<<(std::ostream& os, const Cyclotomic& a);

}  // namespace heisrat
