#pragma once

// The semi-invariant forms f_k = sum_i x_i^k x_{i+1}^{n-k}, the linear systems
// they span, and Groebner radical-membership tests for their base loci.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "heisrat/check.hpp"
#include "heisrat/cyclotomic.hpp"
#include "heisrat/groebner.hpp"
#include "heisrat/laurent.hpp"

namespace heisrat {

/// sum_{i in Z/n} x_i^k x_{i+1}^{n-k}, 1 <= k <= n.
RationalPolynomial f_poly(long n, long k);
/// sum_{i in Z/n} x_i^k x_{i+1}^{m-k}, 1 <= k <= m, m >= n.
RationalPolynomial f_poly_m(long n, long k, long m);
/// x_0 x_1 ... x_{n-2} x_{n-1}^{m-n+1}.
RationalPolynomial product_member(long n, long m);

/// {f_1^n, ..., f_n^n, (x_0 ... x_{n-1})^n}, all of degree n^2.
std::vector<RationalPolynomial> system_L(long n);
/// {f_1, ..., f_n, x_0 ... x_{n-1}}.
std::vector<RationalPolynomial> system_L_degree_n(long n);
/// {f_1^(m), ..., f_m^(m), product_member(n, m)}.
std::vector<RationalPolynomial> system_L_m(long n, long m);

/// x_i = 0 memberwise; members that vanish are dropped.
std::vector<RationalPolynomial> restrict_system_to_hyperplane(const std::vector<RationalPolynomial>& system,
                                                              std::size_t i);

LaurentPolynomial to_laurent(const RationalPolynomial& f);
/// Requires rational coefficients and nonnegative exponents.
RationalPolynomial from_laurent(const LaurentPolynomial& f);

enum class RadicalVerdict { in_radical, not_in_radical, inconclusive };
const char* to_string(RadicalVerdict v);

struct RadicalOutcome {
  std::size_t variable = 0;
  RadicalVerdict verdict = RadicalVerdict::inconclusive;
  double seconds = 0;
  GroebnerStats stats;
  std::string detail;
};

/// Rabinowitsch test: x_i is in the radical of (gens) iff gens + (1 - u x_i)
/// generate the unit ideal, u a fresh last variable.
RadicalOutcome variable_in_radical(const std::vector<RationalPolynomial>& gens, std::size_t i,
                                   const GroebnerBudget& budget = {});

/// Exact evaluation of f at a point with cyclotomic coordinates.
Cyclotomic evaluate(const RationalPolynomial& f, const std::vector<Cyclotomic>& point);

/// A common zero of {f_1, ..., f_n, x_0 ... x_{n-1}} in P^{n-1}: the point
/// with x_1 = zeta_{2n}, x_3 = 1 and all other coordinates 0. Every f_k with
/// k < n needs two cyclically adjacent nonzero coordinates, and
/// f_n = zeta_{2n}^n + 1 = 0. Returned only after exact evaluation confirms
/// it (n >= 4); nullopt otherwise.
std::optional<std::vector<Cyclotomic>> explicit_base_point(long n);

struct BasepointFreeReport {
  long n = 0;
  std::vector<RadicalOutcome> variables;
  double seconds = 0;
  /// Independent exact witness, present whenever explicit_base_point finds one.
  std::optional<std::vector<Cyclotomic>> base_point;

  /// in_radical if every variable is; inconclusive if any run was and none
  /// failed; not_in_radical otherwise.
  RadicalVerdict verdict() const;
};

/// Every x_i in the radical of (f_1, ..., f_n, x_0 ... x_{n-1}); the
/// per-variable runs are independent and run concurrently when `parallel`.
/// Throws std::invalid_argument for n < 2 or n > max_n.
BasepointFreeReport basepoint_free_certificate(long n, const GroebnerBudget& budget = {}, long max_n = 4,
                                               bool parallel = true);

struct ShowcaseReport {
  std::vector<Check> checks;
  std::vector<std::string> generators;     ///< rendered in x, y, z
  std::vector<long> molien;                ///< degrees 0..9
  std::vector<std::size_t> generated_dims; ///< span of generator products per degree
  std::size_t orbit_count = 0;
  std::vector<long> stabilizer_orders;

  bool passed() const { return all_passed(checks); }
};

/// Invariants of H_3: xyz, x^3+y^3+z^3, x^3y^3+y^3z^3+z^3x^3, x^3y^6+y^3z^6+z^3x^6;
/// the Hesse pencil; the points with nontrivial stabilizer.
ShowcaseReport n3_showcase();

}  // namespace heisrat
