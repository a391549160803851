#pragma once

// The finite Heisenberg group H_n in its Schroedinger representation on n
// variables x_0, ..., x_{n-1}:
//
//   xi  : x_i -> omega^{-i} x_i
//   eta : x_i -> x_{i+1}            (indices mod n)
//
// with omega = zeta_n^{e} for a chosen unit e (e = 1 by default). Group
// multiplication is realized as composition of pullback maps (see
// ScaledMonomialMap), never through a hand-written cocycle.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "heisrat/cyclotomic.hpp"
#include "heisrat/errors.hpp"
#include "heisrat/laurent.hpp"

namespace heisrat {

/// omega^c * xi^a * eta^b, residues in [0, n). Realized as
/// compose(scalar(omega^c), compose(xi^a, eta^b)), which pulls x_j back to
/// omega^{c - a j} x_{j + b}.
struct HeisenbergElement {
  long n = 1;
  long a = 0;
  long b = 0;
  long c = 0;
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

class GroupAction {
 public:
  /// Schroedinger representation of level n with omega = zeta_n^{omega_exponent}.
  explicit GroupAction(long n, long omega_exponent = 1);

  long n() const { return n_; }
  long omega_exponent() const { return omega_exponent_; }
  Cyclotomic omega() const { return root_of_unity(n_, omega_exponent_); }
  const ScaledMonomialMap& xi() const { return xi_; }
  const ScaledMonomialMap& eta() const { return eta_; }

  HeisenbergElement element(long a, long b, long c) const;
  ScaledMonomialMap realize(const HeisenbergElement& e) const;
  /// Reads the normal form back from a map; throws InvariantViolation if the
  /// map is not in the group.
  HeisenbergElement decompose(const ScaledMonomialMap& m) const;
  HeisenbergElement multiply(const HeisenbergElement& x, const HeisenbergElement& y) const;
  HeisenbergElement inverse(const HeisenbergElement& x) const;

  /// lambda = xi eta xi^{-1} eta^{-1}, realized as a scalar map.
  ScaledMonomialMap commutator() const;

 private:
  long n_;
  long omega_exponent_;
  ScaledMonomialMap xi_;
  ScaledMonomialMap eta_;
};

GroupAction schrodinger(long n, long omega_exponent = 1);

/// Closure of {xi, eta} under composition, in breadth-first discovery order.
std::vector<ScaledMonomialMap> enumerate_group(const GroupAction& g);

/// Elements acting as scalar maps.
std::vector<ScaledMonomialMap> center(const std::vector<ScaledMonomialMap>& elements);

/// Exact eigenvalues, as sorted minimal root-of-unity presentations. Requires
/// a generalized permutation map; a cycle of length L with scalar product s
/// contributes the L distinct L-th roots of s.
std::vector<RootOfUnity> spectrum_roots(const ScaledMonomialMap& m);
std::vector<Cyclotomic> spectrum(const ScaledMonomialMap& m);
bool has_simple_spectrum(const ScaledMonomialMap& m);

/// Homogeneous coordinates, first nonzero coordinate equal to 1.
using ProjectivePoint = std::vector<Cyclotomic>;

/// Eigen-directions of the point map of m. Requires simple spectrum.
std::vector<ProjectivePoint> fixed_points_projective(const ScaledMonomialMap& m);

struct OrbitRecord {
  std::vector<ProjectivePoint> points;
  long stabilizer_order = 0;  ///< in H_n modulo its center
};

/// All points fixed by some noncentral element, grouped into orbits.
/// Throws ResourceLimitError when n exceeds max_n.
std::vector<OrbitRecord> stabilizer_orbit_report(const GroupAction& g, long max_n = 5);

/// (1/|G|) sum_g pullback(f, g).
LaurentPolynomial reynolds(const LaurentPolynomial& f, const std::vector<ScaledMonomialMap>& elements);
LaurentPolynomial reynolds(const LaurentPolynomial& f, const GroupAction& g);

/// Exponent vectors of all degree-d monomials in `vars` variables, grlex
/// ascending.
std::vector<ExponentVector> monomials_of_degree(std::size_t vars, long d);

/// Rank over the coefficient field of a family of Laurent polynomials.
std::size_t span_rank(const std::vector<LaurentPolynomial>& family);

/// Dimension of the degree-d invariants as the rank of the Reynolds image of
/// the monomial basis. Throws ResourceLimitError above max_monomials.
long invariant_dimension_bruteforce(long n, long d, std::size_t max_monomials = 20000);

/// Molien series coefficients for degrees 0..d_max, from per-cycle
/// determinants det(1 - t g) = prod_cycles (1 - s_c t^{L_c}).
std::vector<long> molien_dimensions(long n, long d_max);

/// Per-cycle factors (s_c, L_c) of det(1 - t m) for a generalized permutation map.
std::vector<std::pair<RootOfUnity, long>> cycle_factors(const ScaledMonomialMap& m);

/// (k_xi, k_eta) with pullback(f, xi) = omega^{k_xi} f and
/// pullback(f, eta) = omega^{k_eta} f, if f is a simultaneous semi-invariant.
std::optional<std::pair<long, long>> character_of_semiinvariant(const LaurentPolynomial& f,
                                                                const GroupAction& g);

/// Exponent k in [0, n) with value = omega^k, if any.
std::optional<long> omega_power(const Cyclotomic& value, const GroupAction& g);

}  // namespace heisrat
