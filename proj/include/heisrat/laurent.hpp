#pragma once

// Sparse Laurent polynomials over Cyclotomic and scaled monomial maps.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heisrat/cyclotomic.hpp"
#include "heisrat/intlattice.hpp"

namespace heisrat {

using Exponent = std::int64_t;
using ExponentVector = std::vector<Exponent>;

Exponent total_degree(const ExponentVector& e);

/// Graded-lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Cyclotomic, GrlexLess>;

  explicit LaurentPolynomial(std::size_t dim = 0) : dim_(dim) {}

  static LaurentPolynomial constant(std::size_t dim, const Cyclotomic& c);
  static LaurentPolynomial monomial(ExponentVector e, const Cyclotomic& c = Cyclotomic(1));
  static LaurentPolynomial variable(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  /// Terms in ascending grlex order; no stored coefficient is zero.
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * x^e, dropping the entry if it cancels.
  void add_term(const ExponentVector& e, const Cyclotomic& c);

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Cyclotomic& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Cyclotomic& c) { return a *= c; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Nonnegative powers always; negative powers only for single terms.
  LaurentPolynomial pow(long k) const;

 private:
  void check_dim(const LaurentPolynomial& other) const;

  std::size_t dim_;
  TermMap terms_;
};

/// Variable j pulls back to scalar(j) * prod_i x_i^{matrix(i, j)}: column j of
/// the matrix holds the exponent vector of the image of variable j. Every
/// scalar is a root of unity.
///
/// Composition follows pullback order:
///   pullback(f, compose(a, b)) == pullback(pullback(f, a), b),
/// so as maps of points compose(a, b) is a after b.
class ScaledMonomialMap {
 public:
  ScaledMonomialMap() = default;
  /// Throws std::invalid_argument if a scalar is not a root of unity.
  ScaledMonomialMap(std::vector<ExponentVector> columns, const std::vector<Cyclotomic>& scalars);

  static ScaledMonomialMap identity(std::size_t dim);
  /// x_j -> scalars[j] * x_j
  static ScaledMonomialMap diagonal(const std::vector<Cyclotomic>& scalars);
  /// x_j -> x_{target[j]}
  static ScaledMonomialMap permutation(const std::vector<std::size_t>& target);
  /// Uniform scalar map x_j -> c * x_j.
  static ScaledMonomialMap scalar(std::size_t dim, const Cyclotomic& c);

  std::size_t dim() const { return columns_.size(); }
  Exponent entry(std::size_t i, std::size_t j) const { return columns_[j][i]; }
  const ExponentVector& image(std::size_t j) const { return columns_[j]; }
  Cyclotomic scalar(std::size_t j) const;
  IntMatrix matrix() const;

  /// Scalars as zeta_L^{k_j} with L the lcm of their minimal orders.
  long scalar_order() const { return scalar_order_; }
  const std::vector<long>& scalar_exponents() const { return scalar_exponents_; }

  /// Image exponent A * e and scalar prod_j scalar(j)^{e_j} of the monomial x^e.
  ExponentVector apply_exponent(const ExponentVector& e) const;
  Cyclotomic monomial_scalar(const ExponentVector& e) const;

  bool is_identity() const;
  /// Identity matrix with all scalars equal; returns that scalar.
  std::optional<Cyclotomic> as_scalar() const;
  /// Each variable goes to a scalar multiple of a single variable.
  bool is_generalized_permutation() const;

  /// Canonical ordering key (matrix entries, scalar order, scalar exponents).
  std::vector<Exponent> key() const;

  friend bool operator==(const ScaledMonomialMap& a, const ScaledMonomialMap& b);
  friend ScaledMonomialMap compose(const ScaledMonomialMap& a, const ScaledMonomialMap& b);
  friend ScaledMonomialMap inverse(const ScaledMonomialMap& m);

 private:
  ScaledMonomialMap(std::vector<ExponentVector> columns, long order, std::vector<long> exponents);
  void normalize_scalars();

  std::vector<ExponentVector> columns_;
  long scalar_order_ = 1;
  std::vector<long> scalar_exponents_;
};

LaurentPolynomial pullback(const LaurentPolynomial& f, const ScaledMonomialMap& m);
ScaledMonomialMap compose(const ScaledMonomialMap& a, const ScaledMonomialMap& b);
/// Throws std::domain_error ("not birationally invertible as monomial map")
/// when the matrix is not unimodular.
ScaledMonomialMap inverse(const ScaledMonomialMap& m);
/// m composed with itself k times (k >= 0).
ScaledMonomialMap power(const ScaledMonomialMap& m, long k);

/// Common total degree of all terms; nullopt for mixed degrees or zero.
std::optional<Exponent> is_homogeneous(const LaurentPolynomial& f);

class RestrictionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sets variable i to zero: deletes every term containing it. Throws
/// RestrictionError if some term has a negative exponent in variable i.
LaurentPolynomial substitute_zero(const LaurentPolynomial& f, std::size_t i);

}  // namespace heisrat
