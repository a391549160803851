#pragma once

// Integer matrices, Hermite/Smith normal forms and integer lattices.
//
// Canonical form: row-style Hermite normal form. Nonzero rows come first; the
// pivot (first nonzero entry) of each row is strictly right of the pivot of
// the row above it; pivots are positive; every entry above a pivot lies in
// [0, pivot). Zero rows are kept at the bottom of hnf() output and dropped
// from Lattice bases. Two lattices are equal iff their HNF bases are equal
// entry by entry.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace heisrat {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<mpz_class> row(std::size_t r) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
/// Rows as "[[a,b],[c,d]]".
std::string to_string(const IntMatrix& m);

struct HnfResult {
  IntMatrix H;  ///< H = U * A, in canonical row HNF
  IntMatrix U;  ///< unimodular
};
HnfResult hnf(const IntMatrix& a);

struct SnfResult {
  IntMatrix D;  ///< D = U * A * V, diagonal, D(i,i) | D(i+1,i+1), nonnegative
  IntMatrix U;
  IntMatrix V;
};
SnfResult snf(const IntMatrix& a);

/// Nonzero diagonal of an SNF, in order.
std::vector<mpz_class> invariant_factors(const IntMatrix& a);

mpz_class det(const IntMatrix& a);  // throws std::invalid_argument if not square
bool is_unimodular(const IntMatrix& a);
/// Exact inverse of a unimodular matrix; throws std::domain_error otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

class NotSublatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row lattice in Z^d with a canonical HNF basis.
class Lattice {
 public:
  /// Row span of the given generators.
  static Lattice span(const IntMatrix& generators);
  static Lattice full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const std::vector<mpz_class>& v) const;
  /// Integer coordinates of v in the HNF basis, if v lies in the lattice.
  std::optional<std::vector<mpz_class>> coordinates(const std::vector<mpz_class>& v) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice(std::size_t dim, IntMatrix basis) : dim_(dim), basis_(std::move(basis)) {}

  std::size_t dim_ = 0;
  IntMatrix basis_;
};

bool lattice_equal(const Lattice& a, const Lattice& b);

/// |sup / sub|. Throws NotSublatticeError when sub is not contained in sup;
/// returns nullopt (infinite index) when the ranks differ.
std::optional<mpz_class> lattice_index(const Lattice& sub, const Lattice& sup);

/// { e in Z^d : sum_i C(j,i) e_i == 0 (mod moduli[j]) for every row j }.
Lattice kernel_of_congruence(const IntMatrix& c, const std::vector<long>& moduli);

}  // namespace heisrat
