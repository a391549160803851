#pragma once

// Diagonal abelian actions on tori and their invariant character lattices.
//
// A Laurent monomial x^e is fixed by a diagonal action iff e lies in the
// kernel of the character map; for such actions the invariant subfield is
// generated by the monomials of a lattice basis (Fischer), so equality of
// invariant fields reduces to equality of lattices.

#include <optional>
#include <stdexcept>
#include <vector>

#include "heisrat/cyclotomic.hpp"
#include "heisrat/intlattice.hpp"
#include "heisrat/laurent.hpp"

namespace heisrat {

/// Generator of order `order` scaling variable i by zeta_order^{characters[i]}.
struct DiagonalGenerator {
  long order = 1;
  std::vector<long> characters;
};

class DiagonalAction {
 public:
  DiagonalAction(std::size_t dim, std::vector<DiagonalGenerator> generators);
  /// Reads a diagonal ScaledMonomialMap as a single generator. Throws
  /// std::invalid_argument for a non-diagonal matrix.
  static DiagonalAction from_map(const ScaledMonomialMap& m);
  static DiagonalAction from_maps(const std::vector<ScaledMonomialMap>& maps);

  std::size_t dim() const { return dim_; }
  const std::vector<DiagonalGenerator>& generators() const { return generators_; }
  IntMatrix character_matrix() const;
  std::vector<long> moduli() const;
  ScaledMonomialMap generator_map(std::size_t j) const;

 private:
  std::size_t dim_;
  std::vector<DiagonalGenerator> generators_;
};

Lattice invariant_character_lattice(const DiagonalAction& a);

/// Order of the image of the acting group in the character torus, computed
/// from the invariant factors of [C | diag(m)] (independent of the kernel).
mpz_class character_image_order(const DiagonalAction& a);

/// HNF basis of the invariant lattice; each row is an invariant monomial.
struct InvariantGenerators {
  IntMatrix rows;
};
InvariantGenerators fischer_generators(const DiagonalAction& a);

struct GenerationVerdict {
  enum class Kind { generates, proper_sublattice, not_invariant };
  Kind kind = Kind::generates;
  /// proper_sublattice: index of the candidate span, nullopt when infinite.
  std::optional<mpz_class> index;
  /// not_invariant: first offending row.
  std::optional<std::size_t> row;
  Lattice invariant = Lattice::full(0);
  Lattice candidate = Lattice::full(0);
};

GenerationVerdict verify_generating_set(const DiagonalAction& a, const IntMatrix& candidate);

class NotStableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rewrites m in the coordinates y_r = x^{basis row r}: the result pulls y_r
/// back to the monomial in the y's representing pullback(y_r, m). Basis rows
/// must be linearly independent. Throws NotStableError when the row lattice is
/// not preserved.
ScaledMonomialMap induced_action(const ScaledMonomialMap& m, const IntMatrix& basis);

/// Exact square matrix over Cyclotomic.
class CycMatrix {
 public:
  CycMatrix() = default;
  explicit CycMatrix(std::size_t n) : n_(n), data_(n * n, Cyclotomic(0)) {}
  static CycMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Cyclotomic& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  CycMatrix transpose() const;
  /// Gauss-Jordan inverse; throws DomainError when singular.
  CycMatrix inverse() const;
  bool is_diagonal() const;

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Cyclotomic> data_;
};

/// Invertible linear coordinate change: new_j = sum_i matrix(j, i) old_i.
struct LinearChange {
  CycMatrix matrix;
};

struct CyclicDiagonalization {
  LinearChange change;    ///< u_j = sum_i zeta_n^{ij} W_{i+1}
  CycMatrix shift;        ///< column i is the image of W_{i+1}
  CycMatrix conjugated;   ///< change * shift^T * change^{-1}, diagonal
  DiagonalAction result;  ///< u_j -> zeta_n^{-j} u_j
};

/// Fourier diagonalization of the cyclic shift W_1 -> W_2 -> ... -> W_n -> W_1.
/// The conjugation identity is checked exactly; failure raises
/// InvariantViolation.
CyclicDiagonalization diagonalize_cyclic_permutation(long n);

}  // namespace heisrat
