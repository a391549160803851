#include "heisrat/torus.hpp"

#include <numeric>

#include "heisrat/errors.hpp"

namespace heisrat {

namespace {

long mod(long a, long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::vector<mpz_class> to_mpz(const ExponentVector& e) {
  std::vector<mpz_class> out;
  out.reserve(e.size());
  for (Exponent x : e) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace

DiagonalAction::DiagonalAction(std::size_t dim, std::vector<DiagonalGenerator> generators)
    : dim_(dim), generators_(std::move(generators)) {
  for (auto& g : generators_) {
    if (g.order < 1) throw std::invalid_argument("DiagonalAction: generator order must be positive");
    if (g.characters.size() != dim_) throw DimensionError("DiagonalAction: character vector length");
    for (auto& c : g.characters) c = mod(c, g.order);
  }
}

DiagonalAction DiagonalAction::from_map(const ScaledMonomialMap& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m.entry(i, j) != (i == j ? 1 : 0)) {
        throw std::invalid_argument("DiagonalAction::from_map: map is not diagonal");
      }
    }
  return DiagonalAction(m.dim(), {DiagonalGenerator{m.scalar_order(), m.scalar_exponents()}});
}

DiagonalAction DiagonalAction::from_maps(const std::vector<ScaledMonomialMap>& maps) {
  if (maps.empty()) throw std::invalid_argument("DiagonalAction::from_maps: no generators");
  std::vector<DiagonalGenerator> gens;
  for (const auto& m : maps) {
    auto single = from_map(m);
    gens.push_back(single.generators().front());
  }
  return DiagonalAction(maps.front().dim(), std::move(gens));
}

IntMatrix DiagonalAction::character_matrix() const {
  IntMatrix c(generators_.size(), dim_);
  for (std::size_t j = 0; j < generators_.size(); ++j)
    for (std::size_t i = 0; i < dim_; ++i) c(j, i) = generators_[j].characters[i];
  return c;
}

std::vector<long> DiagonalAction::moduli() const {
  std::vector<long> m;
  for (const auto& g : generators_) m.push_back(g.order);
  return m;
}

ScaledMonomialMap DiagonalAction::generator_map(std::size_t j) const {
  const auto& g = generators_.at(j);
  std::vector<Cyclotomic> scalars;
  for (long c : g.characters) scalars.push_back(root_of_unity(g.order, c));
  return ScaledMonomialMap::diagonal(scalars);
}

Lattice invariant_character_lattice(const DiagonalAction& a) {
  return kernel_of_congruence(a.character_matrix(), a.moduli());
}

mpz_class character_image_order(const DiagonalAction& a) {
  const std::size_t r = a.generators().size();
  const std::size_t d = a.dim();
  if (r == 0) return 1;
  IntMatrix stacked(r, d + r);
  mpz_class total = 1;
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < d; ++i) stacked(j, i) = a.generators()[j].characters[i];
    stacked(j, d + j) = a.generators()[j].order;
    total *= a.generators()[j].order;
  }
  mpz_class cokernel = 1;
  for (const auto& f : invariant_factors(stacked)) cokernel *= f;
  return total / cokernel;
}

InvariantGenerators fischer_generators(const DiagonalAction& a) {
  return {invariant_character_lattice(a).basis()};
}

GenerationVerdict verify_generating_set(const DiagonalAction& a, const IntMatrix& candidate) {
  if (candidate.cols() != a.dim()) throw DimensionError("verify_generating_set: candidate dimension");
  GenerationVerdict v;
  v.invariant = invariant_character_lattice(a);
  v.candidate = Lattice::span(candidate);
  for (std::size_t r = 0; r < candidate.rows(); ++r) {
    if (!v.invariant.contains(candidate.row(r))) {
      v.kind = GenerationVerdict::Kind::not_invariant;
      v.row = r;
      return v;
    }
  }
  if (v.candidate == v.invariant) {
    v.kind = GenerationVerdict::Kind::generates;
    v.index = 1;
    return v;
  }
  v.kind = GenerationVerdict::Kind::proper_sublattice;
  v.index = lattice_index(v.candidate, v.invariant);
  return v;
}

ScaledMonomialMap induced_action(const ScaledMonomialMap& m, const IntMatrix& basis) {
  if (basis.cols() != m.dim()) throw DimensionError("induced_action: basis dimension");
  const std::size_t r = basis.rows();
  const IntMatrix u = hnf(basis).U;
  const Lattice lattice = Lattice::span(basis);
  if (lattice.rank() != r) throw std::invalid_argument("induced_action: basis rows are dependent");
  std::vector<ExponentVector> cols(r, ExponentVector(r, 0));
  std::vector<Cyclotomic> scalars;
  for (std::size_t row = 0; row < r; ++row) {
    ExponentVector b(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) b[j] = basis(row, j).get_si();
    const auto image = m.apply_exponent(b);
    auto h_coords = lattice.coordinates(to_mpz(image));
    if (!h_coords) throw NotStableError("induced_action: sublattice not stable");
    // image = h_coords * H = (h_coords * U) * basis
    for (std::size_t s = 0; s < r; ++s) {
      mpz_class acc = 0;
      for (std::size_t k = 0; k < r; ++k) acc += (*h_coords)[k] * u(k, s);
      cols[row][s] = acc.get_si();
    }
    scalars.push_back(m.monomial_scalar(b));
  }
  return ScaledMonomialMap(std::move(cols), scalars);
}

CycMatrix CycMatrix::identity(std::size_t n) {
  CycMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
  return m;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CycMatrix CycMatrix::inverse() const {
  CycMatrix a = *this;
  CycMatrix inv = identity(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && a(p, c).is_zero()) ++p;
    if (p == n_) throw DomainError("CycMatrix::inverse: singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Cyclotomic scale = a(c, c).inv();
    for (std::size_t j = 0; j < n_; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Cyclotomic f = a(i, c);
      for (std::size_t j = 0; j < n_; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool CycMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  return true;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("CycMatrix: size mismatch");
  CycMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

CyclicDiagonalization diagonalize_cyclic_permutation(long n) {
  if (n < 1) throw std::invalid_argument("diagonalize_cyclic_permutation: n must be positive");
  const std::size_t sz = static_cast<std::size_t>(n);
  CycMatrix change(sz), shift(sz);
  for (std::size_t j = 0; j < sz; ++j)
    for (std::size_t i = 0; i < sz; ++i) change(j, i) = root_of_unity(n, static_cast<long>(i * j));
  for (std::size_t i = 0; i < sz; ++i) shift((i + 1) % sz, i) = Cyclotomic(1);
  const CycMatrix conjugated = change * shift.transpose() * change.inverse();
  std::vector<long> chars(sz);
  for (std::size_t j = 0; j < sz; ++j) {
    chars[j] = mod(-static_cast<long>(j), n);
    if (!(conjugated(j, j) == root_of_unity(n, chars[j]))) {
      throw InvariantViolation("diagonalize_cyclic_permutation: unexpected eigenvalue");
    }
  }
  if (!conjugated.is_diagonal()) {
    throw InvariantViolation("diagonalize_cyclic_permutation: conjugate is not diagonal");
  }
  return {LinearChange{change}, shift, conjugated,
          DiagonalAction(sz, {DiagonalGenerator{n, std::move(chars)}})};
}

}  // namespace heisrat
