#include "heisrat/intlattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace heisrat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<mpz_class> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += v * b(k, j);
    }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << to_string(m); }

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = a.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
    bool has_pivot = false;
    for (;;) {
      // Minimal absolute value pivot among the remaining rows.
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c) == 0) continue;
        if (best == m || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == m) break;
      has_pivot = true;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clear = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        const mpz_class q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (!has_pivot) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const mpz_class q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (bi == m || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) return {std::move(d), std::move(u), std::move(v)};
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const mpz_class q = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) changed = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const mpz_class q = floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) changed = true;
      }
      if (changed) continue;

      // Enforce the divisibility chain: pull an offending row into row t.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::vector<mpz_class> invariant_factors(const IntMatrix& a) {
  const auto s = snf(a);
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    if (s.D(i, i) != 0) out.push_back(s.D(i, i));
  }
  return out;
}

mpz_class det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix m = a;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) { return abs(det(a)) == 1; }

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse_unimodular: matrix is not square");
  auto [h, u] = hnf(a);
  if (h != IntMatrix::identity(a.rows())) {
    throw std::domain_error("inverse_unimodular: matrix is not unimodular");
  }
  return u;
}

Lattice Lattice::span(const IntMatrix& generators) {
  const auto h = hnf(generators).H;
  std::size_t rank = 0;
  while (rank < h.rows()) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (h(rank, j) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) break;
    ++rank;
  }
  IntMatrix basis(rank, h.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) basis(i, j) = h(i, j);
  return Lattice(generators.cols(), std::move(basis));
}

Lattice Lattice::full(std::size_t dim) { return Lattice(dim, IntMatrix::identity(dim)); }

std::optional<std::vector<mpz_class>> Lattice::coordinates(const std::vector<mpz_class>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("Lattice: vector dimension mismatch");
  std::vector<mpz_class> rest = v;
  std::vector<mpz_class> coords(rank(), mpz_class(0));
  std::size_t col = 0;
  for (std::size_t r = 0; r < rank(); ++r) {
    while (basis_(r, col) == 0) {
      if (rest[col] != 0) return std::nullopt;
      ++col;
    }
    const mpz_class& pivot = basis_(r, col);
    if (rest[col] % pivot != 0) return std::nullopt;
    coords[r] = rest[col] / pivot;
    for (std::size_t j = col; j < dim_; ++j) rest[j] -= coords[r] * basis_(r, j);
  }
  for (const auto& x : rest) {
    if (x != 0) return std::nullopt;
  }
  return coords;
}

bool Lattice::contains(const std::vector<mpz_class>& v) const { return coordinates(v).has_value(); }

bool lattice_equal(const Lattice& a, const Lattice& b) { return a == b; }

std::optional<mpz_class> lattice_index(const Lattice& sub, const Lattice& sup) {
  if (sub.dim() != sup.dim()) throw std::invalid_argument("lattice_index: ambient dimensions differ");
  IntMatrix k(sub.rank(), sup.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto coords = sup.coordinates(sub.basis().row(i));
    if (!coords) throw NotSublatticeError("lattice_index: not a sublattice");
    for (std::size_t j = 0; j < sup.rank(); ++j) k(i, j) = (*coords)[j];
  }
  if (sub.rank() != sup.rank()) return std::nullopt;
  return abs(det(k));
}

Lattice kernel_of_congruence(const IntMatrix& c, const std::vector<long>& moduli) {
  if (c.rows() != moduli.size()) {
    throw std::invalid_argument("kernel_of_congruence: one modulus per row required");
  }
  const std::size_t d = c.cols();
  const std::size_t r = c.rows();
  if (r == 0) return Lattice::full(d);
  // Kernel of [C | diag(m)] projected onto the first d coordinates.
  IntMatrix stacked(r, d + r);
  for (std::size_t j = 0; j < r; ++j) {
    if (moduli[j] < 1) throw std::invalid_argument("kernel_of_congruence: moduli must be positive");
    for (std::size_t i = 0; i < d; ++i) stacked(j, i) = c(j, i);
    stacked(j, d + j) = moduli[j];
  }
  const auto s = snf(stacked);
  std::size_t rank = 0;
  while (rank < r && s.D(rank, rank) != 0) ++rank;
  IntMatrix gens(d + r - rank, d);
  for (std::size_t k = rank; k < d + r; ++k)
    for (std::size_t i = 0; i < d; ++i) gens(k - rank, i) = s.V(i, k);
  return Lattice::span(gens);
}

}  // namespace heisrat
