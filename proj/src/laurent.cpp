#include "heisrat/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace heisrat {

namespace {

long mod(long a, long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

long mod_product(Exponent a, long b, long m) {
  // Exponents and scalar orders stay far below overflow at desk scale, but the
  // reduction keeps intermediate values bounded for long iterations.
  return mod(static_cast<long>(mod(static_cast<long>(a), m)) * mod(b, m), m);
}

}  // namespace

Exponent total_degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), Exponent{0}); }

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const Exponent da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t dim, const Cyclotomic& c) {
  LaurentPolynomial p(dim);
  p.add_term(ExponentVector(dim, 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(ExponentVector e, const Cyclotomic& c) {
  LaurentPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t dim, std::size_t i) {
  if (i >= dim) throw DimensionError("LaurentPolynomial::variable: index out of range");
  ExponentVector e(dim, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Cyclotomic& c) {
  if (e.size() != dim_) throw DimensionError("LaurentPolynomial: exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LaurentPolynomial::check_dim(const LaurentPolynomial& other) const {
  if (other.dim_ != dim_) throw DimensionError("LaurentPolynomial: ambient dimensions differ");
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  check_dim(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  check_dim(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  check_dim(other);
  LaurentPolynomial out(dim_);
  ExponentVector e(dim_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < dim_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  *this = std::move(out);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

LaurentPolynomial LaurentPolynomial::pow(long k) const {
  if (k < 0) {
    if (terms_.size() != 1) {
      throw std::domain_error("LaurentPolynomial::pow: negative power of a non-monomial");
    }
    const auto& [e, c] = *terms_.begin();
    ExponentVector neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    return monomial(std::move(neg), c.inv()).pow(-k);
  }
  LaurentPolynomial result = constant(dim_, Cyclotomic(1));
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

ScaledMonomialMap::ScaledMonomialMap(std::vector<ExponentVector> columns,
                                     const std::vector<Cyclotomic>& scalars)
    : columns_(std::move(columns)) {
  const std::size_t d = columns_.size();
  if (scalars.size() != d) throw DimensionError("ScaledMonomialMap: need one scalar per variable");
  for (const auto& col : columns_) {
    if (col.size() != d) throw DimensionError("ScaledMonomialMap: matrix must be square");
  }
  std::vector<RootOfUnity> roots;
  roots.reserve(d);
  long order = 1;
  for (const auto& s : scalars) {
    auto r = try_as_root_of_unity(s);
    if (!r) throw std::invalid_argument("ScaledMonomialMap: scalar is not a root of unity");
    order = std::lcm(order, r->order);
    roots.push_back(*r);
  }
  scalar_order_ = order;
  scalar_exponents_.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    scalar_exponents_[j] = mod(roots[j].exponent * (order / roots[j].order), order);
  }
  normalize_scalars();
}

ScaledMonomialMap::ScaledMonomialMap(std::vector<ExponentVector> columns, long order,
                                     std::vector<long> exponents)
    : columns_(std::move(columns)), scalar_order_(order), scalar_exponents_(std::move(exponents)) {
  for (auto& k : scalar_exponents_) k = mod(k, scalar_order_);
  normalize_scalars();
}

void ScaledMonomialMap::normalize_scalars() {
  long g = scalar_order_;
  for (long k : scalar_exponents_) g = std::gcd(g, k);
  if (g > 1) {
    scalar_order_ /= g;
    for (auto& k : scalar_exponents_) k /= g;
  }
}

ScaledMonomialMap ScaledMonomialMap::identity(std::size_t dim) {
  std::vector<ExponentVector> cols(dim, ExponentVector(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) cols[j][j] = 1;
  return ScaledMonomialMap(std::move(cols), 1, std::vector<long>(dim, 0));
}

ScaledMonomialMap ScaledMonomialMap::diagonal(const std::vector<Cyclotomic>& scalars) {
  const std::size_t dim = scalars.size();
  std::vector<ExponentVector> cols(dim, ExponentVector(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) cols[j][j] = 1;
  return ScaledMonomialMap(std::move(cols), scalars);
}

ScaledMonomialMap ScaledMonomialMap::permutation(const std::vector<std::size_t>& target) {
  const std::size_t dim = target.size();
  std::vector<ExponentVector> cols(dim, ExponentVector(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    if (target[j] >= dim) throw DimensionError("ScaledMonomialMap::permutation: index out of range");
    cols[j][target[j]] = 1;
  }
  return ScaledMonomialMap(std::move(cols), 1, std::vector<long>(dim, 0));
}

ScaledMonomialMap ScaledMonomialMap::scalar(std::size_t dim, const Cyclotomic& c) {
  return diagonal(std::vector<Cyclotomic>(dim, c));
}

Cyclotomic ScaledMonomialMap::scalar(std::size_t j) const {
  return root_of_unity(scalar_order_, scalar_exponents_.at(j));
}

IntMatrix ScaledMonomialMap::matrix() const {
  IntMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) m(i, j) = static_cast<long>(entry(i, j));
  return m;
}

ExponentVector ScaledMonomialMap::apply_exponent(const ExponentVector& e) const {
  if (e.size() != dim()) throw DimensionError("ScaledMonomialMap: dimension mismatch");
  ExponentVector out(dim(), 0);
  for (std::size_t j = 0; j < dim(); ++j) {
    if (e[j] == 0) continue;
    for (std::size_t i = 0; i < dim(); ++i) out[i] += columns_[j][i] * e[j];
  }
  return out;
}

Cyclotomic ScaledMonomialMap::monomial_scalar(const ExponentVector& e) const {
  if (e.size() != dim()) throw DimensionError("ScaledMonomialMap: dimension mismatch");
  long k = 0;
  for (std::size_t j = 0; j < dim(); ++j) {
    k = mod(k + mod_product(e[j], scalar_exponents_[j], scalar_order_), scalar_order_);
  }
  return root_of_unity(scalar_order_, k);
}

bool ScaledMonomialMap::is_identity() const { return *this == identity(dim()); }

std::optional<Cyclotomic> ScaledMonomialMap::as_scalar() const {
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) {
      if (columns_[j][i] != (i == j ? 1 : 0)) return std::nullopt;
    }
  for (long k : scalar_exponents_) {
    if (k != scalar_exponents_.front()) return std::nullopt;
  }
  return dim() == 0 ? Cyclotomic(1) : scalar(0);
}

bool ScaledMonomialMap::is_generalized_permutation() const {
  std::vector<bool> hit(dim(), false);
  for (const auto& col : columns_) {
    std::size_t ones = 0, nonzero = 0, where = 0;
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] != 0) ++nonzero;
      if (col[i] == 1) {
        ++ones;
        where = i;
      }
    }
    if (nonzero != 1 || ones != 1 || hit[where]) return false;
    hit[where] = true;
  }
  return true;
}

std::vector<Exponent> ScaledMonomialMap::key() const {
  std::vector<Exponent> k;
  k.reserve(dim() * dim() + dim() + 1);
  for (const auto& col : columns_) k.insert(k.end(), col.begin(), col.end());
  k.push_back(scalar_order_);
  k.insert(k.end(), scalar_exponents_.begin(), scalar_exponents_.end());
  return k;
}

bool operator==(const ScaledMonomialMap& a, const ScaledMonomialMap& b) {
  return a.columns_ == b.columns_ && a.scalar_order_ == b.scalar_order_ &&
         a.scalar_exponents_ == b.scalar_exponents_;
}

LaurentPolynomial pullback(const LaurentPolynomial& f, const ScaledMonomialMap& m) {
  if (f.dim() != m.dim()) throw DimensionError("pullback: dimension mismatch");
  LaurentPolynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) out.add_term(m.apply_exponent(e), c * m.monomial_scalar(e));
  return out;
}

ScaledMonomialMap compose(const ScaledMonomialMap& a, const ScaledMonomialMap& b) {
  if (a.dim() != b.dim()) throw DimensionError("compose: dimension mismatch");
  const std::size_t d = a.dim();
  const long order = std::lcm(a.scalar_order(), b.scalar_order());
  const long sa = order / a.scalar_order(), sb = order / b.scalar_order();
  std::vector<ExponentVector> cols(d);
  std::vector<long> exps(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    cols[j] = b.apply_exponent(a.image(j));
    long k = a.scalar_exponents()[j] * sa;
    for (std::size_t i = 0; i < d; ++i) {
      k = mod(k + mod_product(a.entry(i, j), b.scalar_exponents()[i] * sb, order), order);
    }
    exps[j] = k;
  }
  return ScaledMonomialMap(std::move(cols), order, std::move(exps));
}

ScaledMonomialMap inverse(const ScaledMonomialMap& m) {
  const std::size_t d = m.dim();
  IntMatrix inv;
  try {
    inv = inverse_unimodular(m.matrix());
  } catch (const std::domain_error&) {
    throw std::domain_error("inverse: not birationally invertible as monomial map");
  }
  std::vector<ExponentVector> cols(d, ExponentVector(d, 0));
  std::vector<long> exps(d, 0);
  const long order = m.scalar_order();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) cols[j][i] = inv(i, j).get_si();
  for (std::size_t i = 0; i < d; ++i) {
    long k = 0;
    for (std::size_t j = 0; j < d; ++j) {
      k = mod(k - mod_product(cols[i][j], m.scalar_exponents()[j], order), order);
    }
    exps[i] = k;
  }
  return ScaledMonomialMap(std::move(cols), order, std::move(exps));
}

ScaledMonomialMap power(const ScaledMonomialMap& m, long k) {
  if (k < 0) return power(inverse(m), -k);
  ScaledMonomialMap result = ScaledMonomialMap::identity(m.dim());
  ScaledMonomialMap base = m;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

std::optional<Exponent> is_homogeneous(const LaurentPolynomial& f) {
  if (f.is_zero()) return std::nullopt;
  const Exponent deg = total_degree(f.terms().begin()->first);
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) != deg) return std::nullopt;
  }
  return deg;
}

LaurentPolynomial substitute_zero(const LaurentPolynomial& f, std::size_t i) {
  if (i >= f.dim()) throw DimensionError("substitute_zero: variable index out of range");
  LaurentPolynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] < 0) throw RestrictionError("substitute_zero: restriction undefined for Laurent pole");
    if (e[i] == 0) out.add_term(e, c);
  }
  return out;
}

}  // namespace heisrat
