#pragma once

// Polynomials over Q with nonnegative exponents and a Buchberger engine.
//
// Internally every polynomial is kept primitive over Z (fraction-free
// reduction); results are handed back monic over Q.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "heisrat/errors.hpp"

namespace heisrat {

using Monomial = std::vector<int>;

class RationalPolynomial {
 public:
  using TermMap = std::map<Monomial, mpq_class>;

  explicit RationalPolynomial(std::size_t vars = 0) : vars_(vars) {}

  static RationalPolynomial constant(std::size_t vars, const mpq_class& c);
  static RationalPolynomial variable(std::size_t vars, std::size_t i);
  static RationalPolynomial monomial(Monomial e, const mpq_class& c = 1);

  std::size_t vars() const { return vars_; }
  /// Keyed by exponent vector (plain lexicographic key order, not a term order).
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Maximal total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& e, const mpq_class& c);

  RationalPolynomial operator-() const;
  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const mpq_class& c);
  RationalPolynomial pow(unsigned k) const;

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Same polynomial in vars + extra variables (appended last).
  RationalPolynomial extended(std::size_t extra) const;
  /// x_i = 0.
  RationalPolynomial substitute_zero(std::size_t i) const;

 private:
  std::size_t vars_;
  TermMap terms_;
};

class TermOrder {
 public:
  enum class Kind { grevlex, lex };

  /// Variable priority: priority[0] is the largest variable. Empty means
  /// natural order x_0 > x_1 > ....
  explicit TermOrder(Kind kind = Kind::grevlex, std::vector<std::size_t> priority = {});
  static TermOrder grevlex() { return TermOrder(Kind::grevlex); }
  static TermOrder lex() { return TermOrder(Kind::lex); }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  /// Natural order on the first `vars` variables when no priority was given.
  std::vector<std::size_t> priority_for(std::size_t vars) const;

  /// -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

 private:
  Kind kind_;
  std::vector<std::size_t> priority_;
};

/// Terms in descending order under `order`.
std::vector<std::pair<Monomial, mpq_class>> sorted_terms(const RationalPolynomial& f, const TermOrder& order);
Monomial leading_monomial(const RationalPolynomial& f, const TermOrder& order);

/// Descending terms, e.g. "x0^2*x1 - 3/2*x2 + 1".
std::string to_string(const RationalPolynomial& f, const std::vector<std::string>& names,
                      const TermOrder& order = TermOrder());
std::string to_string(const RationalPolynomial& f);

struct GroebnerBudget {
  std::size_t max_pairs = 400;                ///< S-pairs reduced
  std::size_t max_reduction_steps = 50000;    ///< single division steps, summed
  std::size_t max_coefficient_bits = 65536;   ///< largest integer coefficient seen

  static GroebnerBudget small() { return {50, 5000, 4096}; }
  static GroebnerBudget large() { return {5000, 2000000, 1U << 20}; }
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t pairs_coprime = 0;  ///< eliminated by coprime leading monomials
  std::size_t pairs_chain = 0;    ///< eliminated by the chain criterion
  std::size_t reduction_steps = 0;
  std::size_t max_basis_size = 0;
};

/// Budget exhausted; carries the counters reached so far.
class GroebnerBudgetExceeded : public ResourceLimitError {
 public:
  GroebnerBudgetExceeded(const std::string& what, const GroebnerStats& stats)
      : ResourceLimitError(what), stats_(stats) {}
  const GroebnerStats& stats() const { return stats_; }

 private:
  GroebnerStats stats_;
};

struct GroebnerBasis {
  std::vector<RationalPolynomial> polys;  ///< monic, descending leading monomial
  TermOrder order;
  bool reduced = false;
  GroebnerStats stats;

  bool is_unit() const;
};

/// Reduced Groebner basis of the ideal generated by gens. Both postconditions
/// (every S-polynomial of the result and every input reduce to 0) are checked
/// on each run; a failure raises InvariantViolation. Exceeding the budget
/// raises GroebnerBudgetExceeded. The zero ideal yields an empty basis.
GroebnerBasis buchberger(const std::vector<RationalPolynomial>& gens, const TermOrder& order = TermOrder(),
                         const GroebnerBudget& budget = {});

/// Remainder of full multivariate division by the basis polynomials.
RationalPolynomial normal_form(const RationalPolynomial& f, const GroebnerBasis& gb);

}  // namespace heisrat
