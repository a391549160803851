#pragma once

// Explicit rationalization tower for the field of H_n-invariants of
// C(x_0, ..., x_{n-1}), recorded step by step as a RationalityCertificate:
//
//   lambda  y_0 = x_0^n, y_i = x_i / x_{i-1}            C(x)^<lambda> = C(y)
//   tail    restrict to y_1, ..., y_{n-1}                 (cited reduction)
//   xi      z_1 = y_1^n, z_i = y_i / y_{i-1}              C(y_tail)^<xi> = C(z)
//   w       w_1 = z_2, w_{i+1} = eta(w_i)                 C(z) = C(w)
//   linear  adjoin u, eta(u) = u w_1; W_i = u w_1...w_{i-1} is permuted
//           cyclically; Fourier coordinates diagonalize    (cited descent)
//   fischer invariant monomials of the diagonal action     (cited theorem)
//
// Every step either carries machine-checked witnesses (Verified) or names the
// external result it relies on (Cited) in addition to its checks.

#include <optional>
#include <string>
#include <vector>

#include "heisrat/check.hpp"
#include "heisrat/heisenberg.hpp"
#include "heisrat/intlattice.hpp"
#include "heisrat/laurent.hpp"
#include "heisrat/torus.hpp"
#include "json.hpp"

namespace heisrat {

inline constexpr const char* kCiteTailReduction = "Chu-Kang, Theorem 4.1";
inline constexpr const char* kCiteLinearization = "Chu-Kang, p. 687";
inline constexpr const char* kCiteFischer = "Fischer";
inline constexpr const char* kCiteTrivialCase = "trivial case n <= 3";
inline constexpr int kCertificateVersion = 1;

enum class StepStatus { verified, cited, failed };
const char* to_string(StepStatus s);

struct TowerStep {
  std::string name;
  std::string kind;
  StepStatus status = StepStatus::verified;
  std::optional<std::string> citation;
  std::vector<Check> checks;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  std::vector<std::string> notes;

  bool checks_passed() const;
};

struct RationalityCertificate {
  long n = 0;
  std::vector<TowerStep> steps;
  std::optional<std::string> trivial_case_citation;
  std::vector<std::string> discrepancies;
  std::optional<std::string> failed_step;  ///< verdict is Failed iff set

  bool all_verified_or_cited() const { return !failed_step.has_value(); }
  std::vector<std::string> citations() const;
};

nlohmann::ordered_json to_json(const TowerStep& step);
nlohmann::ordered_json to_json(const RationalityCertificate& cert);

/// Runs the tower one step at a time; each step consumes the residual actions
/// recorded by the previous one. Calling a step out of order throws
/// std::logic_error.
class TowerBuilder {
 public:
  explicit TowerBuilder(long n);

  long n() const { return n_; }
  const GroupAction& group() const { return group_; }

  TowerStep lambda_step();
  TowerStep tail_reduction();
  TowerStep xi_step();
  TowerStep w_step();
  TowerStep linearize_step();
  TowerStep fischer_step();

  /// Coordinate rows of each stage (rows are exponent vectors in the
  /// coordinates of the previous stage).
  const IntMatrix& y_rows() const { return y_rows_; }
  const IntMatrix& z_rows() const { return z_rows_; }
  const IntMatrix& w_rows() const { return w_rows_; }
  const IntMatrix& big_w_rows() const { return big_w_rows_; }

  /// Residual actions recorded at each stage.
  const ScaledMonomialMap& xi_on_y() const { return xi_y_; }
  const ScaledMonomialMap& eta_on_y() const { return eta_y_; }
  const ScaledMonomialMap& xi_on_tail() const { return xi_tail_; }
  const ScaledMonomialMap& eta_on_tail() const { return eta_tail_; }
  const ScaledMonomialMap& eta_on_z() const { return eta_z_; }
  const ScaledMonomialMap& eta_on_w() const { return eta_w_; }
  const ScaledMonomialMap& eta_extended() const { return eta_ext_; }
  const ScaledMonomialMap& eta_on_big_w() const { return eta_big_w_; }
  const std::optional<DiagonalAction>& terminal_action() const { return terminal_; }
  const std::vector<std::string>& discrepancies() const { return discrepancies_; }

  /// w-coordinates written directly as exponent rows in x_0..x_{n-1}.
  IntMatrix w_rows_in_x() const;

 private:
  void require(int stage, const char* step) const;

  long n_;
  GroupAction group_;
  int stage_ = 0;
  IntMatrix y_rows_, z_rows_, w_rows_, big_w_rows_;
  ScaledMonomialMap xi_y_, eta_y_, xi_tail_, eta_tail_, eta_z_, eta_w_, eta_ext_, eta_big_w_;
  std::optional<DiagonalAction> terminal_;
  std::vector<std::string> discrepancies_;
};

/// Exact order of a map (smallest k >= 1 with m^k = id), or nullopt if it
/// exceeds `limit`.
std::optional<long> map_order(const ScaledMonomialMap& m, long limit);

// Single-step entry points; each runs the prerequisite steps first.
TowerStep lambda_step(long n);
TowerStep tail_reduction(long n);
TowerStep xi_step(long n);
TowerStep w_step(long n);
TowerStep linearize_step(long n);
TowerStep fischer_step(long n);

RationalityCertificate build_certificate(long n);

struct ProjectiveTowerReport {
  long n = 0;
  std::vector<Check> checks;
  std::vector<long> xi_characters;  ///< omega powers on x_i / x_0, i = 1..n-1
  mpz_class xi_invariant_index;
  std::optional<long> eta_order;
  IntMatrix invariant_basis;  ///< in the x_i / x_0 coordinates

  bool passed() const;
};

/// Field-level shadow of the factorization P^{n-1} -> P^{n-1}/<xi> -> X on the
/// degree-0 character lattice.
ProjectiveTowerReport projective_tower(long n);
nlohmann::ordered_json to_json(const ProjectiveTowerReport& report);

}  // namespace heisrat
