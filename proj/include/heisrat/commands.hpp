#pragma once

// The verification commands behind the heisrat executable. Each takes a
// validated RunConfig and returns a Report; exceptions are left to the caller
// (ParseError and std::invalid_argument map to exit code 2).

#include <cstddef>
#include <optional>
#include <string>

#include "heisrat/groebner.hpp"
#include "heisrat/report.hpp"

namespace heisrat {

enum class OutputFormat { human, structured };

struct Budget {
  std::string name = "default";
  GroebnerBudget groebner;
  std::size_t max_group_order = 512;  ///< enumeration cap on n^3
  std::size_t max_monomials = 20000;  ///< brute-force invariant dimension cap

  /// "small", "default", "large", or a positive integer S-pair limit (other
  /// limits at their defaults). Throws std::invalid_argument otherwise.
  static Budget parse(const std::string& text);
};

struct RunConfig {
  std::string command;
  long n = 3;
  std::optional<long> max_deg;  ///< molien: defaults to 3n
  Budget budget;
  OutputFormat format = OutputFormat::human;
  std::optional<std::string> out;
  std::string method = "groebner";
  std::string expr;
  bool timing = false;

  /// Throws std::invalid_argument on n < 1, negative degree, unknown method.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

Report cmd_group_check(const RunConfig& c);
Report cmd_invariants(const RunConfig& c);
Report cmd_molien(const RunConfig& c);
Report cmd_bpf(const RunConfig& c);
Report cmd_rationalize(const RunConfig& c);
Report cmd_hesse(const RunConfig& c);
Report cmd_parse_eval(const RunConfig& c);

/// Dispatch on c.command.
Report run_command(const RunConfig& c);

}  // namespace heisrat
