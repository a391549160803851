#pragma once

// Text grammar for Laurent polynomials.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ['^' ['-'] integer]
//   atom   := integer ['/' integer] | variable | 'w' | 'z{' integer '}' | '(' expr ')'
//
// 'w' is omega = zeta_n of the ambient level n; z{N} is zeta_N. Negative
// powers are allowed on single terms only. Whitespace is ignored.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "heisrat/laurent.hpp"

namespace heisrat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Ordered variable names; index in the list is the variable index.
struct VariableNames {
  std::vector<std::string> names;

  /// prefix + first, ..., prefix + (first + count - 1)
  static VariableNames indexed(const std::string& prefix, std::size_t count, std::size_t first = 0);
  std::size_t size() const { return names.size(); }
};

/// level is the n that binds 'w' to zeta_n.
LaurentPolynomial parse_polynomial(std::string_view text, const VariableNames& vars, long level);

/// Terms in descending grlex order. "0" for the zero polynomial.
std::string render(const LaurentPolynomial& f, const VariableNames& vars);
/// Renders with x0, x1, ... names.
std::string render(const LaurentPolynomial& f);

}  // namespace heisrat
