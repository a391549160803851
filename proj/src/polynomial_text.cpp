#include "heisrat/polynomial_text.hpp"

#include <cctype>
#include <sstream>

namespace heisrat {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

VariableNames VariableNames::indexed(const std::string& prefix, std::size_t count, std::size_t first) {
  VariableNames v;
  v.names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) v.names.push_back(prefix + std::to_string(first + i));
  return v;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& vars, long level)
      : text_(text), vars_(vars), level_(level) {}

  LaurentPolynomial run() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    auto result = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::size_t dim() const { return vars_.size(); }

  LaurentPolynomial expr() {
    accept('+');
    LaurentPolynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPolynomial term() {
    LaurentPolynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  LaurentPolynomial factor() {
    if (accept('-')) return -factor();
    skip_space();
    const std::size_t start = pos_;
    LaurentPolynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    bool negative = accept('-');
    skip_space();
    const std::size_t exp_pos = pos_;
    const mpz_class k = integer();
    if (!k.fits_slong_p()) throw ParseError("exponent too large", exp_pos);
    long e = k.get_si();
    if (negative) e = -e;
    try {
      return base.pow(e);
    } catch (const std::domain_error&) {
      throw ParseError("negative power of a non-monomial", start);
    }
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  LaurentPolynomial atom() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      if (accept('/')) {
        const std::size_t den_pos = pos_;
        const mpz_class den = integer();
        if (den == 0) throw ParseError("zero denominator", den_pos);
        value /= den;
        value.canonicalize();
      }
      return LaurentPolynomial::constant(dim(), Cyclotomic(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "w") {
        if (level_ < 1) throw ParseError("'w' needs a positive ambient level", start);
        return LaurentPolynomial::constant(dim(), root_of_unity(level_, 1));
      }
      if (name == "z" && !at_end() && text_[pos_] == '{') {
        ++pos_;
        const std::size_t ord_pos = pos_;
        const mpz_class order = integer();
        if (order < 1 || !order.fits_slong_p()) throw ParseError("invalid root order", ord_pos);
        expect('}');
        return LaurentPolynomial::constant(dim(), root_of_unity(order.get_si(), 1));
      }
      for (std::size_t i = 0; i < vars_.names.size(); ++i) {
        if (vars_.names[i] == name) return LaurentPolynomial::variable(dim(), i);
      }
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const VariableNames& vars_;
  long level_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const ExponentVector& e, const VariableNames& vars) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars.names.at(i);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text, const VariableNames& vars, long level) {
  return Parser(text, vars, level).run();
}

std::string render(const LaurentPolynomial& f, const VariableNames& vars) {
  if (vars.size() != f.dim()) throw DimensionError("render: variable name count mismatch");
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = monomial_text(e, vars);
    std::string coeff;
    bool negative = false;
    if (auto q = c.as_rational()) {
      negative = *q < 0;
      const mpq_class mag = abs(*q);
      if (mag != 1 || mono.empty()) coeff = mag.get_str();
    } else {
      coeff = to_string(c);
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coeff;
    if (!coeff.empty() && !mono.empty()) os << "*";
    os << mono;
  }
  return os.str();
}

std::string render(const LaurentPolynomial& f) { return render(f, VariableNames::indexed("x", f.dim())); }

}  // namespace heisrat
