#pragma once

// Canonical text form for polynomials:
//
//   z00^3 - 2*z10*z11*z21 + 3/2*x0
//
// Terms are printed in descending monomial order, with explicit `*` and `^`.
// F_p coefficients use the symmetric representative.  The parser accepts that
// form plus parentheses, unary minus and division by constants, so
// parse(print(f)) == f.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "segre/errors.hpp"
#include "segre/polynomial.hpp"

namespace segre {

template <CoefficientField K>
std::string format_monomial(const Monomial& m, const Ring<K>& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variable_name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

template <CoefficientField K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = f.field().format(t.coefficient);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    std::string body;
    if (t.monomial.is_one())
      body = c;
    else
      body = (c == "1" ? std::string() : c + "*") + format_monomial(t.monomial, *f.ring());
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

template <CoefficientField K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& f) {
  return os << to_string(f);
}

namespace detail {

struct Token {
  enum class Kind { number, identifier, symbol, end } kind;
  std::string text;
  std::size_t position;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({Token::Kind::number, std::string(text.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size()) {
        if (text[j] == '{' && j > i && text[j - 1] == '_') {
          auto close = text.find('}', j);
          if (close == std::string_view::npos) throw ParseError("unterminated '{' in identifier at column " + std::to_string(j));
          j = close + 1;
        } else if (ident_char(text[j])) {
          ++j;
        } else {
          break;
        }
      }
      tokens.push_back({Token::Kind::identifier, std::string(text.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      tokens.push_back({Token::Kind::symbol, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' at column " + std::to_string(i));
    }
  }
  tokens.push_back({Token::Kind::end, "", text.size()});
  return tokens;
}

template <CoefficientField K>
class Parser {
 public:
  Parser(const RingPtr<K>& ring, std::string_view text) : ring_(ring), tokens_(tokenize(text)) {}

  Polynomial<K> parse() {
    auto p = expression();
    if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(const char* symbol) {
    if (peek().kind == Token::Kind::symbol && peek().text == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at column " + std::to_string(peek().position));
  }

  Polynomial<K> expression() {
    Polynomial<K> result(ring_);
    bool negate = false;
    if (accept("-"))
      negate = true;
    else
      accept("+");
    Polynomial<K> t = term();
    result = negate ? -t : t;
    while (true) {
      if (accept("+"))
        result = result + term();
      else if (accept("-"))
        result = result - term();
      else
        return result;
    }
  }

  Polynomial<K> term() {
    Polynomial<K> result = power();
    while (true) {
      if (accept("*")) {
        result = result * power();
      } else if (accept("/")) {
        auto divisor = power();
        if (!divisor.is_constant() || divisor.is_zero()) fail("division only by nonzero constants");
        result = result.scale(ring_->field().inv(divisor.leading_coefficient()));
      } else {
        return result;
      }
    }
  }

  Polynomial<K> power() {
    Polynomial<K> base = primary();
    if (accept("^")) {
      if (peek().kind != Token::Kind::number) fail("exponent must be a nonnegative integer");
      const auto& digits = peek().text;
      if (digits.size() > 5) fail("exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(digits));
      ++pos_;
      base = base.pow(e);
    }
    return base;
  }

  Polynomial<K> primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::number: {
        ++pos_;
        return Polynomial<K>::constant(ring_, ring_->field().parse(tok.text));
      }
      case Token::Kind::identifier: {
        auto idx = ring_->index_of(tok.text);
        if (!idx) fail("unknown variable '" + tok.text + "'");
        ++pos_;
        return Polynomial<K>::variable(ring_, *idx);
      }
      case Token::Kind::symbol:
        if (accept("(")) {
          auto inner = expression();
          if (!accept(")")) fail("expected ')'");
          return inner;
        }
        if (accept("-")) return -primary();
        fail("unexpected '" + tok.text + "'");
      case Token::Kind::end:
        fail("unexpected end of input");
    }
    fail("unreachable");
  }

  RingPtr<K> ring_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientField K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, std::string_view text) {
  return detail::Parser<K>(ring, text).parse();
}

/// Variable-like identifiers in order of first appearance.
inline std::vector<std::string> collect_identifiers(std::string_view text) {
  std::vector<std::string> names;
  for (const auto& tok : detail::tokenize(text))
    if (tok.kind == detail::Token::Kind::identifier && std::find(names.begin(), names.end(), tok.text) == names.end())
      names.push_back(tok.text);
  return names;
}

/// Orders names so that digit runs compare numerically: x2 < x10, z01 < z10.
inline bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && digit(a[i2])) ++i2;
      while (j2 < b.size() && digit(b[j2])) ++j2;
      auto da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
      while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
      while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      // equal values: shorter raw run (fewer leading zeros) first
      if (i2 - i != j2 - j) return i2 - i < j2 - j;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

/// Reads a polynomial list: one per line, `#` starts a comment, blank lines ignored.
inline std::vector<std::string> read_polynomial_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace segre
