#pragma once

// Text input for integer bivariate polynomials.
//
//   poly   := ws [sign] term (sign term)* ws
//   term   := factor ('*' factor)*
//   factor := (integer | var) ['^' integer]
//
// Integers have unbounded size. There are no parentheses.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "sepform/bivar.hpp"
#include "sepform/errors.hpp"

namespace sepform {

struct Variables {
  std::string x = "x";
  std::string y = "y";
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Variables& vars) : s_(text), v_(vars) {}

  BivarPoly<BigInt> parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) {
        if (first) fail("expected a term");
        break;
      }
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
    }
    return from_terms(terms);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  BigInt parse_integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  std::size_t parse_exponent() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      BigInt e = parse_integer();
      if (e > 100000) {
        pos_ = at;
        fail("exponent too large");
      }
      return e.get_ui();
    }
    return 1;
  }

  void parse_factor(Term& t) {
    skip_ws();
    if (pos_ == s_.size()) fail("expected a factor");
    const char c = s_[pos_];
    if (c == '(' || c == ')') fail("parentheses are not supported");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt n = parse_integer();
      const std::size_t e = parse_exponent();
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), n.get_mpz_t(), e);
      t.coeff *= pw;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      std::size_t* slot = nullptr;
      if (name == v_.x) {
        slot = &t.x_exp;
      } else if (name == v_.y) {
        slot = &t.y_exp;
      } else {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "' (expected " + v_.x + " or " + v_.y + ")");
      }
      *slot += parse_exponent();
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Term parse_term() {
    Term t{BigInt(1), 0, 0};
    parse_factor(t);
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        parse_factor(t);
      } else {
        break;
      }
    }
    return t;
  }

  std::string_view s_;
  const Variables& v_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline BivarPoly<BigInt> parse_poly(std::string_view text, const Variables& vars = {}) {
  return detail::PolyParser(text, vars).parse();
}

}  // namespace sepform
