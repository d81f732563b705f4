#pragma once
// Text form of polynomials: "2*a*d - b*c + 1/3*u^2". Used by the model
// records (sections and substitution maps are stored as strings) and by
// every serialized artifact, so parse(print(p)) == p must hold.

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "okounkov/polynomial.hpp"
#include "okounkov/rational.hpp"

namespace okounkov {

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& src, const std::vector<std::string>& vars)
      : src_(src), vars_(vars) {}

  Polynomial run() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return p;
  }

 private:
  Polynomial expression() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    Polynomial p = term();
    if (neg) p = -p;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return p;
      get();
      Polynomial t = term();
      if (c == '+')
        p += t;
      else
        p -= t;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return p;
      get();
      p = p * factor();
    }
  }

  Polynomial factor() {
    Polynomial p = base();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) fail("exponent expected");
      p = p.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return p;
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Polynomial p = expression();
      skip_ws();
      if (get() != ')') fail("')' expected");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        std::string den = read_digits();
        if (den.empty()) fail("denominator expected");
        return Polynomial::constant(vars_.size(), parse_rational(num + "/" + den));
      }
      return Polynomial::constant(vars_.size(), parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        name += src_[pos_++];
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Polynomial::variable(vars_.size(), i);
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
    return Polynomial();  // unreachable
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      out += src_[pos_++];
    return out;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char get() { return pos_ < src_.size() ? src_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                      msg + " in '" + src_ + "'");
  }

  const std::string& src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return detail::PolyParser(text, vars).run();
}

inline std::string poly_to_string(const Polynomial& p, const std::vector<std::string>& vars) {
  if (p.num_vars() != vars.size()) throw InternalError("poly_to_string: arity mismatch");
  if (p.is_zero()) return "0";
  std::string out;
  // highest term first reads naturally
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

}  // namespace okounkov
