#pragma once
// Sparse multivariate polynomials over exact rationals.
//
// Terms are kept in a std::map keyed by exponent vector, so iteration is
// always in ascending lexicographic order (leftmost exponent most
// significant). That single ordering convention backs every "min" taken
// in this library: lex-valuations read the first stored term.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "okounkov/rational.hpp"

namespace okounkov {

using Exponents = std::vector<unsigned>;

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DomainError("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(e, Rational(1));
  }

  static Polynomial monomial(Exponents e, const Rational& c) {
    Polynomial p(e.size());
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
  }

  std::size_t num_vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned t = 0;
      for (unsigned x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }

  const Rational& coefficient(const Exponents& e) const {
    static const Rational kZero = 0;
    auto it = terms_.find(e);
    return it == terms_.end() ? kZero : it->second;
  }

  // First term in lex order; the exponent read by lex-min valuations.
  const std::pair<const Exponents, Rational>& lex_min_term() const {
    if (terms_.empty()) throw DomainError("lex_min_term of zero polynomial");
    return *terms_.begin();
  }

  const std::pair<const Exponents, Rational>& lex_max_term() const {
    if (terms_.empty()) throw DomainError("lex_max_term of zero polynomial");
    return *terms_.rbegin();
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw InternalError("add_term: arity mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator-() const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_arity(b);
    Polynomial p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& a) {
    Polynomial p(a.nvars_);
    if (c == 0) return p;
    for (const auto& [e, k] : a.terms_) p.terms_.emplace(e, c * k);
    return p;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(nvars_, 1);
    Polynomial base = *this;
    for (; k; k >>= 1) {
      if (k & 1) r = r * base;
      if (k > 1) base = base * base;
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  // std::map order; gives polynomials a deterministic total order.
  bool operator<(const Polynomial& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    return terms_ < o.terms_;
  }

  // Ring homomorphism sending variable i to images[i]; realizes chart
  // parametrizations and restriction of sections to subvarieties.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw DomainError("substitute: arity mismatch");
    std::size_t out_vars = images.empty() ? 0 : images[0].num_vars();
    for (const auto& im : images)
      if (im.num_vars() != out_vars) throw DomainError("substitute: inconsistent image arity");
    // powers[i][k] = images[i]^k, filled on demand
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(constant(out_vars, 1));
    Polynomial out(out_vars);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(out_vars, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
        term = term * pw[e[i]];
      }
      out += term;
    }
    return out;
  }

 private:
  void check_arity(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InternalError("polynomial arity mismatch");
  }

  std::size_t nvars_;
  TermMap terms_;
};

namespace detail {
inline bool exp_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
  return e;
}
}  // namespace detail

// Division with remainder by a single divisor, reducing against the lex-max
// term of q. The remainder collects terms not divisible by lt(q); it is zero
// exactly when q divides p.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DomainError("division by zero polynomial");
  Polynomial quot(p.num_vars()), rem(p.num_vars());
  Polynomial r = p;
  const auto& [qe, qc] = q.lex_max_term();
  while (!r.is_zero()) {
    const auto& [re, rc] = r.lex_max_term();
    if (detail::exp_divides(qe, re)) {
      Polynomial t = Polynomial::monomial(detail::exp_sub(re, qe), rc / qc);
      quot += t;
      r -= t * q;
    } else {
      rem.add_term(re, rc);
      Polynomial t = Polynomial::monomial(re, rc);
      r -= t;
    }
  }
  return {quot, rem};
}

struct DividePowerResult {
  unsigned multiplicity = 0;
  Polynomial quotient;
};

// Largest t with q^t | p, together with p / q^t. This is the order of
// vanishing along the divisor cut out by q (q irreducible in the catalog).
inline DividePowerResult poly_divide_power(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) throw DomainError("order of zero section undefined");
  if (q.is_zero() || q.is_constant()) throw DomainError("invalid divisor polynomial");
  DividePowerResult out;
  out.quotient = p;
  for (;;) {
    auto [h, r] = divmod(out.quotient, q);
    if (!r.is_zero()) break;
    out.quotient = std::move(h);
    ++out.multiplicity;
  }
  return out;
}

}  // namespace okounkov
