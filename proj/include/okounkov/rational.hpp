#pragma once
// Exact scalars and integer/rational vector helpers. Everything in this
// library computes over arbitrary-precision rationals; there is no
// floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace okounkov {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

// Invalid input as defined by an operation's contract (zero section,
// unknown model, non-effective divisor, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant (non-termination guard, inconsistent model
// data discovered mid-computation).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// A machine check contradicted one of the verified statements on a model.
// Surfaced as a test/verification failure, never recovered from.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Integer rat_num(const Rational& q) { return numerator(q); }
inline Integer rat_den(const Rational& q) { return denominator(q); }

inline std::string to_string(const Integer& n) { return n.str(); }
inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw DomainError("not a rational literal: '" + s + "'");
  }
}

inline Integer dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InternalError("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InternalError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Divide by the content (gcd of entries). Positive scaling only; the
// direction of the vector is preserved. Zero vectors pass through.
inline IntVec primitive(IntVec v) {
  Integer g = 0;
  for (const Integer& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Integer& x : v) x /= g;
  return v;
}

// Primitive with the first nonzero entry made positive. Only for vectors
// whose sign is a free choice (lineality directions, equation normals).
inline IntVec primitive_signed(IntVec v) {
  v = primitive(std::move(v));
  for (const Integer& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Integer& y : v) y = -y;
    break;
  }
  return v;
}

// Clear denominators and reduce to a primitive integer vector.
inline IntVec to_primitive_integer(const RatVec& v) {
  Integer lcm = 1;
  for (const Rational& q : v) {
    Integer d = rat_den(q);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = rat_num(v[i]) * (lcm / rat_den(v[i]));
  return primitive(std::move(out));
}

inline RatVec to_rational_vec(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

}  // namespace okounkov
