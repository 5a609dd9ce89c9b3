#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace staircase {

// Exponents are machine words with checked arithmetic: any overflow is a hard
// error, never a wrapped value.
using Exp = std::int64_t;

inline Exp checked_add(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

inline Exp checked_mul(Exp a, Exp b) {
  Exp r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

// n*(n+1)/2, checked.  Number of monomials of total degree < n in two
// variables, and the n-th triangular number.
inline Exp triangular(Exp n) { return checked_mul(n, checked_add(n, 1)) / 2; }

// A monomial x^a y^b in K[x,y].  Exponents are always nonnegative.
struct Monomial {
  Exp a = 0;
  Exp b = 0;

  Monomial() = default;
  Monomial(Exp a_, Exp b_) : a(a_), b(b_) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
  }

  Exp degree() const { return checked_add(a, b); }

  // Divisibility is componentwise <=.
  bool divides(const Monomial& m) const { return a <= m.a && b <= m.b; }

  Monomial operator*(const Monomial& m) const {
    return Monomial(checked_add(a, m.a), checked_add(b, m.b));
  }

  // x^a y^b : x^c y^d = x^max(0,a-c) y^max(0,b-d).
  Monomial colon(const Monomial& m) const {
    return Monomial(a > m.a ? a - m.a : 0, b > m.b ? b - m.b : 0);
  }

  bool operator==(const Monomial&) const = default;

  // Text form: "x^2*y^6"; "^1" elided, zero-exponent variables elided, the
  // unit monomial is "1".
  std::string str() const;
};

inline Monomial lcm(const Monomial& m, const Monomial& n) {
  return Monomial(m.a > n.a ? m.a : n.a, m.b > n.b ? m.b : n.b);
}

// Canonical generator order: strictly decreasing x-exponent, i.e. down the
// staircase from the x-axis toward the y-axis.
struct CanonicalLess {
  bool operator()(const Monomial& m, const Monomial& n) const {
    if (m.a != n.a) return m.a > n.a;
    return m.b < n.b;
  }
};

}  // namespace staircase
