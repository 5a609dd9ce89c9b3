#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staircase/monomial.hpp"

namespace staircase {

// A monomial ideal of K[x,y] held in canonical form: the unique minimal
// generating set, sorted by strictly decreasing x-exponent and strictly
// increasing y-exponent.  The zero ideal is the empty generator list; the
// unit ideal is the single generator (0,0).  Values are immutable once built,
// and the canonical form is the equality and cache key.
class MonomialIdeal2 {
 public:
  MonomialIdeal2() = default;  // zero ideal

  // Normalizes an arbitrary generating set: drops every generator divisible
  // by another, sorts canonically.  An empty set yields the zero ideal.
  static MonomialIdeal2 from_gens(std::vector<Monomial> gens);

  static MonomialIdeal2 zero() { return MonomialIdeal2(); }
  static MonomialIdeal2 unit() { return from_gens({Monomial(0, 0)}); }

  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0] == Monomial(0, 0); }

  bool operator==(const MonomialIdeal2&) const = default;

  // Canonical text form, e.g. "mono(x^5, x^3*y^3, x*y^7, y^9)"; the unit
  // ideal is "mono(1)" and the zero ideal prints as "mono(0)" (display and
  // cache-key convention only; the grammar has no zero literal).
  std::string str() const;

 private:
  std::vector<Monomial> gens_;
};

// Specification of a lex-segment ideal (x^d, x^{d-1}y^{a_1}, ..., x^{d-k}y^{a_k})
// with d >= 1, 0 <= k <= d and 1 <= a_1 < ... < a_k.
struct LexSpec {
  Exp d = 1;
  std::vector<Exp> a;

  LexSpec() = default;
  LexSpec(Exp d_, std::vector<Exp> a_);

  Exp k() const { return static_cast<Exp>(a.size()); }
  std::string str() const;  // "lex(2; 1,3)"
};

MonomialIdeal2 from_lex_spec(const LexSpec& spec);

// Recognizes lex-segment ideals: consecutive x-exponents d..d-k with a pure
// x-power in front.  Absent result means "not lex-segment".
std::optional<LexSpec> is_lex_segment(const MonomialIdeal2& I);

// --- arithmetic -------------------------------------------------------------

MonomialIdeal2 multiply(const MonomialIdeal2& I, const MonomialIdeal2& J);

// Multiplication by a single monomial (the principal ideal it generates).
MonomialIdeal2 scale(const MonomialIdeal2& I, const Monomial& m);

// I^n with I^0 = (1).  Powers are memoized per ideal behind a lock, so
// concurrent readers are safe; results are returned by value.
MonomialIdeal2 power(const MonomialIdeal2& I, Exp n);

// I : J, the largest Q with Q*J contained in I.  Colon by the zero ideal is
// an error; 0 : J = 0.
MonomialIdeal2 colon(const MonomialIdeal2& I, const MonomialIdeal2& J);

MonomialIdeal2 intersect(const MonomialIdeal2& I, const MonomialIdeal2& J);

MonomialIdeal2 sum(const MonomialIdeal2& I, const MonomialIdeal2& J);

bool contains(const MonomialIdeal2& I, const Monomial& m);

// --- invariants -------------------------------------------------------------

// Number of minimal generators (0 for the zero ideal, 1 for the unit ideal).
Exp mu(const MonomialIdeal2& I);

// Smallest total degree of a generator; error on the zero ideal.
Exp ord(const MonomialIdeal2& I);

// Some generator is a pure x-power and some is a pure y-power.  (The unit
// ideal satisfies this vacuously via (0,0) and is treated as m-primary; every
// operation below is consistent with that convention.)
bool is_m_primary(const MonomialIdeal2& I);

// 2 if m-primary, 1 if nonzero otherwise, 0 for the zero ideal.
int height(const MonomialIdeal2& I);

// dim_K(R/I), requires finite colength (m-primary or unit); otherwise throws
// "infinite length".  Column-wise sum over the staircase, O(#gens).
Exp colength(const MonomialIdeal2& I);

// lambda(I/J) for J contained in I, computed after splitting off the common
// monomial factor; throws "infinite length" when not finite.
Exp quotient_length(const MonomialIdeal2& I, const MonomialIdeal2& J);

// I = x^p y^q * cofactor with the cofactor having no common factor.
struct SplitFactor {
  Exp x = 0;
  Exp y = 0;
  MonomialIdeal2 cofactor;
};

SplitFactor split_common_factor(const MonomialIdeal2& I);

}  // namespace staircase
