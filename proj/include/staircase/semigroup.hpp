#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "staircase/monomial.hpp"  // Exp, checked arithmetic

namespace staircase {

// A numerical semigroup <g_1,...,g_m> with gcd 1, held by its unique minimal
// generating set plus a membership table reaching past the Frobenius number.
// The table is built once and shared read-only by every ideal over it.
class NumericalSemigroup {
 public:
  static std::shared_ptr<const NumericalSemigroup> make(std::vector<Exp> gens);

  const std::vector<Exp>& gens() const { return gens_; }
  Exp frobenius() const { return frobenius_; }  // -1 when the semigroup is all of N
  bool contains(Exp n) const;

  bool operator==(const NumericalSemigroup& other) const { return gens_ == other.gens_; }

 private:
  NumericalSemigroup() = default;
  std::vector<Exp> gens_;
  std::vector<std::uint8_t> table_;  // membership for 0..table bound
  Exp frobenius_ = -1;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

// An ideal of the semigroup ring K[[t^s : s in S]] generated by monomials
// t^{a_i} with a_i in S, held by its minimal generator exponents (sorted
// ascending).  The exponent set is gens + S; every exponent beyond
// max(gens) + frobenius(S) belongs to it.
class SemigroupIdeal {
 public:
  SemigroupIdeal() = default;
  static SemigroupIdeal make(SemigroupPtr S, std::vector<Exp> gens);

  const SemigroupPtr& semigroup() const { return S_; }
  const std::vector<Exp>& gens() const { return gens_; }
  bool contains(Exp n) const;
  Exp conductor_bound() const;  // max(gens) + frobenius(S)

  bool operator==(const SemigroupIdeal& other) const;

  std::string str() const;  // "sgid(6,11,15,31; 6,11,31)"

 private:
  SemigroupPtr S_;
  std::vector<Exp> gens_;
};

// The maximal ideal (t^{g_1},...,t^{g_m}) of the semigroup ring.
SemigroupIdeal sg_maximal_ideal(const SemigroupPtr& S);

SemigroupIdeal sg_multiply(const SemigroupIdeal& I, const SemigroupIdeal& J);
SemigroupIdeal sg_power(const SemigroupIdeal& I, Exp n);  // n = 0 gives the whole ring
SemigroupIdeal sg_sum(const SemigroupIdeal& I, const SemigroupIdeal& J);
SemigroupIdeal sg_intersect(const SemigroupIdeal& I, const SemigroupIdeal& J);

// I : J = exponents z in S with z + E(J) inside E(I); finite test over J's
// generators since exponent sets are closed under adding S.
SemigroupIdeal sg_colon(const SemigroupIdeal& I, const SemigroupIdeal& J);

// lambda(I/J) for J inside I: the number of exponents in E(I) \ E(J), all of
// which lie at or below J's conductor bound.
Exp sg_length(const SemigroupIdeal& I, const SemigroupIdeal& J);

// Valabrega-Valla test I^n cap J = J*I^{n-1} for 2 <= n <= n_max, J a
// principal subideal of I; reports the first failing level (or -1).
struct VvCheck {
  bool ok = true;
  Exp first_failure = -1;
};

VvCheck vv_check(const SemigroupIdeal& I, const SemigroupIdeal& J, Exp n_max);

// The fixed fixture <6,11,15,31> with I = (t^6, t^11, t^31) and J = (t^6):
// every assertion the verification suite needs about it, as named booleans.
struct FiberWitnessReport {
  Exp lambda_i2_ji = 0;          // lambda(I^2 / J*I)
  Exp gap_exponent = -1;         // the unique exponent in E(I^2) \ E(J*I)
  bool i3_eq_ji2 = false;        // I^3 = J*I^2
  bool i2_cap_j_eq_ji = false;   // I^2 cap J = J*I
  bool t37_in_mi2 = false;       // 37 in E(M*I^2)
  bool t37_in_mji = true;        // 37 in E(M*J*I)
  bool sixteen_in_s = true;      // 16 in S (false for the fixture)
  bool fiber_depth_zero = false; // t37_in_mi2 and not t37_in_mji
};

FiberWitnessReport fiber_witness_check();

}  // namespace staircase
