#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

// Deterministic 64-bit mixer used wherever derived seeds are needed; fixed
// here so recorded seeds replay identically on every platform.
std::uint64_t splitmix64(std::uint64_t x);

// FNV-1a, used to derive per-ideal seeds from canonical text.
std::uint64_t fnv1a64(const std::string& s);

// A pair (f, g) of random K-combinations of the minimal generators of an
// ideal over F_p.  coeffs[0] and coeffs[1] are indexed by `support`, the
// canonical generators at sampling time.  The recorded prime and seed replay
// the pair exactly.
struct GenericPair {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<Monomial> support;
  std::array<std::vector<std::uint64_t>, 2> coeffs;
};

// Samples coefficient rows uniformly from F_p^*, rejecting coefficient
// matrices of rank < 2 (up to 16 redraws, then an error).  Requires at least
// two generators.
GenericPair sample_generic_pair(const MonomialIdeal2& I, std::uint64_t prime,
                                std::uint64_t seed);

// Dense row space over F_p on the monomial basis of degrees < degree_bound,
// ordered by total degree then by y-exponent within a degree.  Rows are kept
// in echelon form with leftmost pivots, so the rank of any column-truncation
// is the number of pivots left of the cutoff.
class TruncationSpace {
 public:
  TruncationSpace(std::uint64_t prime, Exp degree_bound);

  Exp degree_bound() const { return degree_bound_; }
  Exp dimension() const { return static_cast<Exp>(cols_); }  // C(T+1, 2)

  static Exp index_of(const Monomial& m) {
    return checked_add(triangular(m.degree()), m.b);
  }

  // Echelon insertion; returns true when the rank grew.
  bool insert(std::vector<std::uint64_t> row);

  Exp pivots_below(Exp col_cutoff) const;

  // Does v lie in the row space restricted to columns < col_cutoff?  Only
  // pivots left of the cutoff can fire, so entries beyond it are ignored.
  bool in_row_space_below(std::vector<std::uint64_t> v, Exp col_cutoff) const;

  std::uint64_t prime() const { return prime_; }

 private:
  std::uint64_t prime_;
  Exp degree_bound_;
  size_t cols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::int32_t> pivot_row_;  // column -> row index or -1
};

// lambda(R/(f,g)) decided exactly by the truncation plateau: the first T with
// dim R/((f,g)+M^T) = dim R/((f,g)+M^{T+1}) certifies M^T inside (f,g) by
// Nakayama, so the dimension is the colength.  Returns nullopt ("exceeds
// bound") as soon as a truncation dimension passes e0_bound, which certifies
// lambda > e0_bound (including the infinite case).
std::optional<Exp> pair_colength(const GenericPair& pair, Exp e0_bound);

// Is J = (f,g) a reduction of I?  For a two-generated J in two variables a
// finite colength forces a parameter ideal, so lambda(R/J) = e(J) >= e0(I)
// with equality exactly for reductions; e0_bound must be e0(I).
bool is_reduction(const GenericPair& pair, Exp e0_bound);

// Decides I^{m+1} = J*I^m (containment of the left side suffices) exactly:
// plateau for J*I^m, then membership of every minimal generator of I^{m+1}
// in the certified row space.
bool power_containment(const MonomialIdeal2& I, const GenericPair& pair, Exp m);

struct PairReport {
  GenericPair pair;
  Exp colength = -1;  // -1 encodes "exceeds bound"
  bool is_reduction = false;
  bool i2_eq_ji = false;
};

enum class McVerdict { yes, no, inconclusive };

struct McResult {
  McVerdict verdict = McVerdict::inconclusive;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<PairReport> pairs;
};

// Monte-Carlo probe for r(I) <= 1 on an m-primary ideal: sample `trials`
// generic pairs; "yes" when some sampled reduction J satisfies I^2 = J*I,
// "no" when reductions were found but none did, "inconclusive" when no
// sampled pair was a reduction.  One-sided exactness: every recorded verdict
// about a concrete pair is exact; only the sampling is randomized.
McResult monte_carlo_r_leq_1(const MonomialIdeal2& I, Exp trials,
                             std::uint64_t prime, std::uint64_t seed);

}  // namespace staircase
