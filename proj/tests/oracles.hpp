#pragma once

// Brute-force reference implementations for the test suites.  Everything here
// recomputes its answer from first principles (generator scans, grid walks,
// coin-style reachability) so the library is checked against an independent
// method rather than against itself.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "staircase/ideal.hpp"

namespace oracles {

using staircase::Exp;
using staircase::LexSpec;
using staircase::Monomial;
using staircase::MonomialIdeal2;

// Membership by scanning the generator list.
inline bool in_ideal(const MonomialIdeal2& I, const Monomial& w) {
  for (const auto& g : I.gens())
    if (g.divides(w)) return true;
  return false;
}

// w lies in I*J iff some product of a generator of I and a generator of J
// divides w.
inline bool in_product(const MonomialIdeal2& I, const MonomialIdeal2& J,
                       const Monomial& w) {
  for (const auto& g : I.gens())
    for (const auto& h : J.gens())
      if ((g * h).divides(w)) return true;
  return false;
}

// w lies in I : J iff w*h lies in I for every generator h of J.
inline bool in_colon(const MonomialIdeal2& I, const MonomialIdeal2& J,
                     const Monomial& w) {
  if (J.gens().empty()) return false;  // colon by zero is an error upstream
  for (const auto& h : J.gens())
    if (!in_ideal(I, w * h)) return false;
  return true;
}

// Every monomial of total degree <= bound, row by row.
inline std::vector<Monomial> monomials_up_to(Exp bound) {
  std::vector<Monomial> out;
  for (Exp d = 0; d <= bound; ++d)
    for (Exp b = 0; b <= d; ++b) out.emplace_back(d - b, b);
  return out;
}

// dim_K(R/I) by counting lattice points under the staircase; -1 when a whole
// row or column survives (infinite colength).
inline Exp grid_colength(const MonomialIdeal2& I) {
  if (I.is_zero()) return -1;
  Exp ax = 0, by = 0;
  bool pure_x = false, pure_y = false;
  for (const auto& g : I.gens()) {
    ax = std::max(ax, g.a);
    by = std::max(by, g.b);
    if (g.b == 0) pure_x = true;
    if (g.a == 0) pure_y = true;
  }
  if (!pure_x || !pure_y) return -1;
  Exp count = 0;
  for (Exp a = 0; a < ax; ++a)
    for (Exp b = 0; b < by; ++b)
      if (!in_ideal(I, Monomial(a, b))) ++count;
  return count;
}

// Generators are in canonical form: x-exponents strictly decreasing,
// y-exponents strictly increasing, and no generator divides another.
inline bool canonical_form_ok(const MonomialIdeal2& I) {
  const auto& g = I.gens();
  for (size_t i = 0; i + 1 < g.size(); ++i)
    if (g[i].a <= g[i + 1].a || g[i].b >= g[i + 1].b) return false;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      if (i != j && g[i].divides(g[j])) return false;
  return true;
}

// --- deterministic random inputs --------------------------------------------

inline Monomial random_monomial(std::mt19937_64& rng, Exp max_exp) {
  return Monomial(static_cast<Exp>(rng() % (max_exp + 1)),
                  static_cast<Exp>(rng() % (max_exp + 1)));
}

// Arbitrary nonzero ideal: 1..max_gens random generators.
inline MonomialIdeal2 random_ideal(std::mt19937_64& rng, Exp max_exp,
                                   int max_gens) {
  int n = 1 + static_cast<int>(rng() % max_gens);
  std::vector<Monomial> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i) gens.push_back(random_monomial(rng, max_exp));
  return MonomialIdeal2::from_gens(std::move(gens));
}

// m-primary, non-unit ideal: a pure x-power and a pure y-power plus a few
// interior generators (both exponents >= 1, so the pure powers survive).
inline MonomialIdeal2 random_m_primary(std::mt19937_64& rng, Exp max_exp,
                                       int extra_gens) {
  std::vector<Monomial> gens;
  gens.emplace_back(1 + static_cast<Exp>(rng() % max_exp), 0);
  gens.emplace_back(0, 1 + static_cast<Exp>(rng() % max_exp));
  int n = static_cast<int>(rng() % (extra_gens + 1));
  for (int i = 0; i < n; ++i)
    gens.emplace_back(1 + static_cast<Exp>(rng() % max_exp),
                      1 + static_cast<Exp>(rng() % max_exp));
  return MonomialIdeal2::from_gens(std::move(gens));
}

// Random lex-segment spec with 1 <= k <= d <= dmax and a-values in 1..amax,
// drawn by a partial Fisher-Yates shuffle.
inline LexSpec random_lex_spec(std::mt19937_64& rng, Exp dmax, Exp amax) {
  Exp d = 1 + static_cast<Exp>(rng() % dmax);
  Exp k = 1 + static_cast<Exp>(rng() % d);
  if (k > amax) k = amax;
  std::vector<Exp> pool;
  for (Exp v = 1; v <= amax; ++v) pool.push_back(v);
  for (Exp i = 0; i < k; ++i) {
    Exp j = i + static_cast<Exp>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<Exp> a(pool.begin(), pool.begin() + k);
  std::sort(a.begin(), a.end());
  return LexSpec(d, std::move(a));
}

// --- numerical-semigroup oracle ----------------------------------------------

// Membership table for <gens> on 0..bound by coin-style reachability: the
// outer loop runs over generators, the opposite order from the production
// dynamic program.
inline std::vector<std::uint8_t> semigroup_table_oracle(
    const std::vector<Exp>& gens, Exp bound) {
  std::vector<std::uint8_t> t(static_cast<size_t>(bound) + 1, 0);
  t[0] = 1;
  for (Exp g : gens)
    for (Exp n = g; n <= bound; ++n)
      if (t[static_cast<size_t>(n - g)]) t[static_cast<size_t>(n)] = 1;
  return t;
}

}  // namespace oracles
