#pragma once

#include <optional>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

// lambda(R/I^n) for n = 1..N; requires finite colengths (m-primary input).
std::vector<Exp> hilbert_sequence(const MonomialIdeal2& I, Exp N);

// mu(I^n) for n = 1..N.
std::vector<Exp> mu_sequence(const MonomialIdeal2& I, Exp N);

// Coefficients of P(n) = e0*C(n+1,2) - e1*n + e2 fitted to a colength
// sequence H (values for n = 1..N).  The fit succeeds when the second
// differences are constant on a tail of at least three H-values; n_stab is
// the first index where H agrees with P onward.  Absent result means the
// window was too short or never stabilized.
struct CoefficientFit {
  Exp e0 = 0;
  Exp e1 = 0;
  Exp e2 = 0;
  Exp n_stab = 0;
};

std::optional<CoefficientFit> fit_coefficients(const std::vector<Exp>& H);

// Multiplicity read off the Newton polyhedron: twice the area between the
// lower-left convex hull of the generator exponents and the axes.  Exact, and
// independent of the Hilbert fit; requires an m-primary input.
Exp newton_e0(const MonomialIdeal2& I);

// 1 for principal ideals (after removing the common monomial factor the
// cofactor is the unit ideal), else 2.  Requires a nonzero input.
int analytic_spread(const MonomialIdeal2& I);

// Numerator of the fiber-cone Hilbert series: (sum_{n>=0} mu(I^n) t^n) *
// (1-t)^spread, accepted when at least the last two coefficients of the
// observed window vanish; trailing zeros are trimmed.  mu_seq holds
// mu(I^n) for n = 1..N (mu(I^0) = 1 is implicit).
std::optional<std::vector<Exp>> fiber_numerator(const std::vector<Exp>& mu_seq, int spread);

// Everything the CLI and classifier need in one pass.  The input may carry a
// common monomial factor: colengths, fit and mu-data are computed on the
// m-primary cofactor (the factor changes neither the mu-sequence nor the
// spread), while spread and height describe the input itself.  When the fit
// is inconclusive at the requested horizon the horizon is doubled once
// (capped at 64); a fit whose e0 disagrees with newton_e0 or that violates
// e1 >= e0 - lambda(R/I) is rejected the same way, so a successful summary is
// cross-checked, never merely plausible.
struct HilbertSummary {
  std::vector<Exp> h;        // lambda(R/L^n), n = 1..horizon, L the cofactor
  Exp e0 = 0;
  Exp e1 = 0;
  Exp e2 = 0;
  Exp n_stab = 0;
  std::vector<Exp> mu_seq;   // mu(I^n), n = 1..horizon
  std::optional<std::vector<Exp>> numerator;
  int spread = 1;
  int height = 0;
  Exp horizon = 0;
  bool fit_ok = false;
};

HilbertSummary hilbert_summary(const MonomialIdeal2& I, Exp horizon_request = 0);

// max(8, 2*ord(I) + 4), the default analysis window.
Exp default_horizon(const MonomialIdeal2& I);

}  // namespace staircase
