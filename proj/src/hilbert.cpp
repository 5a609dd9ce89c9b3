#include "staircase/hilbert.hpp"

#include <algorithm>

namespace staircase {

std::vector<Exp> hilbert_sequence(const MonomialIdeal2& I, Exp N) {
  if (!is_m_primary(I)) throw std::runtime_error("infinite length");
  std::vector<Exp> h;
  h.reserve(static_cast<size_t>(N));
  for (Exp n = 1; n <= N; ++n) h.push_back(colength(power(I, n)));
  return h;
}

std::vector<Exp> mu_sequence(const MonomialIdeal2& I, Exp N) {
  std::vector<Exp> m;
  m.reserve(static_cast<size_t>(N));
  for (Exp n = 1; n <= N; ++n) m.push_back(mu(power(I, n)));
  return m;
}

std::optional<CoefficientFit> fit_coefficients(const std::vector<Exp>& H) {
  const Exp K = static_cast<Exp>(H.size());
  if (K < 3) return std::nullopt;

  // Second differences d2[i] = H(n+2) - 2H(n+1) + H(n) at n = i+1; for a
  // quadratic tail they are the constant e0.
  std::vector<Exp> d2;
  for (size_t i = 0; i + 2 < H.size(); ++i)
    d2.push_back(H[i + 2] - 2 * H[i + 1] + H[i]);

  // Largest constant suffix of d2; its start is the stabilization index.
  size_t start = d2.size() - 1;
  while (start > 0 && d2[start - 1] == d2.back()) --start;
  const Exp n_stab = static_cast<Exp>(start) + 1;

  CoefficientFit fit;
  fit.e0 = d2.back();
  if (fit.e0 < 1) return std::nullopt;
  fit.n_stab = n_stab;
  // P(n) - P(n-1) = e0*n - e1 read off at n = K, then e2 from P(K).
  fit.e1 = checked_mul(fit.e0, K) - (H[K - 1] - H[K - 2]);
  fit.e2 = H[K - 1] - checked_mul(fit.e0, triangular(K)) + checked_mul(fit.e1, K);

  for (Exp n = n_stab; n <= K; ++n) {
    Exp p = checked_mul(fit.e0, triangular(n)) - checked_mul(fit.e1, n) + fit.e2;
    if (p != H[n - 1]) return std::nullopt;  // tail was not a quadratic after all
  }
  return fit;
}

namespace {

Exp cross(const Monomial& o, const Monomial& p, const Monomial& q) {
  return checked_mul(p.a - o.a, q.b - o.b) - checked_mul(p.b - o.b, q.a - o.a);
}

}  // namespace

Exp newton_e0(const MonomialIdeal2& I) {
  if (I.is_unit()) return 0;
  if (!is_m_primary(I)) throw std::runtime_error("infinite length");

  // Lower-left convex chain from (d,0) to (0,B); canonical order already
  // walks the staircase in decreasing x.  Clockwise turns stay, collinear
  // points drop out.
  std::vector<Monomial> hull;
  for (const Monomial& p : I.gens()) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0)
      hull.pop_back();
    hull.push_back(p);
  }

  // Shoelace around (0,0) -> hull -> (0,0); the closing edges lie on the axes
  // and contribute nothing.
  Exp twice_area = 0;
  Monomial prev(0, 0);
  for (const Monomial& v : hull) {
    twice_area = checked_add(twice_area, checked_mul(prev.a, v.b) - checked_mul(prev.b, v.a));
    prev = v;
  }
  return twice_area;
}

int analytic_spread(const MonomialIdeal2& I) {
  if (I.is_zero()) throw std::domain_error("analytic spread of zero ideal");
  return split_common_factor(I).cofactor.is_unit() ? 1 : 2;
}

std::optional<std::vector<Exp>> fiber_numerator(const std::vector<Exp>& mu_seq, int spread) {
  if (spread != 1 && spread != 2) throw std::invalid_argument("spread must be 1 or 2");
  std::vector<Exp> m;
  m.reserve(mu_seq.size() + 1);
  m.push_back(1);  // mu(I^0)
  m.insert(m.end(), mu_seq.begin(), mu_seq.end());
  const size_t W = m.size() - 1;
  if (W < 2) return std::nullopt;

  // Coefficients of (sum m_n t^n) * (1-t)^spread; entry j depends only on
  // m_0..m_j, so the window is exact.
  std::vector<Exp> c(m.size());
  for (size_t j = 0; j < m.size(); ++j) {
    Exp v = m[j];
    if (j >= 1) v -= static_cast<Exp>(spread) * m[j - 1];
    if (j >= 2 && spread == 2) v += m[j - 2];
    c[j] = v;
  }
  if (c[W] != 0 || c[W - 1] != 0) return std::nullopt;  // series has not settled
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

Exp default_horizon(const MonomialIdeal2& I) {
  return std::max<Exp>(8, 2 * ord(I) + 4);
}

HilbertSummary hilbert_summary(const MonomialIdeal2& I, Exp horizon_request) {
  if (I.is_zero()) throw std::domain_error("hilbert summary of zero ideal");
  const SplitFactor split = split_common_factor(I);
  const MonomialIdeal2& L = split.cofactor;
  if (!is_m_primary(L)) throw std::runtime_error("infinite length");

  Exp N = horizon_request > 0 ? horizon_request : default_horizon(I);

  HilbertSummary s;
  s.spread = analytic_spread(I);
  s.height = height(I);

  if (L.is_unit()) {
    // Degenerate principal case: lambda(R/(1)) = 0 for every power.
    s.h.assign(static_cast<size_t>(N), 0);
    s.mu_seq.assign(static_cast<size_t>(N), 1);
    s.numerator = fiber_numerator(s.mu_seq, s.spread);
    s.n_stab = 1;
    s.horizon = N;
    s.fit_ok = true;
    return s;
  }

  const Exp target_e0 = newton_e0(L);
  for (int attempt = 0;; ++attempt) {
    s.h = hilbert_sequence(L, N);
    s.horizon = N;
    auto fit = fit_coefficients(s.h);
    // Accept only a fit certified by the Newton multiplicity and satisfying
    // e1 >= e0 - lambda(R/L); anything else is inconclusive, never wrong.
    if (fit && fit->e0 == target_e0 && fit->e1 >= fit->e0 - s.h[0]) {
      s.e0 = fit->e0;
      s.e1 = fit->e1;
      s.e2 = fit->e2;
      s.n_stab = fit->n_stab;
      s.fit_ok = true;
      break;
    }
    if (attempt >= 1 || N >= 64) {
      s.fit_ok = false;
      break;
    }
    N = std::min<Exp>(2 * N, 64);
  }

  s.mu_seq = mu_sequence(L, s.horizon);  // mu(I^n) = mu(L^n): the factor shifts exponents only
  s.numerator = fiber_numerator(s.mu_seq, s.spread);
  return s;
}

}  // namespace staircase
