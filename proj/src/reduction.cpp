#include "staircase/reduction.hpp"

#include <algorithm>
#include <memory>
#include <random>

#include "staircase/hilbert.hpp"

namespace staircase {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

// p < 2^31 keeps every product inside 64 bits.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void check_prime_range(std::uint64_t p) {
  if (p < 3 || p >= (1ULL << 31)) throw std::invalid_argument("prime out of range");
}

}  // namespace

GenericPair sample_generic_pair(const MonomialIdeal2& I, std::uint64_t prime,
                                std::uint64_t seed) {
  check_prime_range(prime);
  if (I.gens().size() < 2)
    throw std::invalid_argument("generic pair needs at least two generators");

  GenericPair pair;
  pair.prime = prime;
  pair.seed = seed;
  pair.support = I.gens();

  // mt19937_64 has a pinned sequence; the draw below avoids the
  // implementation-defined distributions so recorded seeds replay anywhere.
  std::mt19937_64 rng(seed);
  auto draw_nonzero = [&]() { return 1 + rng() % (prime - 1); };

  for (int attempt = 0; attempt < 16; ++attempt) {
    for (auto& row : pair.coeffs) {
      row.resize(pair.support.size());
      for (auto& c : row) c = draw_nonzero();
    }
    // Full rank 2x\mu: some 2x2 minor is nonzero.
    for (size_t i = 0; i < pair.support.size(); ++i)
      for (size_t j = i + 1; j < pair.support.size(); ++j) {
        if (mulmod(pair.coeffs[0][i], pair.coeffs[1][j], prime) !=
            mulmod(pair.coeffs[0][j], pair.coeffs[1][i], prime))
          return pair;
      }
  }
  throw std::runtime_error("degenerate pair: rank < 2 after 16 redraws");
}

TruncationSpace::TruncationSpace(std::uint64_t prime, Exp degree_bound)
    : prime_(prime), degree_bound_(degree_bound) {
  check_prime_range(prime);
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be positive");
  cols_ = static_cast<size_t>(triangular(degree_bound));
  pivot_row_.assign(cols_, -1);
}

bool TruncationSpace::insert(std::vector<std::uint64_t> row) {
  for (size_t c = 0; c < cols_; ++c) {
    if (row[c] == 0) continue;
    const std::int32_t pr = pivot_row_[c];
    if (pr < 0) {
      // New pivot: normalize so elimination is a single multiply-subtract.
      const std::uint64_t inv = invmod(row[c], prime_);
      for (size_t k = c; k < cols_; ++k)
        if (row[k]) row[k] = mulmod(row[k], inv, prime_);
      pivot_row_[c] = static_cast<std::int32_t>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    const std::uint64_t factor = row[c];
    const std::vector<std::uint64_t>& piv = rows_[static_cast<size_t>(pr)];
    for (size_t k = c; k < cols_; ++k)
      if (piv[k]) row[k] = (row[k] + (prime_ - mulmod(factor, piv[k], prime_))) % prime_;
  }
  return false;
}

Exp TruncationSpace::pivots_below(Exp col_cutoff) const {
  const size_t cut = std::min<size_t>(cols_, static_cast<size_t>(col_cutoff));
  Exp count = 0;
  for (size_t c = 0; c < cut; ++c)
    if (pivot_row_[c] >= 0) ++count;
  return count;
}

bool TruncationSpace::in_row_space_below(std::vector<std::uint64_t> v, Exp col_cutoff) const {
  const size_t cut = std::min<size_t>(cols_, static_cast<size_t>(col_cutoff));
  for (size_t c = 0; c < cut; ++c) {
    if (v[c] == 0) continue;
    const std::int32_t pr = pivot_row_[c];
    if (pr < 0) return false;
    const std::uint64_t factor = v[c];
    const std::vector<std::uint64_t>& piv = rows_[static_cast<size_t>(pr)];
    for (size_t k = c; k < cols_; ++k)
      if (piv[k]) v[k] = (v[k] + (prime_ - mulmod(factor, piv[k], prime_))) % prime_;
  }
  return true;  // every entry left of the cutoff was eliminated
}

namespace {

// One polynomial generator: a fixed support with nonzero coefficients.
struct Poly {
  std::vector<Monomial> mons;
  std::vector<std::uint64_t> coef;
  Exp ord = 0;  // minimal total degree of the support
};

std::vector<Poly> pair_polys(const GenericPair& pair, const Monomial& shift) {
  std::vector<Poly> polys;
  for (const auto& row : pair.coeffs) {
    Poly p;
    for (size_t i = 0; i < pair.support.size(); ++i) {
      if (row[i] % pair.prime == 0) continue;
      p.mons.push_back(pair.support[i] * shift);
      p.coef.push_back(row[i] % pair.prime);
    }
    if (p.mons.empty()) continue;  // the zero polynomial spans nothing
    p.ord = p.mons[0].degree();
    for (const Monomial& m : p.mons) p.ord = std::min(p.ord, m.degree());
    polys.push_back(std::move(p));
  }
  return polys;
}

// Staged insertion of monomial multiples u*h into a truncation space; stage
// delta inserts all multipliers of total degree delta.  Multiples whose every
// term lands at degree >= T contribute nothing below the cutoff for T, so
// dim R/((polys)+M^T) is exact once stages < T - ord(h) are in.
class StagedRows {
 public:
  StagedRows(std::uint64_t prime, Exp degree_bound, std::vector<Poly> polys)
      : ts_(prime, degree_bound), polys_(std::move(polys)), next_stage_(polys_.size(), 0) {}

  TruncationSpace& space() { return ts_; }

  void ensure_complete_below(Exp T) {
    for (size_t i = 0; i < polys_.size(); ++i)
      while (next_stage_[i] + polys_[i].ord < T) insert_stage(i, next_stage_[i]++);
  }

  Exp quotient_dim(Exp T) {
    ensure_complete_below(T);
    const Exp cutoff = triangular(T);
    return cutoff - ts_.pivots_below(cutoff);
  }

 private:
  void insert_stage(size_t i, Exp delta) {
    const Poly& p = polys_[i];
    const size_t cols = static_cast<size_t>(ts_.dimension());
    for (Exp b = 0; b <= delta; ++b) {
      const Monomial u(delta - b, b);
      std::vector<std::uint64_t> row(cols, 0);
      bool any = false;
      for (size_t t = 0; t < p.mons.size(); ++t) {
        const Monomial m = p.mons[t] * u;
        if (m.degree() >= ts_.degree_bound()) continue;
        row[static_cast<size_t>(TruncationSpace::index_of(m))] = p.coef[t];
        any = true;
      }
      if (any) ts_.insert(std::move(row));
    }
  }

  TruncationSpace ts_;
  std::vector<Poly> polys_;
  std::vector<Exp> next_stage_;
};

struct PlateauSearch {
  struct Plateau {
    Exp colength = 0;
    Exp T = 0;  // M^T lies in the ideal
  };
  std::optional<Plateau> plateau;  // nullopt = dimension crossed the bound
  std::unique_ptr<StagedRows> rows;
};

// Sweeps T upward until dim(T) == dim(T+1); the quotient dimension is
// nondecreasing in T, so crossing `bound` certifies "exceeds".
PlateauSearch find_plateau(const std::vector<Poly>& polys, std::uint64_t prime, Exp bound) {
  Exp degree_cap = 8;
  for (const Poly& p : polys) degree_cap = std::max(degree_cap, p.ord + 8);

  for (;; degree_cap = std::min<Exp>(degree_cap * 2, 4096)) {
    auto staged = std::make_unique<StagedRows>(prime, degree_cap, polys);
    Exp prev = -1;
    for (Exp T = 1; T + 1 <= degree_cap; ++T) {
      const Exp dim = staged->quotient_dim(T);
      if (dim > bound) return {};
      if (dim == prev)
        return {PlateauSearch::Plateau{dim, T - 1}, std::move(staged)};
      prev = dim;
    }
    if (degree_cap >= 4096) throw std::runtime_error("truncation degree cap exhausted");
  }
}

}  // namespace

std::optional<Exp> pair_colength(const GenericPair& pair, Exp e0_bound) {
  check_prime_range(pair.prime);
  const auto polys = pair_polys(pair, Monomial(0, 0));
  const auto search = find_plateau(polys, pair.prime, e0_bound);
  if (!search.plateau) return std::nullopt;
  return search.plateau->colength;
}

bool is_reduction(const GenericPair& pair, Exp e0_bound) {
  const auto lambda = pair_colength(pair, e0_bound);
  return lambda && *lambda == e0_bound;
}

bool power_containment(const MonomialIdeal2& I, const GenericPair& pair, Exp m) {
  if (m < 1) throw std::invalid_argument("power_containment needs m >= 1");
  check_prime_range(pair.prime);
  const MonomialIdeal2 Im = power(I, m);
  const MonomialIdeal2 Im1 = power(I, m + 1);

  // J*I^m is generated by f*u and g*u over the minimal generators u of I^m.
  std::vector<Poly> polys;
  for (const Monomial& u : Im.gens())
    for (Poly& p : pair_polys(pair, u)) polys.push_back(std::move(p));

  // lambda(R/(J*I^m)) <= lambda(R/J^{m+1}) = lambda(R/J)*C(m+2,2) for a
  // parameter pair, so the plateau must appear under this bound.
  const Exp bound = checked_add(checked_mul(newton_e0(I), triangular(m + 1)), 1);
  auto search = find_plateau(polys, pair.prime, bound);
  if (!search.plateau) throw std::runtime_error("power_containment: no plateau under bound");

  const Exp cutoff = triangular(search.plateau->T);
  TruncationSpace& space = search.rows->space();
  for (const Monomial& w : Im1.gens()) {
    if (w.degree() >= search.plateau->T) continue;  // inside M^T, hence inside J*I^m
    std::vector<std::uint64_t> v(static_cast<size_t>(space.dimension()), 0);
    v[static_cast<size_t>(TruncationSpace::index_of(w))] = 1;
    if (!space.in_row_space_below(std::move(v), cutoff)) return false;
  }
  return true;
}

McResult monte_carlo_r_leq_1(const MonomialIdeal2& I, Exp trials, std::uint64_t prime,
                             std::uint64_t seed) {
  if (!is_m_primary(I) || I.is_unit())
    throw std::invalid_argument("monte_carlo_r_leq_1 needs an m-primary ideal");
  McResult res;
  res.prime = prime;
  res.seed = seed;
  const Exp e0 = newton_e0(I);

  for (Exp t = 0; t < trials; ++t) {
    PairReport rep;
    const std::uint64_t trial_seed = splitmix64(seed + 0x9E3779B97F4A7C15ULL * (t + 1));
    rep.pair = sample_generic_pair(I, prime, trial_seed);
    const auto lambda = pair_colength(rep.pair, e0);
    rep.colength = lambda ? *lambda : -1;
    rep.is_reduction = lambda && *lambda == e0;
    rep.i2_eq_ji = rep.is_reduction && power_containment(I, rep.pair, 1);
    res.pairs.push_back(std::move(rep));
  }

  bool any_reduction = false;
  bool any_yes = false;
  for (const PairReport& rep : res.pairs) {
    any_reduction |= rep.is_reduction;
    any_yes |= rep.i2_eq_ji;
  }
  res.verdict = any_yes          ? McVerdict::yes
                : any_reduction  ? McVerdict::no
                                 : McVerdict::inconclusive;
  return res;
}

}  // namespace staircase
