#include "staircase/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace staircase {

MonomialIdeal2 MonomialIdeal2::from_gens(std::vector<Monomial> gens) {
  // Sort by ascending x-exponent, then ascending y-exponent, and sweep: a
  // generator survives iff its y-exponent undercuts everything of smaller or
  // equal x-exponent seen so far.  Survivors form a strict staircase.
  std::sort(gens.begin(), gens.end(), [](const Monomial& m, const Monomial& n) {
    if (m.a != n.a) return m.a < n.a;
    return m.b < n.b;
  });
  std::vector<Monomial> kept;
  bool first = true;
  Exp min_b = 0;
  for (const Monomial& m : gens) {
    if (first || m.b < min_b) {
      kept.push_back(m);
      min_b = m.b;
      first = false;
    }
  }
  std::reverse(kept.begin(), kept.end());  // canonical: x-exponent descending
  MonomialIdeal2 I;
  I.gens_ = std::move(kept);
  return I;
}

std::string MonomialIdeal2::str() const {
  if (is_zero()) return "mono(0)";
  std::ostringstream out;
  out << "mono(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].str();
  }
  out << ")";
  return out.str();
}

LexSpec::LexSpec(Exp d_, std::vector<Exp> a_) : d(d_), a(std::move(a_)) {
  if (d < 1) throw std::invalid_argument("lex: d must be positive");
  if (static_cast<Exp>(a.size()) > d) throw std::invalid_argument("lex: k exceeds d");
  Exp prev = 0;
  for (Exp ai : a) {
    if (ai <= prev) throw std::invalid_argument("lex: a-sequence must be strictly increasing and positive");
    prev = ai;
  }
}

std::string LexSpec::str() const {
  std::ostringstream out;
  out << "lex(" << d << ";";
  for (size_t i = 0; i < a.size(); ++i) out << (i ? "," : " ") << a[i];
  out << ")";
  return out.str();
}

MonomialIdeal2 from_lex_spec(const LexSpec& spec) {
  std::vector<Monomial> gens;
  gens.emplace_back(spec.d, 0);
  for (size_t i = 0; i < spec.a.size(); ++i)
    gens.emplace_back(spec.d - static_cast<Exp>(i) - 1, spec.a[i]);
  return MonomialIdeal2::from_gens(std::move(gens));
}

std::optional<LexSpec> is_lex_segment(const MonomialIdeal2& I) {
  const auto& g = I.gens();
  if (g.empty()) return std::nullopt;
  if (g.front().b != 0 || g.front().a < 1) return std::nullopt;
  const Exp d = g.front().a;
  std::vector<Exp> a;
  for (size_t i = 1; i < g.size(); ++i) {
    if (g[i].a != d - static_cast<Exp>(i)) return std::nullopt;  // x-exponents must be consecutive
    a.push_back(g[i].b);
  }
  return LexSpec(d, std::move(a));  // canonical form already gives 1 <= a_1 < ... < a_k
}

MonomialIdeal2 multiply(const MonomialIdeal2& I, const MonomialIdeal2& J) {
  if (I.is_zero() || J.is_zero()) return MonomialIdeal2::zero();
  std::vector<Monomial> prods;
  prods.reserve(I.gens().size() * J.gens().size());
  for (const Monomial& m : I.gens())
    for (const Monomial& n : J.gens()) prods.push_back(m * n);
  return MonomialIdeal2::from_gens(std::move(prods));
}

MonomialIdeal2 scale(const MonomialIdeal2& I, const Monomial& m) {
  if (I.is_zero()) return MonomialIdeal2::zero();
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) gens.push_back(g * m);
  return MonomialIdeal2::from_gens(std::move(gens));
}

MonomialIdeal2 power(const MonomialIdeal2& I, Exp n) {
  if (n < 0) throw std::invalid_argument("negative power");
  if (n == 0) return MonomialIdeal2::unit();
  if (I.is_zero() || I.is_unit()) return I;

  static std::mutex lock;
  static std::map<std::string, std::vector<MonomialIdeal2>> table;

  std::scoped_lock guard(lock);
  std::vector<MonomialIdeal2>& powers = table[I.str()];
  if (powers.empty()) powers.push_back(I);
  while (static_cast<Exp>(powers.size()) < n) powers.push_back(multiply(powers.back(), I));
  return powers[static_cast<size_t>(n - 1)];
}

namespace {

// I : m for a single monomial m: shift every generator down, clamped at 0.
MonomialIdeal2 colon_by_monomial(const MonomialIdeal2& I, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) gens.push_back(g.colon(m));
  return MonomialIdeal2::from_gens(std::move(gens));
}

}  // namespace

MonomialIdeal2 colon(const MonomialIdeal2& I, const MonomialIdeal2& J) {
  if (J.is_zero()) throw std::invalid_argument("colon by zero ideal");
  if (I.is_zero()) return MonomialIdeal2::zero();
  MonomialIdeal2 Q = colon_by_monomial(I, J.gens()[0]);
  for (size_t i = 1; i < J.gens().size(); ++i)
    Q = intersect(Q, colon_by_monomial(I, J.gens()[i]));
  return Q;
}

MonomialIdeal2 intersect(const MonomialIdeal2& I, const MonomialIdeal2& J) {
  if (I.is_zero() || J.is_zero()) return MonomialIdeal2::zero();
  std::vector<Monomial> lcms;
  lcms.reserve(I.gens().size() * J.gens().size());
  for (const Monomial& m : I.gens())
    for (const Monomial& n : J.gens()) lcms.push_back(lcm(m, n));
  return MonomialIdeal2::from_gens(std::move(lcms));
}

MonomialIdeal2 sum(const MonomialIdeal2& I, const MonomialIdeal2& J) {
  std::vector<Monomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal2::from_gens(std::move(gens));
}

bool contains(const MonomialIdeal2& I, const Monomial& m) {
  for (const Monomial& g : I.gens())
    if (g.divides(m)) return true;
  return false;
}

Exp mu(const MonomialIdeal2& I) { return static_cast<Exp>(I.gens().size()); }

Exp ord(const MonomialIdeal2& I) {
  if (I.is_zero()) throw std::domain_error("ord of zero ideal");
  Exp best = I.gens()[0].degree();
  for (const Monomial& g : I.gens()) best = std::min(best, g.degree());
  return best;
}

bool is_m_primary(const MonomialIdeal2& I) {
  // In canonical form a pure x-power can only sit in front (y-exponents are
  // strictly increasing) and a pure y-power only at the back.
  if (I.is_zero()) return false;
  return I.gens().front().b == 0 && I.gens().back().a == 0;
}

int height(const MonomialIdeal2& I) {
  if (I.is_zero()) return 0;
  return is_m_primary(I) ? 2 : 1;
}

Exp colength(const MonomialIdeal2& I) {
  if (I.is_unit()) return 0;
  if (!is_m_primary(I)) throw std::runtime_error("infinite length");
  // Column i of the staircase (0 <= i < A_{j-1}) has height B_j where A_j is
  // the largest generator x-exponent <= i; sum the rectangular blocks.
  const auto& g = I.gens();
  Exp total = 0;
  for (size_t j = 1; j < g.size(); ++j)
    total = checked_add(total, checked_mul(g[j].b, g[j - 1].a - g[j].a));
  return total;
}

SplitFactor split_common_factor(const MonomialIdeal2& I) {
  if (I.is_zero()) throw std::domain_error("split_common_factor of zero ideal");
  // Canonical order makes the minimal x-exponent the last generator's and the
  // minimal y-exponent the first generator's.
  SplitFactor s;
  s.x = I.gens().back().a;
  s.y = I.gens().front().b;
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) gens.emplace_back(g.a - s.x, g.b - s.y);
  s.cofactor = MonomialIdeal2::from_gens(std::move(gens));
  return s;
}

Exp quotient_length(const MonomialIdeal2& I, const MonomialIdeal2& J) {
  for (const Monomial& g : J.gens())
    if (!contains(I, g)) throw std::invalid_argument("quotient_length: J not contained in I");
  if (J.is_zero()) {
    if (I.is_zero()) return 0;
    throw std::runtime_error("infinite length");
  }
  // J subset of I forces I's common factor to divide J's; divide it out of
  // both (a module isomorphism) and take the colength difference.
  SplitFactor s = split_common_factor(I);
  std::vector<Monomial> jf;
  jf.reserve(J.gens().size());
  for (const Monomial& g : J.gens()) jf.emplace_back(g.a - s.x, g.b - s.y);
  return colength(MonomialIdeal2::from_gens(std::move(jf))) - colength(s.cofactor);
}

}  // namespace staircase
