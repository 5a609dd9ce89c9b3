#include "staircase/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace staircase {

namespace {

// Membership table for <gens> out to `bound`: n is a member iff n = 0 or
// n - g is a member for some generator g.
std::vector<std::uint8_t> membership_table(const std::vector<Exp>& gens, Exp bound) {
  std::vector<std::uint8_t> table(static_cast<size_t>(bound) + 1, 0);
  table[0] = 1;
  for (Exp n = 1; n <= bound; ++n)
    for (Exp g : gens)
      if (g <= n && table[static_cast<size_t>(n - g)]) {
        table[static_cast<size_t>(n)] = 1;
        break;
      }
  return table;
}

}  // namespace

std::shared_ptr<const NumericalSemigroup> NumericalSemigroup::make(std::vector<Exp> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty() || gens.front() < 1)
    throw std::invalid_argument("semigroup generators must be positive");
  Exp g = 0;
  for (Exp x : gens) g = std::gcd(g, x);
  if (g != 1) throw std::invalid_argument("semigroup generators must have gcd 1");

  // Grow the table until a run of gens[0] consecutive members appears; from
  // there on everything is a member, so the last gap before the run is the
  // Frobenius number.  gcd 1 guarantees termination.
  const Exp g0 = gens.front();
  Exp bound = g0 * gens.back() + g0 + 1;
  std::vector<std::uint8_t> table;
  Exp run_start = -1;
  for (;;) {
    table = membership_table(gens, bound);
    Exp run = 0;
    run_start = -1;
    for (Exp n = 0; n <= bound; ++n) {
      run = table[static_cast<size_t>(n)] ? run + 1 : 0;
      if (run >= g0) { run_start = n - g0 + 1; break; }
    }
    if (run_start >= 0) break;
    if (bound > (1 << 22)) throw std::runtime_error("semigroup table bound exhausted");
    bound *= 2;
  }

  auto S = std::shared_ptr<NumericalSemigroup>(new NumericalSemigroup());
  S->frobenius_ = -1;
  for (Exp n = run_start - 1; n >= 0; --n)
    if (!table[static_cast<size_t>(n)]) { S->frobenius_ = n; break; }
  table.resize(static_cast<size_t>(run_start + g0));
  S->table_ = std::move(table);

  // Minimal generators: g is redundant iff the others already produce it.
  for (Exp cand : gens) {
    std::vector<Exp> others;
    for (Exp x : gens) if (x != cand) others.push_back(x);
    if (others.empty()) { S->gens_.push_back(cand); continue; }
    const auto t = membership_table(others, cand);
    Exp og = 0;
    for (Exp x : others) og = std::gcd(og, x);
    if (!(og >= 1 && t[static_cast<size_t>(cand)])) S->gens_.push_back(cand);
  }
  return S;
}

bool NumericalSemigroup::contains(Exp n) const {
  if (n < 0) return false;
  if (n < static_cast<Exp>(table_.size())) return table_[static_cast<size_t>(n)];
  return true;  // the table reaches past the Frobenius number
}

SemigroupIdeal SemigroupIdeal::make(SemigroupPtr S, std::vector<Exp> gens) {
  if (!S) throw std::invalid_argument("semigroup ideal without a semigroup");
  if (gens.empty()) throw std::invalid_argument("semigroup ideal needs a generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Exp g : gens) {
    if (g < 0) throw std::invalid_argument("ideal generator must be nonnegative");
    if (!S->contains(g)) throw std::invalid_argument("ideal generator not in semigroup");
  }
  SemigroupIdeal I;
  I.S_ = std::move(S);
  // Ascending scan keeps exactly the minimal generators: g is redundant iff
  // g - g' lies in S for an already-kept g'.
  for (Exp g : gens) {
    bool redundant = false;
    for (Exp kept : I.gens_)
      if (I.S_->contains(g - kept)) { redundant = true; break; }
    if (!redundant) I.gens_.push_back(g);
  }
  return I;
}

bool SemigroupIdeal::contains(Exp n) const {
  for (Exp g : gens_)
    if (g <= n && S_->contains(n - g)) return true;
  return false;
}

Exp SemigroupIdeal::conductor_bound() const {
  return checked_add(gens_.back(), S_->frobenius());
}

bool SemigroupIdeal::operator==(const SemigroupIdeal& other) const {
  if (!S_ || !other.S_) return S_ == other.S_ && gens_ == other.gens_;
  return *S_ == *other.S_ && gens_ == other.gens_;
}

std::string SemigroupIdeal::str() const {
  std::ostringstream out;
  out << "sgid(";
  for (size_t i = 0; i < S_->gens().size(); ++i) out << (i ? "," : "") << S_->gens()[i];
  out << "; ";
  for (size_t i = 0; i < gens_.size(); ++i) out << (i ? "," : "") << gens_[i];
  out << ")";
  return out.str();
}

SemigroupIdeal sg_maximal_ideal(const SemigroupPtr& S) {
  return SemigroupIdeal::make(S, S->gens());
}

namespace {

void require_same_semigroup(const SemigroupIdeal& I, const SemigroupIdeal& J) {
  if (!(*I.semigroup() == *J.semigroup()))
    throw std::invalid_argument("semigroup mismatch");
}

// Minimal generators of a member set given by a predicate.  Correct whenever
// the set is an ideal (closed under adding S) and has no minimal generator
// beyond scan_bound.
SemigroupIdeal from_members(const SemigroupPtr& S, Exp scan_bound,
                            const std::function<bool(Exp)>& member) {
  std::vector<Exp> gens;
  for (Exp n = 0; n <= scan_bound; ++n) {
    if (!member(n)) continue;
    bool redundant = false;
    for (Exp g : gens)
      if (S->contains(n - g)) { redundant = true; break; }
    if (!redundant) gens.push_back(n);
  }
  return SemigroupIdeal::make(S, std::move(gens));
}

}  // namespace

SemigroupIdeal sg_multiply(const SemigroupIdeal& I, const SemigroupIdeal& J) {
  require_same_semigroup(I, J);
  std::vector<Exp> sums;
  sums.reserve(I.gens().size() * J.gens().size());
  for (Exp g : I.gens())
    for (Exp h : J.gens()) sums.push_back(checked_add(g, h));
  return SemigroupIdeal::make(I.semigroup(), std::move(sums));
}

SemigroupIdeal sg_power(const SemigroupIdeal& I, Exp n) {
  if (n < 0) throw std::invalid_argument("negative power");
  SemigroupIdeal r = SemigroupIdeal::make(I.semigroup(), {0});
  for (Exp i = 0; i < n; ++i) r = sg_multiply(r, I);
  return r;
}

SemigroupIdeal sg_sum(const SemigroupIdeal& I, const SemigroupIdeal& J) {
  require_same_semigroup(I, J);
  std::vector<Exp> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return SemigroupIdeal::make(I.semigroup(), std::move(gens));
}

SemigroupIdeal sg_intersect(const SemigroupIdeal& I, const SemigroupIdeal& J) {
  require_same_semigroup(I, J);
  // Past both conductor bounds every semigroup member is in both ideals, and
  // no minimal generator survives one max-generator step beyond that.
  const Exp C = std::max(I.conductor_bound(), J.conductor_bound());
  const Exp B = checked_add(C, I.semigroup()->gens().back()) + 1;
  return from_members(I.semigroup(), B,
                      [&](Exp n) { return I.contains(n) && J.contains(n); });
}

SemigroupIdeal sg_colon(const SemigroupIdeal& I, const SemigroupIdeal& J) {
  require_same_semigroup(I, J);
  const Exp C = I.conductor_bound();
  const Exp B = checked_add(C, I.semigroup()->gens().back()) + 1;
  const auto& S = I.semigroup();
  return from_members(S, B, [&](Exp z) {
    if (!S->contains(z)) return false;
    for (Exp h : J.gens())
      if (!I.contains(checked_add(z, h))) return false;
    return true;
  });
}

Exp sg_length(const SemigroupIdeal& I, const SemigroupIdeal& J) {
  require_same_semigroup(I, J);
  for (Exp h : J.gens())
    if (!I.contains(h)) throw std::invalid_argument("sg_length: J not contained in I");
  // Everything in E(I) \ E(J) sits at or below J's conductor bound.
  Exp count = 0;
  for (Exp n = 0; n <= J.conductor_bound(); ++n)
    if (I.contains(n) && !J.contains(n)) ++count;
  return count;
}

VvCheck vv_check(const SemigroupIdeal& I, const SemigroupIdeal& J, Exp n_max) {
  require_same_semigroup(I, J);
  if (J.gens().size() != 1) throw std::invalid_argument("vv_check: J must be principal");
  for (Exp h : J.gens())
    if (!I.contains(h)) throw std::invalid_argument("vv_check: J not contained in I");
  VvCheck check;
  for (Exp n = 2; n <= n_max; ++n) {
    const SemigroupIdeal lhs = sg_intersect(sg_power(I, n), J);
    const SemigroupIdeal rhs = sg_multiply(J, sg_power(I, n - 1));
    if (!(lhs == rhs)) {
      check.ok = false;
      check.first_failure = n;
      return check;
    }
  }
  return check;
}

FiberWitnessReport fiber_witness_check() {
  const auto S = NumericalSemigroup::make({6, 11, 15, 31});
  const SemigroupIdeal I = SemigroupIdeal::make(S, {6, 11, 31});
  const SemigroupIdeal J = SemigroupIdeal::make(S, {6});
  const SemigroupIdeal M = sg_maximal_ideal(S);

  const SemigroupIdeal I2 = sg_power(I, 2);
  const SemigroupIdeal JI = sg_multiply(J, I);

  FiberWitnessReport rep;
  rep.lambda_i2_ji = sg_length(I2, JI);
  rep.gap_exponent = -1;
  for (Exp n = 0; n <= JI.conductor_bound(); ++n)
    if (I2.contains(n) && !JI.contains(n)) { rep.gap_exponent = n; break; }
  rep.i3_eq_ji2 = sg_power(I, 3) == sg_multiply(J, I2);
  rep.i2_cap_j_eq_ji = sg_intersect(I2, J) == JI;
  rep.t37_in_mi2 = sg_multiply(M, I2).contains(37);
  rep.t37_in_mji = sg_multiply(M, JI).contains(37);
  rep.sixteen_in_s = S->contains(16);
  rep.fiber_depth_zero = rep.t37_in_mi2 && !rep.t37_in_mji;
  return rep;
}

}  // namespace staircase
