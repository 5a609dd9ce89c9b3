#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staircase/hilbert.hpp"
#include "staircase/ideal.hpp"
#include "staircase/reduction.hpp"

namespace staircase {

// A monomial certifying the failure of a colon equality at level n.
struct Witness {
  Exp n = 0;
  Monomial w;
};

enum class ProbeStatus { positive, zero, inconclusive };

struct ProbeResult {
  ProbeStatus status = ProbeStatus::inconclusive;
  std::optional<Witness> witness;  // set exactly when status == zero
  Exp horizon = 0;
};

// Positive-depth probe for the associated graded ring: depth > 0 iff
// I^{n+1} : I = I^n for all n.  Internally splits off the common monomial
// factor and probes the cofactor (the colon identity transfers the result
// level by level); witnesses are shifted back to the input ideal.  A zero
// verdict is certified by its witness; "positive" means up to the horizon.
ProbeResult gr_positive_depth_probe(const MonomialIdeal2& I, Exp N);

// Same loop without the internal factorization; used to cross-check the
// transfer identity.
ProbeResult gr_probe_direct(const MonomialIdeal2& I, Exp N);

// Positive-depth probe for the fiber cone F(I).  Strong equality
// M*I^{n+1} : I = M*I^n for all n <= N certifies positive depth up to the
// horizon; a failure of the weak containment (M*I^{n+1} : I) cap I^n = M*I^n
// certifies depth zero with a witness; weak success with a strong failure is
// inconclusive.
ProbeResult fiber_positive_depth_probe(const MonomialIdeal2& I, Exp N);

// Mechanical check of a colon identity over n = 0..N, with the first
// counterexample when it fails.  Both apply to lex-segment ideals only.
struct LemmaCheck {
  bool ok = true;
  Exp n = -1;
  std::optional<Monomial> counterexample;
};

// M*I^n : y = I^n.
LemmaCheck lemma_colon_y(const MonomialIdeal2& I, Exp N);

// M*I^{n+1} : I = M*(I^{n+1} : I).
LemmaCheck lemma_colon_factor(const MonomialIdeal2& I, Exp N);

// Level-preserving transfer check behind the factorization: for I = x^m * L
// the direct probe of I and the probe of L must produce identical verdicts
// and witnesses that match up to the x^{mn} shift.
bool prop_inequality_check(const MonomialIdeal2& L, Exp m, Exp N);

enum class DepthQualifier { certified_zero, positive_up_to_horizon, cm_certified };

enum class TriVerdict { yes, no, inconclusive };

const char* to_string(TriVerdict v);
const char* to_string(DepthQualifier q);

struct DepthVerdict {
  int depth_gr = 0;
  int depth_fiber = 0;
  int depth_rees = 1;  // always depth_gr + 1
  DepthQualifier gr_qualifier = DepthQualifier::positive_up_to_horizon;
  DepthQualifier fiber_qualifier = DepthQualifier::positive_up_to_horizon;
  bool cm_gr = false;
  bool cm_fiber = false;
  bool cm_rees = false;
  TriVerdict r_leq_1 = TriVerdict::inconclusive;
  Exp horizon = 0;
  std::optional<Witness> witness_gr;
  std::optional<Witness> witness_fiber;
  std::vector<std::string> flags;  // "depth-mismatch", "criterion-mismatch", ...
};

struct ClassifyOptions {
  Exp horizon = 0;  // 0 = default_horizon(I)
  Exp trials = 3;   // Monte-Carlo cross-check; 0 disables it
  std::uint64_t prime = 2147483647ULL;
  std::uint64_t seed = 42;
};

// Full decision bundle for a lex-segment ideal.
struct Classification {
  MonomialIdeal2 ideal;
  LexSpec spec;
  SplitFactor factor;
  HilbertSummary hilbert;       // of the m-primary cofactor
  Exp mu_input = 0;             // mu(I)
  Exp ord_input = 0;            // ord(I)
  bool contracted = false;      // mu = ord + 1 on the cofactor
  Exp colength_factor = 0;      // lambda(R/L), 0 when the cofactor is (1)
  DepthVerdict verdict;
  std::optional<McResult> monte_carlo;
};

// Decides depth(gr), depth(F) and the Cohen-Macaulay flags for a lex-segment
// ideal.  The route: k = 0 is the principal case (depths 2 and 1, everything
// CM); otherwise the numeric criterion e1 = e0 - lambda(R/L) on the m-primary
// cofactor decides CM (equivalently r <= 1), certifying depth 2 on both
// rings, and when it fails both probes run and must agree on 0 or 1.
// Disagreement between the probes, or between the numeric criterion and the
// Monte-Carlo reduction verdict, is recorded in verdict.flags.
// Throws when the input is not lex-segment.
Classification classify(const MonomialIdeal2& I, const ClassifyOptions& opt = {});

}  // namespace staircase
