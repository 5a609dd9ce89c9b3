#include "staircase/verify.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "staircase/cache.hpp"
#include "staircase/depth.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/reduction.hpp"
#include "staircase/semigroup.hpp"
#include "staircase/survey.hpp"

namespace staircase {

Expectations Expectations::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read expectations file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("expectations file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw std::invalid_argument("expectations file must hold a JSON object");

  Expectations exp;
  for (const auto& [key, val] : j.items()) {
    if (key == "colon_gens") {
      exp.colon_gens.clear();
      for (const auto& pair : val)
        exp.colon_gens.emplace_back(pair.at(0).get<Exp>(), pair.at(1).get<Exp>());
    } else if (key == "witness_n") {
      exp.witness_n = val.get<Exp>();
    } else if (key == "witness_a") {
      exp.witness_a = val.get<Exp>();
    } else if (key == "witness_b") {
      exp.witness_b = val.get<Exp>();
    } else if (key == "sg_frobenius") {
      exp.sg_frobenius = val.get<Exp>();
    } else if (key == "sg_lambda") {
      exp.sg_lambda = val.get<Exp>();
    } else if (key == "sg_gap") {
      exp.sg_gap = val.get<Exp>();
    } else if (key == "lex213_h") {
      exp.lex213_h = val.get<std::vector<Exp>>();
    } else if (key == "lex213_e0") {
      exp.lex213_e0 = val.get<Exp>();
    } else if (key == "lex213_e1") {
      exp.lex213_e1 = val.get<Exp>();
    } else if (key == "lex213_e2") {
      exp.lex213_e2 = val.get<Exp>();
    } else if (key == "lex3126_e0") {
      exp.lex3126_e0 = val.get<Exp>();
    } else if (key == "lex3126_e1") {
      exp.lex3126_e1 = val.get<Exp>();
    } else {
      throw std::invalid_argument("unknown expectation key: " + key);
    }
  }
  return exp;
}

namespace {

// Exhaustive count of standard monomials: every monomial outside an
// m-primary ideal lies under its corner box.
Exp grid_colength(const MonomialIdeal2& I) {
  if (I.is_unit()) return 0;
  const Exp A = I.gens().front().a;
  const Exp B = I.gens().back().b;
  Exp count = 0;
  for (Exp a = 0; a < A; ++a)
    for (Exp b = 0; b < B; ++b)
      if (!contains(I, Monomial(a, b))) ++count;
  return count;
}

MonomialIdeal2 random_m_primary(std::mt19937_64& rng) {
  std::vector<Monomial> gens;
  gens.emplace_back(1 + static_cast<Exp>(rng() % 12), 0);
  gens.emplace_back(0, 1 + static_cast<Exp>(rng() % 12));
  const int extra = static_cast<int>(rng() % 4);
  for (int i = 0; i < extra; ++i)
    gens.emplace_back(1 + static_cast<Exp>(rng() % 12), 1 + static_cast<Exp>(rng() % 12));
  return MonomialIdeal2::from_gens(gens);
}

LexSpec random_lex_spec(std::mt19937_64& rng) {
  const Exp d = 1 + static_cast<Exp>(rng() % 6);
  const Exp k = 1 + static_cast<Exp>(rng() % static_cast<std::uint64_t>(d));
  // Partial Fisher-Yates over {1..9} for k distinct values.
  Exp pool[9] = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::vector<Exp> a;
  for (Exp i = 0; i < k; ++i) {
    const auto j = i + static_cast<Exp>(rng() % static_cast<std::uint64_t>(9 - i));
    std::swap(pool[i], pool[j]);
    a.push_back(pool[i]);
  }
  std::sort(a.begin(), a.end());
  return LexSpec(d, std::move(a));
}

std::uint64_t ideal_seed(std::uint64_t base, const MonomialIdeal2& I) {
  return splitmix64(base ^ fnv1a64(I.str()));
}

Exp binomial(Exp n, Exp k) {
  if (k < 0 || k > n) return 0;
  Exp r = 1;
  for (Exp i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

class Suite {
 public:
  explicit Suite(VerifyReport& report) : report_(report) {}

  void check(const std::string& name, bool pass, const std::string& detail) {
    report_.assertions.push_back({name, pass, detail});
    report_.all_pass = report_.all_pass && pass;
  }

 private:
  VerifyReport& report_;
};

}  // namespace

VerifyReport verify_paper(const Expectations& expected, const VerifyOptions& raw_opt) {
  // The concordance fixtures are defined with Monte-Carlo sampling on; a
  // trials count of 0 falls back to the suite's baseline of 3.
  VerifyOptions opt = raw_opt;
  if (opt.trials < 1) opt.trials = 3;

  VerifyReport report;
  Suite suite(report);

  // ---- F1: the colon fixture (x^3, x^2*y) ------------------------------
  {
    const auto I = MonomialIdeal2::from_gens({Monomial(3, 0), Monomial(2, 1)});
    const auto Q = colon(power(I, 2), MonomialIdeal2::from_gens({Monomial(3, 0)}));
    std::vector<Monomial> want;
    for (const auto& [a, b] : expected.colon_gens) want.emplace_back(a, b);
    const auto E = MonomialIdeal2::from_gens(want);
    suite.check("F1.colon_generators", Q == E, "I^2:(x^3) = " + Q.str());
    suite.check("F1.colon_differs_from_input", !(Q == I), "colon strictly larger than I");
    ClassifyOptions co;
    co.trials = opt.trials;
    co.prime = opt.prime;
    co.seed = ideal_seed(opt.seed, I);
    const Classification c = classify(I, co);
    suite.check("F1.cm_gr", c.verdict.cm_gr, "depth_gr = " + std::to_string(c.verdict.depth_gr));
  }

  // ---- F2: the depth-zero witness fixture ------------------------------
  {
    const auto I = MonomialIdeal2::from_gens(
        {Monomial(5, 0), Monomial(3, 3), Monomial(1, 7), Monomial(0, 9)});
    suite.check("F2.not_lex_segment", !is_lex_segment(I).has_value(), I.str());
    const ProbeResult gr = gr_positive_depth_probe(I, 10);
    suite.check("F2.gr_depth_zero", gr.status == ProbeStatus::zero,
                std::string("status = ") + (gr.status == ProbeStatus::zero ? "zero" : "other"));
    const bool witness_ok = gr.witness && gr.witness->n == expected.witness_n &&
                            gr.witness->w == Monomial(expected.witness_a, expected.witness_b);
    suite.check("F2.gr_witness", witness_ok,
                gr.witness ? "witness n=" + std::to_string(gr.witness->n) + " " +
                                 gr.witness->w.str()
                           : "no witness");
    const ProbeResult fib = fiber_positive_depth_probe(I, 10);
    suite.check("F2.fiber_depth_positive", fib.status == ProbeStatus::positive,
                "strong colon equality holds for n = 1..10");
  }

  // ---- F3: the semigroup fixture <6,11,15,31> --------------------------
  {
    const auto S = NumericalSemigroup::make({6, 11, 15, 31});
    suite.check("F3.frobenius", S->frobenius() == expected.sg_frobenius,
                "frobenius = " + std::to_string(S->frobenius()));
    const FiberWitnessReport rep = fiber_witness_check();
    suite.check("F3.lambda_i2_ji", rep.lambda_i2_ji == expected.sg_lambda,
                "lambda(I^2/JI) = " + std::to_string(rep.lambda_i2_ji));
    suite.check("F3.gap_exponent", rep.gap_exponent == expected.sg_gap,
                "gap exponent = " + std::to_string(rep.gap_exponent));
    suite.check("F3.i3_eq_ji2", rep.i3_eq_ji2, "I^3 = J*I^2");
    suite.check("F3.i2_cap_j_eq_ji", rep.i2_cap_j_eq_ji, "I^2 & J = J*I");
    suite.check("F3.t37_in_mi2", rep.t37_in_mi2, "37 in M*I^2");
    suite.check("F3.t37_not_in_mji", !rep.t37_in_mji, "37 not in M*J*I");
    suite.check("F3.sixteen_not_in_s", !rep.sixteen_in_s, "16 not in S");
    suite.check("F3.fiber_depth_zero", rep.fiber_depth_zero,
                "witness 37 certifies depth F(I) = 0");
    const auto I = SemigroupIdeal::make(S, {6, 11, 31});
    const auto J = SemigroupIdeal::make(S, {6});
    const VvCheck vv = vv_check(I, J, 6);
    suite.check("F3.vv_check_to_6", vv.ok,
                vv.ok ? "I^n & J = J*I^(n-1) for n = 2..6"
                      : "first failure at n = " + std::to_string(vv.first_failure));
  }

  // ---- F4: lemma suite on 50 pseudo-random lex specs -------------------
  {
    std::mt19937_64 rng(opt.seed);
    bool y_ok = true, factor_ok = true;
    std::string y_detail = "50 specs, n <= 6", factor_detail = y_detail;
    for (int i = 0; i < 50; ++i) {
      const LexSpec spec = random_lex_spec(rng);
      const MonomialIdeal2 I = from_lex_spec(spec);
      const LemmaCheck a = lemma_colon_y(I, 6);
      if (!a.ok && y_ok) {
        y_ok = false;
        y_detail = "fails for " + spec.str() + " at n = " + std::to_string(a.n);
      }
      const LemmaCheck b = lemma_colon_factor(I, 6);
      if (!b.ok && factor_ok) {
        factor_ok = false;
        factor_detail = "fails for " + spec.str() + " at n = " + std::to_string(b.n);
      }
    }
    suite.check("F4.lemma_colon_y", y_ok, y_detail);
    suite.check("F4.lemma_colon_factor", factor_ok, factor_detail);
  }

  // ---- F5: the exhaustive survey ---------------------------------------
  {
    SurveyOptions so;
    so.dmax = 6;
    so.amax = 9;
    so.horizon = 8;
    so.trials = opt.trials;
    so.prime = opt.prime;
    so.seed = opt.seed;
    so.jobs = opt.jobs;
    const SurveyResult sr = run_survey(so);
    Exp want_rows = 0;
    for (Exp d = 1; d <= 6; ++d)
      for (Exp k = 0; k <= d; ++k) want_rows += binomial(9, k);
    suite.check("F5.survey_rows", sr.rows == want_rows,
                std::to_string(sr.rows) + " rows (expected " + std::to_string(want_rows) + ")");
    suite.check("F5.survey_agreement", sr.all_agree,
                "depth, CM and criterion agreement on every row");
  }

  // ---- F6: criterion concordance on a 100-ideal sample ------------------
  {
    std::vector<LexSpec> family;
    for (const LexSpec& s : enumerate_lex_specs(6, 9))
      if (s.k() >= 1) family.push_back(s);
    std::mt19937_64 rng(opt.seed);
    for (size_t i = 0; i < 100 && i + 1 < family.size(); ++i) {
      const size_t j = i + static_cast<size_t>(rng() % (family.size() - i));
      std::swap(family[i], family[j]);
    }
    const std::uint64_t alternate = opt.prime == 998244353ULL ? 2147483647ULL : 998244353ULL;
    bool concord = true, prime_free = true;
    std::string concord_detail = "100 ideals, trials " + std::to_string(opt.trials);
    std::string prime_detail = "verdicts identical under p = " + std::to_string(opt.prime) +
                               " and p = " + std::to_string(alternate);
    for (size_t i = 0; i < 100 && i < family.size(); ++i) {
      const MonomialIdeal2 I = from_lex_spec(family[i]);
      const MonomialIdeal2 L = split_common_factor(I).cofactor;
      const HilbertSummary hs = hilbert_summary(I);
      const bool numeric = hs.fit_ok && hs.e1 == hs.e0 - colength(L);
      const std::uint64_t seed_i = ideal_seed(opt.seed, I);
      const McResult mc1 = monte_carlo_r_leq_1(L, opt.trials, opt.prime, seed_i);
      const McResult mc2 = monte_carlo_r_leq_1(L, opt.trials, alternate, seed_i);
      const bool agrees = hs.fit_ok && mc1.verdict != McVerdict::inconclusive &&
                          (mc1.verdict == McVerdict::yes) == numeric;
      if (!agrees && concord) {
        concord = false;
        concord_detail = "disagreement at " + family[i].str();
      }
      if (mc1.verdict != mc2.verdict && prime_free) {
        prime_free = false;
        prime_detail = "prime-dependent verdict at " + family[i].str();
      }
    }
    suite.check("F6.criterion_concordance", concord, concord_detail);
    suite.check("F6.prime_independence", prime_free, prime_detail);
  }

  // ---- F7: oracle equivalences ------------------------------------------
  {
    std::mt19937_64 rng(opt.seed);
    bool grid_ok = true, newton_ok = true;
    std::string grid_detail = "200 random m-primary ideals, exponents <= 12";
    std::string newton_detail = grid_detail;
    for (int i = 0; i < 200; ++i) {
      const MonomialIdeal2 I = random_m_primary(rng);
      if (colength(I) != grid_colength(I) && grid_ok) {
        grid_ok = false;
        grid_detail = "mismatch at " + I.str();
      }
      const HilbertSummary hs = hilbert_summary(I);
      if ((!hs.fit_ok || hs.e0 != newton_e0(I)) && newton_ok) {
        newton_ok = false;
        newton_detail = "mismatch at " + I.str();
      }
    }
    suite.check("F7.colength_grid", grid_ok, grid_detail);
    suite.check("F7.e0_equals_newton", newton_ok, newton_detail);

    bool mu_ok = true, num_ok = true;
    std::string mu_detail = "mu(I^n) = n*k + 1 across the survey family";
    std::string num_detail = "numerator = 1 + (k-1)t across the survey family";
    for (const LexSpec& s : enumerate_lex_specs(6, 9)) {
      if (s.k() == 0) continue;
      const MonomialIdeal2 I = from_lex_spec(s);
      const HilbertSummary hs = hilbert_summary(I, 8);
      for (size_t n = 0; n < hs.mu_seq.size(); ++n) {
        if (hs.mu_seq[n] != static_cast<Exp>(n + 1) * s.k() + 1 && mu_ok) {
          mu_ok = false;
          mu_detail = "mu mismatch at " + s.str() + ", n = " + std::to_string(n + 1);
        }
      }
      std::vector<Exp> want = {1, s.k() - 1};
      while (!want.empty() && want.back() == 0) want.pop_back();
      if ((!hs.numerator || *hs.numerator != want) && num_ok) {
        num_ok = false;
        num_detail = "numerator mismatch at " + s.str();
      }
    }
    suite.check("F7.mu_linear", mu_ok, mu_detail);
    suite.check("F7.fiber_numerator", num_ok, num_detail);

    const HilbertSummary h213 = hilbert_summary(from_lex_spec(LexSpec(2, {1, 3})));
    const bool h_ok = h213.h.size() >= expected.lex213_h.size() &&
                      std::equal(expected.lex213_h.begin(), expected.lex213_h.end(),
                                 h213.h.begin()) &&
                      h213.fit_ok && h213.e0 == expected.lex213_e0 &&
                      h213.e1 == expected.lex213_e1 && h213.e2 == expected.lex213_e2;
    std::ostringstream h_detail;
    h_detail << "H = [" << h213.h[0] << ", " << h213.h[1] << ", " << h213.h[2] << "], (e0,e1,e2) = ("
             << h213.e0 << ", " << h213.e1 << ", " << h213.e2 << ")";
    suite.check("F7.hilbert_lex213", h_ok, h_detail.str());

    const HilbertSummary h3126 = hilbert_summary(from_lex_spec(LexSpec(3, {1, 2, 6})));
    suite.check("F7.hilbert_lex3126",
                h3126.fit_ok && h3126.e0 == expected.lex3126_e0 && h3126.e1 == expected.lex3126_e1,
                "e0 = " + std::to_string(h3126.e0) + ", e1 = " + std::to_string(h3126.e1));

    bool pow_ok = true;
    std::string pow_detail = "(e0, e1, e2) = (d^2, d(d-1)/2, 0) for d <= 5";
    const MonomialIdeal2 M = MonomialIdeal2::from_gens({Monomial(1, 0), Monomial(0, 1)});
    for (Exp d = 1; d <= 5; ++d) {
      const HilbertSummary hs = hilbert_summary(power(M, d));
      if (!(hs.fit_ok && hs.e0 == d * d && hs.e1 == d * (d - 1) / 2 && hs.e2 == 0)) {
        pow_ok = false;
        pow_detail = "mismatch at M^" + std::to_string(d);
        break;
      }
    }
    suite.check("F7.maximal_ideal_powers", pow_ok, pow_detail);
  }

  // ---- F8: the x^m transfer ---------------------------------------------
  {
    std::mt19937_64 rng(opt.seed);
    bool colon_ok = true, prop_ok = true;
    std::string colon_detail = "100 pairs (L, m), n <= 5";
    std::string prop_detail = colon_detail;
    for (int i = 0; i < 100; ++i) {
      const MonomialIdeal2 L = random_m_primary(rng);
      const Exp m = 1 + static_cast<Exp>(rng() % 3);
      const MonomialIdeal2 I = scale(L, Monomial(m, 0));
      for (Exp n = 0; n <= 5; ++n) {
        const MonomialIdeal2 lhs = colon(power(I, n + 1), I);
        const MonomialIdeal2 rhs = scale(colon(power(L, n + 1), L), Monomial(m * n, 0));
        if (!(lhs == rhs) && colon_ok) {
          colon_ok = false;
          colon_detail = "transfer fails at " + L.str() + ", m = " + std::to_string(m) +
                         ", n = " + std::to_string(n);
        }
      }
      if (!prop_inequality_check(L, m, 5) && prop_ok) {
        prop_ok = false;
        prop_detail = "probe mismatch at " + L.str() + ", m = " + std::to_string(m);
      }
    }
    suite.check("F8.colon_transfer", colon_ok, colon_detail);
    suite.check("F8.prop_inequality", prop_ok, prop_detail);
  }

  return report;
}

std::string verify_report_text(const VerifyReport& report) {
  std::ostringstream out;
  size_t passed = 0;
  for (const Assertion& a : report.assertions) {
    if (a.pass) {
      ++passed;
      out << "PASS " << a.name;
      if (!a.detail.empty()) out << " (" << a.detail << ")";
    } else {
      out << "FAIL " << a.name << ": " << a.detail;
    }
    out << "\n";
  }
  out << "passed " << passed << "/" << report.assertions.size() << " assertions\n";
  return out.str();
}

}  // namespace staircase
