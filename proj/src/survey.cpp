#include "staircase/survey.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "staircase/depth.hpp"
#include "staircase/reduction.hpp"

namespace staircase {

std::vector<LexSpec> enumerate_lex_specs(Exp dmax, Exp amax) {
  if (dmax < 1) throw std::invalid_argument("survey: dmax must be positive");
  if (amax < 1) throw std::invalid_argument("survey: amax must be positive");
  std::vector<LexSpec> specs;
  for (Exp d = 1; d <= dmax; ++d) {
    for (Exp k = 0; k <= d; ++k) {
      if (k > amax) break;  // no strictly increasing sequence fits
      // Lexicographically first k-subset of {1..amax}.
      std::vector<Exp> a(static_cast<size_t>(k));
      for (Exp i = 0; i < k; ++i) a[static_cast<size_t>(i)] = i + 1;
      for (;;) {
        specs.emplace_back(d, a);
        if (k == 0) break;
        // Advance to the next combination in lexicographic order.
        Exp i = k - 1;
        while (i >= 0 && a[static_cast<size_t>(i)] == amax - (k - 1 - i)) --i;
        if (i < 0) break;
        ++a[static_cast<size_t>(i)];
        for (Exp j = i + 1; j < k; ++j)
          a[static_cast<size_t>(j)] = a[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }
  return specs;
}

namespace {

struct Row {
  std::string text;
  bool agree = true;
};

Row survey_row(const LexSpec& spec, const SurveyOptions& opt) {
  const MonomialIdeal2 I = from_lex_spec(spec);
  ClassifyOptions co;
  co.horizon = opt.horizon;
  co.trials = opt.trials;
  co.prime = opt.prime;
  co.seed = splitmix64(opt.seed ^ fnv1a64(I.str()));
  const Classification c = classify(I, co);
  const DepthVerdict& v = c.verdict;

  const bool agree_depth = spec.k() == 0 || v.depth_gr == v.depth_fiber;
  const bool agree_cm = v.cm_gr == v.cm_fiber && v.cm_fiber == v.cm_rees;
  const bool agree_criterion =
      std::find(v.flags.begin(), v.flags.end(), "criterion-mismatch") == v.flags.end();

  std::ostringstream row;
  row << spec.d << "," << spec.k() << ",";
  for (size_t i = 0; i < spec.a.size(); ++i) row << (i ? ":" : "") << spec.a[i];
  row << "," << c.mu_input << "," << c.ord_input << "," << (c.contracted ? 1 : 0) << ","
      << c.hilbert.e0 << "," << c.hilbert.e1 << "," << c.colength_factor << ","
      << (v.cm_gr ? 1 : 0) << "," << v.depth_gr << "," << v.depth_fiber << ","
      << to_string(v.r_leq_1) << "," << v.horizon << "," << (agree_depth ? 1 : 0) << ","
      << (agree_cm ? 1 : 0) << "," << (agree_criterion ? 1 : 0) << "\n";
  return Row{row.str(), agree_depth && agree_cm && agree_criterion};
}

}  // namespace

SurveyResult run_survey(const SurveyOptions& opt) {
  const std::vector<LexSpec> specs = enumerate_lex_specs(opt.dmax, opt.amax);
  std::vector<Row> rows(specs.size());

  const int jobs = std::max(1, opt.jobs);
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      try {
        rows[i] = survey_row(specs[i], opt);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  SurveyResult res;
  res.rows = static_cast<Exp>(specs.size());
  std::string csv =
      "d,k,a_seq,mu,ord,contracted,e0,e1,colength,cm,depth_gr,depth_fiber,r_leq_1,"
      "horizon,agree_depth,agree_cm,agree_criterion\n";
  for (const Row& r : rows) {
    csv += r.text;
    res.all_agree = res.all_agree && r.agree;
  }
  res.csv = std::move(csv);
  return res;
}

}  // namespace staircase
