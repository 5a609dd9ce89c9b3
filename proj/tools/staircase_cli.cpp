#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "staircase/cache.hpp"
#include "staircase/depth.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/parser.hpp"
#include "staircase/reduction.hpp"
#include "staircase/serialize.hpp"
#include "staircase/survey.hpp"
#include "staircase/verify.hpp"

namespace {

using namespace staircase;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitViolation = 3;
constexpr int kExitIo = 4;

struct Common {
  std::string format = "text";
  Exp horizon = 0;  // 0 = automatic
  Exp trials = 3;
  std::uint64_t prime = 2147483647ULL;
  std::uint64_t seed = 42;
  int jobs = 1;
  std::string cache_dir;
  bool strict = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--horizon", c.horizon, "Analysis horizon (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--trials", c.trials, "Monte-Carlo trials (0 disables sampling)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--prime", c.prime, "Coefficient field size for sampling")
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "Random seed (or env STAIRCASE_SEED; the flag wins)")
      ->envname("STAIRCASE_SEED")
      ->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--cache", c.cache_dir, "Result cache directory");
  cmd->add_flag("--strict", c.strict, "Exit 2 when a result is inconclusive");
}

std::string param_string(const Common& c) {
  std::ostringstream s;
  s << "format=" << c.format << ";horizon=" << c.horizon << ";trials=" << c.trials
    << ";prime=" << c.prime << ";seed=" << c.seed << ";strict=" << (c.strict ? 1 : 0);
  return s.str();
}

std::string emit(const Common& c, const Json& j) {
  if (c.format == "json") return j.dump(2) + "\n";
  return render_text(j);
}

const MonomialIdeal2& need_poly(const Value& v, const char* cmd) {
  if (!std::holds_alternative<MonomialIdeal2>(v))
    throw std::invalid_argument(std::string(cmd) + " expects a polynomial-ring ideal");
  return std::get<MonomialIdeal2>(v);
}

bool has_inconclusive_flag(const std::vector<std::string>& flags) {
  for (const std::string& f : flags)
    if (f.size() >= 12 && f.substr(f.size() - 12) == "inconclusive") return true;
  return false;
}

using Outcome = std::pair<std::string, int>;

Outcome do_classify(const std::string& input, const Value& v, const Common& c) {
  const MonomialIdeal2& I = need_poly(v, "classify");
  ClassifyOptions opt;
  opt.horizon = c.horizon;
  opt.trials = c.trials;
  opt.prime = c.prime;
  opt.seed = c.seed;
  const Classification cls = classify(I, opt);
  int code = kExitOk;
  const auto& flags = cls.verdict.flags;
  const bool violation =
      std::find(flags.begin(), flags.end(), "depth-mismatch") != flags.end() ||
      std::find(flags.begin(), flags.end(), "criterion-mismatch") != flags.end();
  if (violation) {
    code = kExitViolation;
  } else if (c.strict && (cls.verdict.r_leq_1 == TriVerdict::inconclusive ||
                          has_inconclusive_flag(flags))) {
    code = kExitInconclusive;
  }
  return {emit(c, json_classify(input, cls)), code};
}

Outcome do_invariants(const std::string& input, const Value& v, const Common& c) {
  const MonomialIdeal2& I = need_poly(v, "invariants");
  const HilbertSummary hs = hilbert_summary(I, c.horizon);
  const int code = (c.strict && !hs.fit_ok) ? kExitInconclusive : kExitOk;
  return {emit(c, json_invariants(input, I, hs)), code};
}

Outcome do_depths(const std::string& input, const Value& v, const Common& c) {
  const MonomialIdeal2& I = need_poly(v, "depths");
  const Exp N = c.horizon > 0 ? c.horizon : default_horizon(I);
  const ProbeResult gr = gr_positive_depth_probe(I, N);
  const ProbeResult fiber = fiber_positive_depth_probe(I, N);
  const bool inconclusive =
      gr.status == ProbeStatus::inconclusive || fiber.status == ProbeStatus::inconclusive;
  const int code = (c.strict && inconclusive) ? kExitInconclusive : kExitOk;
  return {emit(c, json_depths(input, I, gr, fiber)), code};
}

Outcome do_reduction(const std::string& input, const Value& v, const Common& c) {
  const MonomialIdeal2& I = need_poly(v, "reduction");
  const SplitFactor factor = split_common_factor(I);
  if (factor.cofactor.is_unit())
    throw std::invalid_argument(
        "reduction: the ideal is principal up to its monomial factor; r = 0 trivially");
  const McResult mc = monte_carlo_r_leq_1(factor.cofactor, c.trials, c.prime, c.seed);
  const int code =
      (c.strict && mc.verdict == McVerdict::inconclusive) ? kExitInconclusive : kExitOk;
  return {emit(c, json_reduction(input, I, factor, mc)), code};
}

Outcome do_eval(const std::string& input, const Value& v, const Common& c) {
  Json j;
  j["input"] = input;
  j["canonical"] = to_text(v);
  if (c.format == "json") return {j.dump(2) + "\n", kExitOk};
  return {to_text(v) + "\n", kExitOk};
}

// Evaluate-and-report commands share the cache plumbing: on a hit the stored
// bytes and exit code replay verbatim.
int cached_command(const std::string& name, const std::string& expr, const Common& c,
                   const std::function<Outcome(const std::string&, const Value&, const Common&)>& fn) {
  const Value v = evaluate(expr);
  std::optional<ResultCache> cache;
  std::string key;
  if (!c.cache_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(c.cache_dir, ec);
    if (ec) throw IoError("cannot create cache directory " + c.cache_dir);
    cache.emplace(c.cache_dir);
    key = ResultCache::make_key(to_text(v), name, param_string(c));
    if (const auto hit = cache->get(key)) {
      std::cout << hit->output;
      return hit->exit_code;
    }
  }
  const Outcome out = fn(expr, v, c);
  if (cache) cache->put(key, {out.first, out.second});
  std::cout << out.first;
  return out.second;
}

Json json_verify(const VerifyReport& report) {
  Json j;
  Json list = Json::array();
  size_t passed = 0;
  for (const Assertion& a : report.assertions) {
    Json item;
    item["name"] = a.name;
    item["pass"] = a.pass;
    item["detail"] = a.detail;
    list.push_back(std::move(item));
    if (a.pass) ++passed;
  }
  j["assertions"] = std::move(list);
  j["passed"] = passed;
  j["total"] = report.assertions.size();
  j["pass"] = report.all_pass;
  return j;
}

int do_verify_paper(const Common& c, const std::string& expectations_file) {
  Expectations expected;
  if (!expectations_file.empty()) expected = Expectations::from_file(expectations_file);
  VerifyOptions opt;
  opt.jobs = c.jobs;
  opt.trials = c.trials;
  opt.prime = c.prime;
  opt.seed = c.seed;
  const VerifyReport report = verify_paper(expected, opt);
  if (c.format == "json")
    std::cout << json_verify(report).dump(2) << "\n";
  else
    std::cout << verify_report_text(report);
  return report.all_pass ? kExitOk : kExitViolation;
}

int do_survey(const Common& c, Exp dmax, Exp amax) {
  SurveyOptions opt;
  opt.dmax = dmax;
  opt.amax = amax;
  opt.horizon = c.horizon > 0 ? c.horizon : 8;
  opt.trials = c.trials;
  opt.prime = c.prime;
  opt.seed = c.seed;
  opt.jobs = c.jobs;
  const SurveyResult res = run_survey(opt);
  std::cout << res.csv;
  return res.all_agree ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact staircase calculator for monomial ideals in K[x,y]"};
  app.require_subcommand(1);

  Common common;
  std::string expr;
  std::string expectations_file;
  Exp dmax = 6, amax = 9;

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate an ideal expression");
  eval_cmd->add_option("expr", expr, "Ideal expression")->required();
  add_common(eval_cmd, common);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Full depth/CM classification of a lex-segment ideal");
  classify_cmd->add_option("expr", expr, "Ideal expression")->required();
  add_common(classify_cmd, common);

  CLI::App* invariants_cmd =
      app.add_subcommand("invariants", "Hilbert function, multiplicities and fiber data");
  invariants_cmd->add_option("expr", expr, "Ideal expression")->required();
  add_common(invariants_cmd, common);

  CLI::App* depths_cmd =
      app.add_subcommand("depths", "Depth probes for the associated graded ring and fiber cone");
  depths_cmd->add_option("expr", expr, "Ideal expression")->required();
  add_common(depths_cmd, common);

  CLI::App* reduction_cmd =
      app.add_subcommand("reduction", "Monte-Carlo reduction-number probe (r <= 1)");
  reduction_cmd->add_option("expr", expr, "Ideal expression")->required();
  add_common(reduction_cmd, common);

  CLI::App* verify_cmd =
      app.add_subcommand("verify-paper", "Run the built-in fixture suite (criteria F1..F8)");
  verify_cmd->add_option("--expectations", expectations_file,
                         "JSON file overriding expected fixture values");
  add_common(verify_cmd, common);

  CLI::App* survey_cmd =
      app.add_subcommand("survey", "CSV survey over the lex-segment family");
  survey_cmd->add_option("--dmax", dmax, "Maximum lex degree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  survey_cmd->add_option("--amax", amax, "Maximum a-sequence entry")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(survey_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int code = kExitUsage;
  try {
    if (app.got_subcommand(eval_cmd)) {
      code = cached_command("eval", expr, common, do_eval);
    } else if (app.got_subcommand(classify_cmd)) {
      code = cached_command("classify", expr, common, do_classify);
    } else if (app.got_subcommand(invariants_cmd)) {
      code = cached_command("invariants", expr, common, do_invariants);
    } else if (app.got_subcommand(depths_cmd)) {
      code = cached_command("depths", expr, common, do_depths);
    } else if (app.got_subcommand(reduction_cmd)) {
      code = cached_command("reduction", expr, common, do_reduction);
    } else if (app.got_subcommand(verify_cmd)) {
      code = do_verify_paper(common, expectations_file);
    } else if (app.got_subcommand(survey_cmd)) {
      code = do_survey(common, dmax, amax);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::cout.flush();
  if (!std::cout) {
    std::cerr << "error: failed writing output\n";
    return kExitIo;
  }
  return code;
}
