#include "staircase/serialize.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace staircase {

const char* to_string(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::positive: return "positive";
    case ProbeStatus::zero: return "zero";
    default: return "inconclusive";
  }
}

const char* to_string(McVerdict v) {
  switch (v) {
    case McVerdict::yes: return "yes";
    case McVerdict::no: return "no";
    default: return "inconclusive";
  }
}

Json json_witness(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  Json j;
  j["n"] = w->n;
  j["monomial"] = w->w.str();
  return j;
}

Json json_classify(const std::string& input, const Classification& c) {
  Json j;
  j["input"] = input;
  j["canonical"] = c.ideal.str();
  j["lex"] = Json{{"d", c.spec.d}, {"k", c.spec.k()}, {"a", c.spec.a}};
  j["factor"] = Json{{"x", c.factor.x}, {"y", c.factor.y}};
  j["mu"] = c.mu_input;
  j["ord"] = c.ord_input;
  j["contracted"] = c.contracted;
  j["e0"] = c.hilbert.e0;
  j["e1"] = c.hilbert.e1;
  j["e2"] = c.hilbert.e2;
  j["colength"] = c.colength_factor;
  j["spread"] = c.hilbert.spread;
  j["height"] = c.hilbert.height;
  j["cm_gr"] = c.verdict.cm_gr;
  j["cm_fiber"] = c.verdict.cm_fiber;
  j["cm_rees"] = c.verdict.cm_rees;
  j["r_leq_1"] = to_string(c.verdict.r_leq_1);
  j["depth_gr"] = c.verdict.depth_gr;
  j["depth_fiber"] = c.verdict.depth_fiber;
  j["depth_rees"] = c.verdict.depth_rees;
  j["horizon"] = c.verdict.horizon;
  j["witness_gr"] = json_witness(c.verdict.witness_gr);
  j["witness_fiber"] = json_witness(c.verdict.witness_fiber);
  j["flags"] = c.verdict.flags;
  return j;
}

Json json_invariants(const std::string& input, const MonomialIdeal2& I,
                     const HilbertSummary& hs) {
  const SplitFactor f = split_common_factor(I);
  Json j;
  j["input"] = input;
  j["canonical"] = I.str();
  j["factor"] = Json{{"x", f.x}, {"y", f.y}};
  j["h"] = hs.h;
  j["e0"] = hs.e0;
  j["e1"] = hs.e1;
  j["e2"] = hs.e2;
  j["n_stab"] = hs.n_stab;
  j["mu"] = hs.mu_seq;
  j["fiber_numerator"] = hs.numerator ? Json(*hs.numerator) : Json(nullptr);
  j["spread"] = hs.spread;
  j["height"] = hs.height;
  j["horizon"] = hs.horizon;
  return j;
}

namespace {

Json json_probe(const ProbeResult& p) {
  Json j;
  j["status"] = to_string(p.status);
  j["witness"] = json_witness(p.witness);
  return j;
}

}  // namespace

Json json_depths(const std::string& input, const MonomialIdeal2& I, const ProbeResult& gr,
                 const ProbeResult& fiber) {
  Json j;
  j["input"] = input;
  j["canonical"] = I.str();
  j["horizon"] = gr.horizon;
  j["gr"] = json_probe(gr);
  j["fiber"] = json_probe(fiber);
  return j;
}

Json json_reduction(const std::string& input, const MonomialIdeal2& I,
                    const SplitFactor& factor, const McResult& mc) {
  Json j;
  j["input"] = input;
  j["canonical"] = I.str();
  j["factor"] = Json{{"x", factor.x}, {"y", factor.y}};
  j["r_leq_1"] = to_string(mc.verdict);
  j["prime"] = mc.prime;
  j["seed"] = mc.seed;
  Json pairs = Json::array();
  for (const PairReport& pr : mc.pairs) {
    Json p;
    p["coeffs"] = Json::array({pr.pair.coeffs[0], pr.pair.coeffs[1]});
    p["colength"] = pr.colength;
    p["is_reduction"] = pr.is_reduction;
    p["i2_eq_ji"] = pr.i2_eq_ji;
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

namespace {

bool all_scalar(const Json& a) {
  for (const auto& v : a)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

std::string scalar_str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();  // numbers, booleans, null
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array()) {
    if (all_scalar(j)) {
      std::string s = "[";
      for (size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_str(j[i]);
      s += "]";
      out.emplace_back(prefix, s);
      return;
    }
    for (size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out.emplace_back(prefix, scalar_str(j));
}

}  // namespace

std::string render_text(const Json& j) {
  std::vector<std::pair<std::string, std::string>> lines;
  flatten(j, "", lines);
  size_t width = 0;
  for (const auto& [k, v] : lines) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : lines) {
    out << k;
    for (size_t i = k.size(); i < width; ++i) out << ' ';
    out << " = " << v << "\n";
  }
  return out.str();
}

}  // namespace staircase
