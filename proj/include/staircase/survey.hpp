#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

// Every lex spec with d <= dmax, 0 <= k <= d, 1 <= a_1 < ... < a_k <= amax,
// in lexicographic (d, k, a-sequence) order.
std::vector<LexSpec> enumerate_lex_specs(Exp dmax, Exp amax);

struct SurveyOptions {
  Exp dmax = 6;
  Exp amax = 9;
  Exp horizon = 8;
  Exp trials = 3;
  std::uint64_t prime = 2147483647ULL;
  std::uint64_t seed = 42;
  int jobs = 1;
};

struct SurveyResult {
  std::string csv;        // header + one row per spec, canonical order
  bool all_agree = true;  // every agreement boolean on every row
  Exp rows = 0;
};

// Classifies every enumerated ideal and emits one CSV row each.  Output is
// byte-identical for any worker count: rows are buffered by index and each
// ideal gets its own derived seed splitmix64(seed ^ fnv1a64(canonical)).
SurveyResult run_survey(const SurveyOptions& opt);

}  // namespace staircase
