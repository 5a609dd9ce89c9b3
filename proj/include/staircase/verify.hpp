#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

// Expected values for the fixture suite.  The defaults are the shipped
// baseline; a JSON file can override any subset (the tamper negative-control
// in the tests exercises exactly that).
struct Expectations {
  // Colon fixture: (x^3, x^2*y)^2 : (x^3).
  std::vector<std::pair<Exp, Exp>> colon_gens = {{3, 0}, {2, 1}, {1, 2}};
  // Depth-zero witness for (x^5, x^3*y^3, x*y^7, y^9).
  Exp witness_n = 1;
  Exp witness_a = 2;
  Exp witness_b = 6;
  // Semigroup fixture <6, 11, 15, 31> with I = (6, 11, 31), J = (6).
  Exp sg_frobenius = 25;
  Exp sg_lambda = 1;
  Exp sg_gap = 22;
  // Hilbert fixtures.
  std::vector<Exp> lex213_h = {4, 13, 27};
  Exp lex213_e0 = 5;
  Exp lex213_e1 = 1;
  Exp lex213_e2 = 0;
  Exp lex3126_e0 = 12;
  Exp lex3126_e1 = 3;

  // Partial override from a JSON object; unknown keys are rejected.  Throws
  // std::runtime_error on I/O failure and std::invalid_argument on bad
  // content.
  static Expectations from_file(const std::string& path);
};

struct Assertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int jobs = 1;
  Exp trials = 3;
  std::uint64_t prime = 2147483647ULL;
  std::uint64_t seed = 42;
};

struct VerifyReport {
  std::vector<Assertion> assertions;
  bool all_pass = true;
};

// Runs the full fixture suite (criteria groups F1..F8) against the expected
// values.  Deterministic for fixed options.
VerifyReport verify_paper(const Expectations& expected, const VerifyOptions& opt);

std::string verify_report_text(const VerifyReport& report);

}  // namespace staircase
