#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end tests driving the command-line binary.  The harness passes the
// binary location in STAIRCASE_CLI_BIN and the repository root in
// STAIRCASE_SOURCE_DIR (for the golden files).

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

std::string required_env(const char* name) {
  const char* v = std::getenv(name);
  REQUIRE_MESSAGE(v != nullptr, "environment variable ", name, " must be set");
  return v;
}

std::string bin() { return required_env("STAIRCASE_CLI_BIN"); }

std::string golden_dir() {
  return required_env("STAIRCASE_SOURCE_DIR") + "/tests/golden";
}

// Runs a shell command hermetically (no inherited seed override).
RunResult run(const std::string& args, const std::string& redirect = "2>/dev/null",
              const std::string& env_prefix = "env -u STAIRCASE_SEED") {
  const std::string cmd = env_prefix + " \"" + bin() + "\" " + args + " " + redirect;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fresh_dir(const char* tag) {
  std::string tmpl = std::string("/tmp/staircase_") + tag + "_XXXXXX";
  char* p = mkdtemp(tmpl.data());
  REQUIRE(p != nullptr);
  return p;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("eval prints the canonical form in text mode") {
  auto r = run("eval 'I = lex(2;1,3); (I^2 : I) & I'");
  CHECK(r.code == 0);
  CHECK(r.out == "mono(x^2, x*y, y^3)\n");

  auto s = run("eval 'sgid(6,11,15,31; 6) * sgid(6,11,15,31; 6,11,31)'");
  CHECK(s.code == 0);
  CHECK(s.out == "sgid(6,11,15,31; 12,17,37)\n");
}

TEST_CASE("JSON output matches the golden files byte for byte") {
  struct Case {
    const char* args;
    const char* file;
  } cases[] = {
      {"classify 'lex(2; 1,3)' --format json --seed 42",
       "classify_lex213.json"},
      {"classify 'lex(4; 2,5,6,8)' --format json --seed 42",
       "classify_lex4_2568.json"},
      {"invariants 'lex(3; 1,2,6)' --format json", "invariants_lex3126.json"},
      {"depths 'mono(x^5, x^3*y^3, x*y^7, y^9)' --horizon 10 --format json",
       "depths_mixed.json"},
      {"reduction 'lex(2; 1,3)' --format json --seed 42 --trials 3",
       "reduction_lex213.json"},
      {"eval 'I = lex(2;1,3); (I^2 : I) & I' --format json",
       "eval_colon.json"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args);
    auto r = run(c.args);
    CHECK(r.code == 0);
    CHECK(r.out == slurp(golden_dir() + "/" + std::string(c.file)));
  }
}

TEST_CASE("usage and parse failures exit with code 1") {
  CHECK(run("classify 'lex(2; 3,1)'", "2>&1").code == 1);
  CHECK(run("classify", "2>&1").code == 1);          // missing argument
  CHECK(run("frobnicate", "2>&1").code == 1);        // unknown subcommand
  CHECK(run("", "2>&1").code == 1);                  // subcommand required
  auto r = run("classify 'mono(x^5, x^3*y^3, x*y^7, y^9)'", "2>&1");
  CHECK(r.code == 1);  // classify is only defined on lex-segment staircases
  CHECK(r.out.find("error:") != std::string::npos);
  CHECK(run("eval 'mono(z)'", "2>&1").code == 1);
  CHECK(run("depths 'sgid(2,3; 2)'", "2>&1").code == 1);  // wrong ideal kind
}

TEST_CASE("--strict turns inconclusive reduction sampling into exit code 2") {
  CHECK(run("reduction 'lex(2; 1,3)' --trials 0 --strict", "2>&1").code == 2);
  CHECK(run("reduction 'lex(2; 1,3)' --trials 0", "2>&1").code == 0);
  CHECK(run("reduction 'lex(2; 1,3)' --trials 3 --strict", "2>&1").code == 0);
}

TEST_CASE("reduction refuses ideals that are principal up to a factor") {
  auto r = run("reduction 'mono(x^3*y^2)'", "2>&1");
  CHECK(r.code == 1);
  CHECK(r.out.find("principal") != std::string::npos);
}

TEST_CASE("tampered expectations make verification exit with code 3") {
  const std::string dir = fresh_dir("expect");
  {
    std::ofstream f(dir + "/tampered.json");
    f << "{\"witness_b\": 5}\n";
  }
  auto r = run("verify-paper --jobs 4 --expectations " + dir +
                   "/tampered.json --format json",
               "2>/dev/null");
  CHECK(r.code == 3);
  CHECK(r.out.find("\"pass\": false") != std::string::npos);
  CHECK(r.out.find("F2.gr_witness") != std::string::npos);
}

TEST_CASE("I/O failures exit with code 4") {
  CHECK(run("verify-paper --expectations /nonexistent/nope.json", "2>&1").code ==
        4);
}

TEST_CASE("the result cache replays bytes and exit codes verbatim") {
  const std::string dir = fresh_dir("cache");
  const std::string args =
      "classify 'lex(2; 1,3)' --format json --seed 42 --cache " + dir;
  auto first = run(args);
  auto second = run(args);
  CHECK(first.code == 0);
  CHECK(second.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == slurp(golden_dir() + "/classify_lex213.json"));

  // One stored entry; a different horizon is a different key.
  CHECK(count_lines(slurp(dir + "/cache.jsonl")) == 1);
  run("classify 'lex(2; 1,3)' --format json --seed 42 --horizon 12 --cache " +
      dir);
  CHECK(count_lines(slurp(dir + "/cache.jsonl")) == 2);
}

TEST_CASE("corrupt cache lines are tolerated") {
  const std::string dir = fresh_dir("cachebad");
  const std::string args =
      "invariants 'lex(2; 1,3)' --format json --cache " + dir;
  auto first = run(args);
  CHECK(first.code == 0);

  // A corrupt interior line is skipped with a warning; a truncated final
  // line (interrupted write) is ignored silently.
  {
    std::ofstream f(dir + "/cache.jsonl", std::ios::app);
    f << "this is not json\n";
    f << "{\"key\": \"half-written";  // no newline
  }
  auto again = run(args, "2>/dev/null");
  CHECK(again.code == 0);
  CHECK(again.out == first.out);
  auto with_err = run(args, "2>&1");
  CHECK(with_err.out.find("ignoring corrupt cache line") != std::string::npos);
}

TEST_CASE("survey emits the fixed header and is parallel-deterministic") {
  auto one = run("survey --dmax 3 --amax 4 --jobs 1");
  auto four = run("survey --dmax 3 --amax 4 --jobs 4");
  CHECK(one.code == 0);
  CHECK(four.code == 0);
  CHECK(one.out == four.out);
  CHECK(count_lines(one.out) == 32);  // header + 31 staircases
  CHECK(one.out.rfind("d,k,a_seq,mu,ord,contracted,e0,e1,colength,cm,"
                      "depth_gr,depth_fiber,r_leq_1,horizon,agree_depth,"
                      "agree_cm,agree_criterion\n",
                      0) == 0);
}

TEST_CASE("the seed comes from the environment unless the flag overrides it") {
  auto flag7 = run("reduction 'lex(2; 1,3)' --format json --seed 7");
  auto env7 = run("reduction 'lex(2; 1,3)' --format json", "2>/dev/null",
                  "env STAIRCASE_SEED=7");
  CHECK(flag7.code == 0);
  CHECK(flag7.out == env7.out);

  auto flag42 = run("reduction 'lex(2; 1,3)' --format json --seed 42");
  auto both = run("reduction 'lex(2; 1,3)' --format json --seed 42",
                  "2>/dev/null", "env STAIRCASE_SEED=7");
  CHECK(both.out == flag42.out);
  CHECK(flag42.out != flag7.out);  // the seed really reaches the sampler
}

TEST_CASE("full verification passes and its JSON is byte-deterministic") {
  auto a = run("verify-paper --jobs 4 --format json");
  auto b = run("verify-paper --jobs 4 --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"pass\": true") != std::string::npos);
  CHECK(a.out.find("\"passed\": 32") != std::string::npos);
}
