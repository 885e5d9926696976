// Acceptance suite: runs every criterion at its stated scope and tolerance
// (all exact) and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <string>

#include "monhecke/verify.hpp"

using namespace monhecke;

namespace {

struct Criterion {
  int number;
  const char* title;
  const char* suite;
  double budget_seconds;  // informational; printed with the timing
};

int run_all() {
  const Criterion criteria[] = {
      {1, "defining-relation soundness (associativity + inversion)", "algebra", 60},
      {2, "rank-4 indefinite example reproduction", "endoscopy-example", 30},
      {3, "theta isomorphism on full multiplication tables", "theta", 60},
      {4, "canonical-basis certification", "canonical", 120},
      {5, "ch-multiplication case table", "ch-mult", 0},
      {6, "block combinatorics", "blocks", 0},
      {7, "form preservation + biadjunction report", "forms", 0},
      {8, "oracle equivalences (KL, BS, normal forms)", "kl", 0},
  };
  int failures = 0;
  VerifyOptions opts;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport report = run_suite(c.suite, opts);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = report.all_pass();
    int nchecks = static_cast<int>(report.checks.size());
    std::printf("CRITERION %d %s: %s  [%d checks, %.1fs%s]\n", c.number,
                c.title, pass ? "PASS" : "FAIL", nchecks, secs,
                c.budget_seconds > 0 && secs > c.budget_seconds ? ", over budget" : "");
    if (!pass) {
      ++failures;
      for (const auto& chk : report.checks)
        if (!chk.pass)
          std::printf("    failed: %s  (%s)\n", chk.id.c_str(), chk.witness.c_str());
    }
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      ++failures;
      std::printf("    runtime budget exceeded: %.1fs > %.0fs\n", secs, c.budget_seconds);
    }
  }
  std::printf(failures == 0 ? "ACCEPTANCE: PASS\n" : "ACCEPTANCE: FAIL (%d)\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main() { return run_all(); }
