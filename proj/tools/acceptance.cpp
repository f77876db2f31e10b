// One PASS/FAIL line per acceptance criterion, over the full check suite at
// the pinned configuration.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "nclorentz/suites.hpp"

using namespace nclorentz;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> prefixes;
  double budget_seconds;  // 0 means no runtime bound
};

bool has_prefix(const std::string& id, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes)
    if (id.rfind(p, 0) == 0) return true;
  return false;
}

}  // namespace

int main() {
  RunConfig cfg;
  cfg.lambdas = {0.0, 0.4, -0.4};
  cfg.exact_lambdas = {Rational(0), Rational(1), Rational(-1)};
  cfg.samples = 100;
  cfg.seed = 7;
  cfg.tolerance = 1e-9;
  cfg.timing = true;

  const std::vector<Criterion> criteria = {
      {1, "trivial Lorentz sector forces r = 0", {"prop1."}, 5.0},
      {2, "sub-bialgebra reduction and the three CYBE solutions", {"lemma1.", "prop2."}, 5.0},
      {3, "Lorentz table and the gamma = 0 embedding", {"lorentz."}, 0.0},
      {4, "2+1 classification", {"twoplusone."}, 0.0},
      {5, "PHS cross-validation", {"phs."}, 60.0},
      {6, "exact Poisson suite", {"poisson."}, 0.0},
      {7, "quantum suite", {"quantize."}, 0.0},
      {8, "cocommutator list", {"delta."}, 0.0},
      {9, "contraction suite", {"contract."}, 0.0},
  };

  const auto t0 = std::chrono::steady_clock::now();
  const auto records = run_suite("all", cfg);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::vector<bool> claimed(records.size(), false);
  int failed = 0;
  for (const auto& c : criteria) {
    std::size_t n = 0;
    double seconds = 0.0;
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (!has_prefix(records[i].id, c.prefixes)) continue;
      claimed[i] = true;
      ++n;
      seconds += records[i].seconds;
      if (records[i].status != Status::pass) bad.push_back(records[i].id + " (" + to_string(records[i].status) + ")");
    }
    if (n == 0) bad.push_back("no checks");
    const bool slow = c.budget_seconds > 0 && seconds >= c.budget_seconds;
    if (slow) bad.push_back("runtime " + std::to_string(seconds) + " s");
    const bool ok = bad.empty();
    failed += !ok;
    std::printf("criterion %d %s: %s (%zu checks, %.3f s)", c.number, c.title.c_str(), ok ? "PASS" : "FAIL", n, seconds);
    for (std::size_t k = 0; k < bad.size(); ++k) std::printf("%s%s", k ? ", " : " failing: ", bad[k].c_str());
    std::printf("\n");
  }
  for (std::size_t i = 0; i < records.size(); ++i)
    if (!claimed[i]) std::printf("unassigned check %s\n", records[i].id.c_str());
  std::printf("%d of %zu criteria failed, %zu checks in %.3f s\n", failed, criteria.size(), records.size(), total);
  return failed == 0 ? 0 : 1;
}
