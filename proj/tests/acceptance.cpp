// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact equalities over Q; there is no numerical tolerance.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hopfelim/cli.hpp"
#include "hopfelim/elimination.hpp"
#include "hopfelim/suites.hpp"
#include "oracles.hpp"

using namespace hopfelim;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr int kFullDegree = 8;

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome from_suite(SuiteResult (*suite)(const SuiteConfig&)) {
  SuiteConfig cfg;
  cfg.seed = kSeed;
  cfg.degree_cap = kFullDegree;
  const SuiteResult r = suite(cfg);
  return {r.passed, r.name + ", " + std::to_string(r.checks) + " checks: " + r.detail};
}

Outcome dimensions() {
  Outcome o = from_suite(suite_dimensions);
  // Independent brute-force enumeration for two letters.
  const std::vector<std::int64_t> frozen = {2, 1, 2, 3, 6, 9, 18, 30};
  std::vector<std::int64_t> brute;
  for (int n = 1; n <= kFullDegree; ++n) brute.push_back(oracle::lyndon_count(2, n));
  const auto rows = bigraded_dimension_audit(1, 1, kFullDegree);
  bool ok = brute == frozen;
  for (std::size_t i = 0; i < rows.size(); ++i) ok = ok && rows[i].lhs == frozen[i] && rows[i].rhs() == frozen[i];
  if (!ok) {
    o.passed = false;
    o.detail += "; two-letter sequence mismatch";
  } else {
    o.detail += "; both columns equal 2,1,2,3,6,9,18,30";
  }
  return o;
}

std::string read_file(const std::string& name) {
  std::ifstream f(std::string(HOPFELIM_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome cli() {
  std::istringstream none;
  const CommandResult check = run_command({"check", "--seed", "42", "--max", "5"}, none);
  const CommandResult dims = run_command({"dims", "--v", "1", "--w", "1", "--max", "5", "--format", "json"}, none);
  const CommandResult elim =
      run_command({"eliminate", "--v", "v", "--w", "s", "[v,s]", "--format", "json"}, none);
  const bool dims_ok = dims.exit_code == 0 && dims.out == read_file("dims_1_1_max5.json");
  const bool elim_ok = elim.exit_code == 0 && elim.out == read_file("eliminate_v_s.json");
  return {check.exit_code == 0 && dims_ok && elim_ok,
          "check exit " + std::to_string(check.exit_code) + ", dims json " + (dims_ok ? "matches" : "differs") +
              ", eliminate json " + (elim_ok ? "matches" : "differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Hopf axioms", [] { return from_suite(suite_hopf_axioms); }},
      {"inverse maps", [] { return from_suite(suite_inverse_maps); }},
      {"module-algebra laws", [] { return from_suite(suite_module_algebra); }},
      {"smash coherence", [] { return from_suite(suite_smash); }},
      {"elimination, dimension form", dimensions},
      {"elimination, constructive form", [] { return from_suite(suite_elimination); }},
      {"freeness", [] { return from_suite(suite_freeness); }},
      {"free Lie kernel", [] { return from_suite(suite_free_lie); }},
      {"command line", cli},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s (%.2fs) %s\n", i + 1, criteria[i].first, o.passed ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
