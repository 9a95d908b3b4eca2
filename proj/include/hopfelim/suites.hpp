#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hopfelim/exec.hpp"

namespace hopfelim {

// Exact-identity property suites. Each suite has its own degree bound; the
// effective bound is min(own bound, degree_cap), so a small cap gives a
// quick smoke run and a cap of 8 gives the full-size run.
struct SuiteConfig {
  std::uint64_t seed = 42;
  int degree_cap = 8;
  Exec exec = Exec::parallel;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;
};

SuiteResult suite_hopf_axioms(const SuiteConfig& cfg);
SuiteResult suite_inverse_maps(const SuiteConfig& cfg);
SuiteResult suite_module_algebra(const SuiteConfig& cfg);
SuiteResult suite_smash(const SuiteConfig& cfg);
SuiteResult suite_dimensions(const SuiteConfig& cfg);
SuiteResult suite_elimination(const SuiteConfig& cfg);
SuiteResult suite_freeness(const SuiteConfig& cfg);
SuiteResult suite_free_lie(const SuiteConfig& cfg);

std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg);

}  // namespace hopfelim
