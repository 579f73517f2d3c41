#pragma once

#include <string>
#include <vector>

#include "permudiag/matcount.hpp"

namespace permudiag {

struct SuiteOptions {
  int n_max = 0;  // 0 = suite default
  std::vector<int> primes;
  int jobs = 1;
  bool long_run = false;
  long long budget = kDefaultNodeBudget;
};

struct SuiteResult {
  std::string id;
  bool ok = false;
  int exit_code = 1;  // 0 pass, 1 assertion failure, 3 feasibility refusal
  std::vector<std::string> lines;  // one per checked instance
};

inline const std::vector<std::string> kSuiteIds = {
    "thm-equinumerous", "thm-hlss",      "thm-matpoincare",
    "cor-smooth",       "conj-pseudofill", "appendix-chromatic",
    "remarks-45",       "lemma-qdiff"};

/// Runs one verification suite exhaustively, listing every checked instance
/// and reporting counterexamples verbatim.
SuiteResult run_suite(const std::string& id, const SuiteOptions& options);

}  // namespace permudiag
