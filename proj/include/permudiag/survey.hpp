#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permudiag/fillings.hpp"
#include "permudiag/matcount.hpp"
#include "permudiag/permutation.hpp"

namespace permudiag {

struct SurveyRow {
  std::string w;
  long long ell = 0;
  ClassificationFlags flags;
  long long ao = 0;
  long long rp = 0;
  long long interval_size = 0;
  IntPolynomial poincare;
  std::vector<long long> filling_counts;  // kAllFamilies order
  std::vector<std::optional<long long>> m_evals;  // per requested prime
};

struct SurveyOptions {
  int n = 4;
  std::vector<int> primes;  // M_eval columns; empty = none
  int jobs = 1;
  long long budget = kDefaultNodeBudget;
};

/// One row per w in S_n, lexicographic order; deterministic across runs and
/// job counts. Internal consistency (ao = rp, interval = P_w(1)) is checked
/// row by row.
std::vector<SurveyRow> build_survey(const SurveyOptions& options);

std::string survey_to_csv(const std::vector<SurveyRow>& rows,
                          const std::vector<int>& primes);
std::string survey_to_json(const std::vector<SurveyRow>& rows,
                           const std::vector<int>& primes);

}  // namespace permudiag
