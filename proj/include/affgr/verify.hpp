#pragma once

// Property suites behind `affgr verify` and the acceptance binary. Each suite
// checks one claim exhaustively over a bounded range and reports the first
// counterexample it meets.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "affgr/lie_type.hpp"

namespace affgr {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  long checked = 0;
  double seconds = 0;

  void fail(std::string why);
};

struct SuiteOptions {
  uint64_t seed = 0x5eed;
  int samples = 2000;
};

/// Names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();
/// Runs one named suite (or every suite for "all") on a type.
std::vector<CheckResult> run_suite(LieType t, const std::string& name, const SuiteOptions& opt);

CheckResult check_length_oracle(LieType t, int max_len);
CheckResult check_minrep_series(LieType t, int through);
CheckResult check_segment_factorization(LieType t, int max_len);
CheckResult check_canonical_generating(LieType t, int n_max);
CheckResult check_antidominance(LieType t, int bound);
CheckResult check_length_additivity(LieType t, int sigma_len, int coord_min);
CheckResult check_star_decomposition(LieType t, int sigma_len);
CheckResult check_segment_characterizations(LieType t);
/// Every triple of total length <= total_len plus `samples` random longer ones.
/// Passes when each non-associative triple is one where a*b is length-additive
/// but leaves the minimal representatives, so that (a*b)*c = 0.
CheckResult check_star_associativity(LieType t, int total_len, uint64_t seed, int samples);
CheckResult check_chain(LieType t);
CheckResult check_pd_status(LieType t);
CheckResult check_exponents(LieType t);
CheckResult check_classification(LieType t);

/// Coefficients of prod_i 1 / (1 - q^{e_i}) through q^through, by direct
/// power-series multiplication.
std::vector<int64_t> series_coefficients(const std::vector<int>& exps, int through);

/// Exponents from the closed-form family tables.
std::vector<int> standard_exponents(LieType t);

/// A1, C_n and G2: the types whose Levi orbit of lambda_0 is a chain.
bool expected_chain(LieType t);

struct Criterion {
  int id;
  std::string title;
  /// 0 means no limit.
  double time_limit_seconds;
  std::function<CheckResult()> run;
};

/// The acceptance criteria, each aggregated over its type list.
std::vector<Criterion> acceptance_criteria();

}  // namespace affgr
