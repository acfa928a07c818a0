// Copyright 2026 The ddpp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddpp/indexing.hpp"
#include "ddpp/test_functions.hpp"

namespace ddpp {

/// Declarative convergence study: for each N, factorize, sample R patterns,
/// estimate, then regress log empirical variance on log N and test normality
/// of the estimates per N.
struct ExperimentPlan {
  TestFamily family = TestFamily::bump;
  double gamma = 0.0;
  long long truncation = 100000;
  int d = 1;
  std::vector<long long> n_values;
  long long replications = 2;
  std::uint64_t base_seed = 0;
  std::optional<std::vector<int>> selector;  // projection study when iota < d
  bool exact_variance = false;  // regression on exact variances, no sampling
  int table_max_freq = 0;       // exact path; 0 -> max n_i - 1 over the designs
  double slope_tolerance = 0.3;
  int threads = 0;
};

struct RegressionReport {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_ci_lo = 0.0;
  double slope_ci_hi = 0.0;
  std::vector<long long> n_values;
  std::vector<double> variances;  // empirical (unbiased divisor) or exact
  double expected_slope = 0.0;
  bool slope_within_tolerance = false;
};

struct NormalityReport {
  std::string method = "anderson-darling";
  std::vector<long long> n_values;
  std::vector<double> statistics;
  std::vector<double> p_values;
  std::vector<double> p_adjusted;  // Holm, across the N values of one study
};

struct StudyResult {
  int d = 0;
  int iota = 0;
  std::vector<int> selector;
  RegressionReport regression;
  NormalityReport normality;
};

/// Expected log-log slope: -1 - 1/d when the function's Sobolev regularity
/// exceeds 1/2, else -1 - 2s/d with s the regularity supremum.
double expected_slope(const TestFunctionSpec& spec, int d);

/// (statistic, p-value) of the composite-normality check on raw estimates.
/// Requires >= 20 values; throws on degenerate samples.
std::pair<double, double> normality_check(const std::vector<double>& estimates);

StudyResult run_convergence_study(const ExperimentPlan& plan);

/// One pass per selector over shared point patterns (a single realization per
/// (N, replication) serves every projection, as in the reference protocol).
std::vector<StudyResult> run_projection_study(const ExperimentPlan& plan,
                                              const std::vector<SubsetSelector>& selectors);

/// Every validation problem collected up front; thrown before any sampling.
class PlanError : public std::invalid_argument {
 public:
  PlanError(std::string msg, std::vector<std::string> issues)
      : std::invalid_argument(std::move(msg)), issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

/// Flat key-value plan text: one `key = value` per line, lists by repeating
/// the key (N = 16 on several lines), '#' comments. Unknown keys are errors.
ExperimentPlan parse_plan_text(const std::string& text);
ExperimentPlan load_plan(const std::string& path);

/// CSV rows (d, iota, N, empirical_variance, p_value_adjusted) and a JSON
/// report with slope, CI, expected slope and pass/fail flags.
void save_study(const std::vector<StudyResult>& results, const std::string& csv_path,
                const std::string& json_path);

}  // namespace ddpp
