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

#include <vector>

namespace ddpp {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile (Acklam's rational approximation, |err| < 1.2e-9,
/// refined with one Halley step). p in (0,1).
double normal_quantile(double p);

/// Regularized incomplete beta I_x(a,b) by continued fraction.
double regularized_incomplete_beta(double x, double a, double b);

/// Student-t CDF and quantile with `dof` degrees of freedom.
double student_t_cdf(double t, double dof);
double student_t_quantile(double p, double dof);

/// Sample mean and the unbiased ((n-1)-divisor) variance.
double sample_mean(const std::vector<double>& xs);
double sample_variance(const std::vector<double>& xs);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double slope_ci_lo = 0.0;  // Student-t interval at the requested level
  double slope_ci_hi = 0.0;
};

/// Ordinary least squares of y on x with a Student-t confidence interval for
/// the slope. Requires >= 3 points.
LinearFit ols_fit(const std::vector<double>& x, const std::vector<double>& y, double level);

struct AdTest {
  double statistic = 0.0;  // A*^2 (small-sample adjusted)
  double p_value = 1.0;
};

/// Anderson-Darling test of composite normality (mean and variance estimated
/// from the sample); p-value per the D'Agostino-Stephens case-3 formulas.
/// Throws std::invalid_argument for n < 8 or a degenerate (zero-variance)
/// sample.
AdTest anderson_darling_normality(std::vector<double> sample);

/// Holm step-down adjustment; output is >= input and monotone after sorting.
std::vector<double> holm_adjust(const std::vector<double>& p_values);

}  // namespace ddpp
