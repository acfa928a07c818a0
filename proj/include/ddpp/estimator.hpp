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

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "ddpp/fourier.hpp"
#include "ddpp/integrand.hpp"
#include "ddpp/pattern.hpp"

namespace ddpp {

/// Axis-aligned rectangle a_i < b_i.
struct RectangleDomain {
  std::vector<double> lower;
  std::vector<double> upper;

  RectangleDomain(std::vector<double> lo, std::vector<double> hi);
  int dim() const { return static_cast<int>(lower.size()); }
  double volume() const;
};

struct ConfidenceInterval {
  double level = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

struct Estimate {
  double value = 0.0;
  std::optional<double> sigma2_hat;
  std::optional<ConfidenceInterval> ci;
  // Provenance.
  FactorVector factors;
  long long N = 0;
  int d = 0;
  std::vector<int> selector;  // 1-based coordinate subset the integrand saw
  SeedRecord seed;
};

/// kappa_i > 0, the per-axis limits n_i N^{-1/d} of the asymptotic frame.
struct KappaVector {
  std::vector<double> kappas;
  explicit KappaVector(std::vector<double> ks);
};

/// kappa_i = n_i * N^{-1/d} read off one concrete design.
KappaVector kappa_from_design(const FactorVector& fv);

/// mu_hat = (1/N) sum f((u_j)_I). Unbiased for the integral of f over
/// [0,1]^iota. Requires f.iota == |I| and pattern dim >= max(I).
Estimate estimate_mean(const IntegrandHandle& f, const PointPattern& p, const SubsetSelector& I);

/// Rectangle version: prod(b_i - a_i) times the mean of f(a + (b-a) * u_I).
Estimate estimate_rectangle(const IntegrandHandle& f, const PointPattern& p,
                            const SubsetSelector& I, const RectangleDomain& dom);

/// Exact finite-N variance, difference-set form:
/// (1/N) sum_j |fhat(j)|^2 - (1/N^2) sum_{j,k in E_N} |fhat(j-k)|^2.
/// Cost O(N^2); algebraically identical to exact_variance_var2.
double exact_variance_var1(const FourierTable& tbl, const FactorVector& fv);

/// Exact finite-N variance, weighted form over F_N:
/// (1/N) sum_j |fhat(j)|^2 - (1/N^2) sum_{j in F_N} prod(n_i - |j_i|) |fhat(j)|^2.
/// Cost O(|table|).
double exact_variance_var2(const FourierTable& tbl, const FactorVector& fv);

/// Asymptotic constant sigma^2(f_I) = sum_j (sum_{i in I} |j_i|/kappa_i) |fhat_I(j)|^2
/// over the table's support. kappa is indexed by the ambient axes in I.
double sigma2_asymptotic(const FourierTable& tbl, const SubsetSelector& I,
                         const KappaVector& kappa);

/// Plug-in estimator N^{1/d} sum_{j in F_N} (sum_i |j_i|/n_i) |fhat(j)|^2;
/// entries outside F_N are ignored by the formula's definition. The table
/// must be d-dimensional (lift an iota-dimensional table first).
double sigma2_hat(const FourierTable& tbl, const FactorVector& fv);

/// Attaches sigma2_hat computed from `tbl`: a d-dimensional table is used
/// directly, an iota-dimensional one is lifted onto the estimate's selector.
Estimate with_sigma2(Estimate e, const FourierTable& tbl);

/// Symmetric interval mu_hat +/- z_{(1+level)/2} * sigma_hat / sqrt(N^{1+1/d}).
/// Requires sigma2_hat present; level in (0,1).
Estimate ci_clt(Estimate e, double level);

/// (p,p) Hermitian matrix Sigma with entries
/// sum_j (sum_i |j_i|/kappa_i) fhat^lift_l(j) conj(fhat^lift_l'(j)),
/// diagonal equal to sigma2_asymptotic of each integrand.
Eigen::MatrixXcd covariance_matrix(const std::vector<FourierTable>& tables,
                                   const std::vector<SubsetSelector>& selectors,
                                   const KappaVector& kappa);

/// JSON {value, sigma2_hat, ci:{level,lo,hi}, N, d, I, seed}.
void save_estimate(const Estimate& e, const std::string& json_path);

}  // namespace ddpp
