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

#include "ddpp/kernel.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ddpp {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kIntegerGuard = 1e-12;
}  // namespace

std::complex<double> eigenfunction_eval(const MultiIndex& j, std::span<const double> x) {
  if (j.size() != x.size()) throw std::invalid_argument("eigenfunction: dimension mismatch");
  double phase = 0.0;
  for (std::size_t i = 0; i < j.size(); ++i) phase += j[i] * x[i];
  return std::polar(1.0, 2.0 * kPi * phase);
}

std::complex<double> dirichlet_factor(int n, double t) {
  const double s = std::sin(kPi * t);
  const std::complex<double> rot = std::polar(1.0, kPi * (n - 1) * t);
  if (std::abs(s) < kIntegerGuard) return static_cast<double>(n) * rot;
  return rot * (std::sin(kPi * n * t) / s);
}

std::complex<double> kernel_eval(const FactorVector& fv, std::span<const double> delta) {
  if (static_cast<int>(delta.size()) != fv.dim())
    throw std::invalid_argument("kernel_eval: dimension mismatch");
  std::complex<double> k = 1.0;
  for (int i = 0; i < fv.dim(); ++i) k *= dirichlet_factor(fv.factor(i), delta[static_cast<std::size_t>(i)]);
  return k;
}

double intensity_k(const FactorVector& fv, std::span<const double> points, int k) {
  if (k < 1) throw std::invalid_argument("intensity_k: k must be >= 1");
  const int d = fv.dim();
  if (points.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(d))
    throw std::invalid_argument("intensity_k: point buffer size mismatch");
  // Coincident inputs have intensity 0 by convention.
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      bool same = true;
      for (int i = 0; i < d && same; ++i)
        same = points[static_cast<std::size_t>(a * d + i)] == points[static_cast<std::size_t>(b * d + i)];
      if (same) return 0.0;
    }
  Eigen::MatrixXcd m(k, k);
  std::vector<double> delta(static_cast<std::size_t>(d));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int i = 0; i < d; ++i)
        delta[static_cast<std::size_t>(i)] = points[static_cast<std::size_t>(a * d + i)] -
                                             points[static_cast<std::size_t>(b * d + i)];
      m(a, b) = kernel_eval(fv, delta);
    }
  }
  return m.determinant().real();
}

double pcf_eval(const FactorVector& fv, std::span<const double> x, std::span<const double> y) {
  const int d = fv.dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("pcf_eval: dimension mismatch");
  bool same = true;
  std::vector<double> delta(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    delta[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)];
    same = same && delta[static_cast<std::size_t>(i)] == 0.0;
  }
  if (same) return 0.0;
  const double n = static_cast<double>(fv.total());
  return 1.0 - std::norm(kernel_eval(fv, delta)) / (n * n);
}

double pcf_projected_eval(const FactorVector& fv, const SubsetSelector& I,
                          std::span<const double> x, std::span<const double> y) {
  if (!I.valid_for(fv.dim())) throw std::invalid_argument("pcf_projected_eval: selector out of range");
  const int iota = I.iota();
  if (static_cast<int>(x.size()) != iota || static_cast<int>(y.size()) != iota)
    throw std::invalid_argument("pcf_projected_eval: point dimension must equal iota");
  bool same = true;
  std::vector<double> delta(static_cast<std::size_t>(iota));
  std::vector<int> sub(static_cast<std::size_t>(iota));
  for (int t = 0; t < iota; ++t) {
    delta[static_cast<std::size_t>(t)] = x[static_cast<std::size_t>(t)] - y[static_cast<std::size_t>(t)];
    same = same && delta[static_cast<std::size_t>(t)] == 0.0;
    sub[static_cast<std::size_t>(t)] = fv.factor(I.indices()[static_cast<std::size_t>(t)] - 1);
  }
  if (same) return 0.0;
  const FactorVector sub_fv(sub);
  const double n = static_cast<double>(fv.total());
  const double n_i = static_cast<double>(sub_fv.total());
  return 1.0 - std::norm(kernel_eval(sub_fv, delta)) / (n * n_i);
}

}  // namespace ddpp
