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

#include "ddpp/test_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ddpp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double phi_bump(double t) {
  const double u = t - 0.5;
  return std::exp(-0.4 / (1.0 - u * u));
}

double phi_mixcos(double t) {
  const double u = t - 0.5;
  return 0.1 * std::abs(std::cos(5.0 * kPi * u)) + u * u;
}

/// Composite 16-point Gauss-Legendre on subintervals aligned with the kink
/// grid of phi_mixcos (multiples of 0.2), so every piece is analytic and the
/// rule converges at machine precision.
double quadrature_01(double (*phi)(double)) {
  static const double node[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                 0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
  static const double weight[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                   0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                   0.0622535239386479, 0.0271524594117541};
  const int panels = 200;
  const double h = 1.0 / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (int q = 0; q < 8; ++q) {
      acc += weight[q] * (phi(mid + 0.5 * h * node[q]) + phi(mid - 0.5 * h * node[q]));
    }
  }
  return acc * 0.5 * h;
}

}  // namespace

std::string family_name(TestFamily f) {
  switch (f) {
    case TestFamily::bump: return "bump";
    case TestFamily::mixcos: return "mixcos";
    case TestFamily::gamma_norm: return "gamma_norm";
    case TestFamily::h_gamma: return "h_gamma";
    case TestFamily::cosine: return "cosine";
  }
  throw std::invalid_argument("unknown test family");
}

TestFamily family_from_name(const std::string& name) {
  if (name == "bump") return TestFamily::bump;
  if (name == "mixcos") return TestFamily::mixcos;
  if (name == "gamma_norm") return TestFamily::gamma_norm;
  if (name == "h_gamma") return TestFamily::h_gamma;
  if (name == "cosine") return TestFamily::cosine;
  throw std::invalid_argument("unknown test function family: " + name);
}

TestFunctionSpec TestFunctionSpec::make(TestFamily family, int dim, double gamma,
                                        long long truncation) {
  if (dim < 1) throw std::invalid_argument("test function dimension must be >= 1");
  TestFunctionSpec spec;
  spec.family = family;
  spec.dim = dim;
  spec.gamma = gamma;
  spec.truncation = truncation;
  switch (family) {
    case TestFamily::bump:
      spec.normalizer = quadrature_01(&phi_bump);
      spec.known_integral = 1.0;
      spec.smoothness_sup = std::nullopt;  // smooth: every s > 0
      break;
    case TestFamily::mixcos:
      spec.normalizer = quadrature_01(&phi_mixcos);
      spec.known_integral = 1.0;
      spec.smoothness_sup = 1.5;
      break;
    case TestFamily::gamma_norm: {
      if (!(gamma > 0.0)) throw std::invalid_argument("gamma_norm requires gamma > 0");
      // int_0^1 |t-1/2|^gamma dt = 2 (1/2)^{gamma+1} / (gamma+1), closed form.
      spec.normalizer = 2.0 * std::pow(0.5, gamma + 1.0) / (gamma + 1.0);
      spec.known_integral = 1.0;
      spec.smoothness_sup = 0.5 + gamma;
      break;
    }
    case TestFamily::h_gamma: {
      if (dim != 1) throw std::invalid_argument("h_gamma is one-dimensional");
      if (!(gamma > 0.5)) throw std::invalid_argument("h_gamma requires gamma > 1/2 (L^2)");
      if (truncation < 1) throw std::invalid_argument("h_gamma truncation must be >= 1");
      auto w = std::make_shared<std::vector<double>>(static_cast<std::size_t>(truncation));
      for (long long j = 1; j <= truncation; ++j)
        (*w)[static_cast<std::size_t>(j - 1)] = 1.0 / (kTwoPi * std::pow(static_cast<double>(j), gamma));
      spec.h_weights = std::move(w);
      spec.known_integral = 0.0;
      spec.smoothness_sup = gamma - 0.5;
      break;
    }
    case TestFamily::cosine:
      if (dim != 1) throw std::invalid_argument("cosine is one-dimensional");
      spec.known_integral = 0.0;
      spec.smoothness_sup = std::nullopt;
      break;
  }
  return spec;
}

double eval_test_function(const TestFunctionSpec& spec, std::span<const double> x) {
  if (static_cast<int>(x.size()) != spec.dim)
    throw std::invalid_argument("test function: dimension mismatch");
  switch (spec.family) {
    case TestFamily::bump: {
      double prod = 1.0;
      for (double xi : x) prod *= phi_bump(xi) / spec.normalizer;
      return prod;
    }
    case TestFamily::mixcos: {
      double s = 0.0;
      for (double xi : x) s += phi_mixcos(xi) / spec.normalizer;
      return s / spec.dim;
    }
    case TestFamily::gamma_norm: {
      double s = 0.0;
      for (double xi : x) s += std::pow(std::abs(xi - 0.5), spec.gamma) / spec.normalizer;
      return s / spec.dim;
    }
    case TestFamily::h_gamma: {
      // Partial sum via the cosine three-term recurrence: 2 flops per term.
      const double theta = kTwoPi * (x[0] - 0.5);
      const double step = 2.0 * std::cos(theta);
      double prev = 1.0;             // cos(0)
      double cur = std::cos(theta);  // cos(theta)
      const auto& w = *spec.h_weights;
      double acc = 0.0;
      for (double wj : w) {
        acc += wj * cur;
        const double nxt = step * cur - prev;
        prev = cur;
        cur = nxt;
      }
      return acc;
    }
    case TestFamily::cosine:
      return std::cos(kTwoPi * x[0]);
  }
  throw std::invalid_argument("unknown test family");
}

double known_integral(const TestFunctionSpec& spec) { return spec.known_integral; }

IntegrandHandle make_integrand(const TestFunctionSpec& spec) {
  IntegrandHandle h;
  h.iota = spec.dim;
  h.is_bounded = spec.family != TestFamily::h_gamma || spec.gamma > 1.0;
  h.smoothness_sup = spec.smoothness_sup;
  h.periodic = true;
  h.evaluate = [spec](std::span<const double> x) { return eval_test_function(spec, x); };
  return h;
}

}  // namespace ddpp
