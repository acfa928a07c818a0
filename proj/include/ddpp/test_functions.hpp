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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ddpp/integrand.hpp"

namespace ddpp {

/// Built-in integrand families:
///   bump        prod_i phi_b(x_i)/int(phi_b),  phi_b(t) = exp(-0.4/(1-(t-1/2)^2))
///   mixcos      (1/d) sum_i phi_m(x_i)/int(phi_m),
///               phi_m(t) = 0.1|cos(5 pi (t-1/2))| + (t-1/2)^2
///   gamma_norm  (1/d) sum_i phi_g(x_i)/int(phi_g), phi_g(t) = |t-1/2|^gamma
///   h_gamma     sum_{j=1}^{J} cos(2 pi j (x-1/2)) / (2 pi j^gamma), 1-d only
///   cosine      cos(2 pi x), 1-d convenience for exact-variance paths
enum class TestFamily { bump, mixcos, gamma_norm, h_gamma, cosine };

std::string family_name(TestFamily f);
TestFamily family_from_name(const std::string& name);

struct TestFunctionSpec {
  TestFamily family;
  int dim = 1;
  double gamma = 0.0;
  long long truncation = 100000;  // h_gamma series cutoff J
  double known_integral = 0.0;
  /// f lies in H^s for every s < smoothness_sup (nullopt: every s > 0).
  std::optional<double> smoothness_sup;
  double normalizer = 1.0;  // cached int_0^1 phi for the normalized families
  std::shared_ptr<const std::vector<double>> h_weights;  // 1/(2 pi j^gamma), j = 1..J

  /// Validates parameters (gamma > 0 for gamma_norm, gamma > 1/2 for h_gamma,
  /// J >= 1) and caches the one-dimensional normalizing integral.
  static TestFunctionSpec make(TestFamily family, int dim, double gamma = 0.0,
                               long long truncation = 100000);
};

double eval_test_function(const TestFunctionSpec& spec, std::span<const double> x);
double known_integral(const TestFunctionSpec& spec);
IntegrandHandle make_integrand(const TestFunctionSpec& spec);

}  // namespace ddpp
