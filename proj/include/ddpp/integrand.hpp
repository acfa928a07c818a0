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

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>

namespace ddpp {

/// A real integrand on [0,1]^iota. `smoothness_sup` is metadata only (the
/// function lies in the Sobolev class H^s for every s below it); no code path
/// branches on it. The boundary case s = 1/2 (admissible for d = 1 but not
/// d > 1) is likewise a documentation concern, not a runtime one.
struct IntegrandHandle {
  std::function<double(std::span<const double>)> evaluate;
  int iota = 1;
  bool is_bounded = true;
  std::optional<double> smoothness_sup;
  bool periodic = true;
};

/// Evaluates and rejects non-finite values (the handle contract requires a
/// finite result at every queried point).
inline double eval_checked(const IntegrandHandle& f, std::span<const double> x) {
  const double v = f.evaluate(x);
  if (!std::isfinite(v)) throw std::domain_error("integrand returned a non-finite value");
  return v;
}

}  // namespace ddpp
