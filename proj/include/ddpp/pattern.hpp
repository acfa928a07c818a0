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
#include <span>
#include <string>
#include <vector>

#include "ddpp/indexing.hpp"

namespace ddpp {

struct SampleDiagnostics;

/// Which RNG stream produced a pattern: the effective generator seed is
/// derive_stream_seed(base, stream). See rng.hpp for the derivation rule.
struct SeedRecord {
  std::uint64_t base = 0;
  std::uint64_t stream = 0;
};

/// A realization {u_1..u_N} of the model (or its coordinate projection).
/// Exactly N points, every coordinate in [0,1), pairwise distinct.
class PointPattern {
 public:
  /// `coords` is row-major, size() * dim entries. Throws std::invalid_argument
  /// on any invariant violation.
  PointPattern(FactorVector fv, SeedRecord seed, std::vector<double> coords, int dim,
               std::optional<std::vector<int>> projected_from = std::nullopt);

  long long size() const { return static_cast<long long>(coords_.size()) / dim_; }
  int dim() const { return dim_; }
  std::span<const double> point(long long i) const {
    return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  const std::vector<double>& coords() const { return coords_; }
  const FactorVector& factors() const { return fv_; }
  const SeedRecord& seed() const { return seed_; }
  /// 1-based selector when this pattern is a projection of a d-dim parent.
  const std::optional<std::vector<int>>& projected_from() const { return projected_from_; }

 private:
  FactorVector fv_;
  SeedRecord seed_;
  std::vector<double> coords_;
  int dim_;
  std::optional<std::vector<int>> projected_from_;
};

/// CSV with a header row x1..xd and 17-significant-digit coordinates (doubles
/// round-trip exactly), plus a JSON sidecar {factors, seed, N, d, diagnostics}.
void save_pattern(const PointPattern& p, const std::string& csv_path,
                  const std::string& sidecar_path, const SampleDiagnostics* diag = nullptr);

PointPattern load_pattern(const std::string& csv_path, const std::string& sidecar_path);

}  // namespace ddpp
