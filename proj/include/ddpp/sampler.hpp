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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ddpp/pattern.hpp"

namespace ddpp {

struct SamplerConfig {
  std::uint64_t seed = 0;
  /// Per-point proposal cap; 0 means the default 1000 * N. Only trips on
  /// numerical pathology (the expected proposal count per point is N/(N-m)).
  long long max_rejections_per_point = 0;
  /// Re-run the orthogonalization pass when the residual norm drops below
  /// this fraction of ||Phi|| = sqrt(N). Must lie in (0,1).
  double reorthogonalization_threshold = 1e-3;
};

struct SampleDiagnostics {
  long long total_proposals = 0;
  std::vector<long long> per_point_rejections;
  double max_gram_schmidt_residual = 0.0;

  void merge(const SampleDiagnostics& other);
};

class SamplerError : public std::runtime_error {
 public:
  SamplerError(const std::string& what, long long replication = -1)
      : std::runtime_error(replication >= 0
                               ? what + " (replication " + std::to_string(replication) + ")"
                               : what),
        replication_(replication) {}
  long long replication() const { return replication_; }

 private:
  long long replication_;
};

/// Draws exactly N points distributed as the projection DPP with kernel
/// K(x,y) = sum_{j in E_N} phi_j(x) conj(phi_j(y)).
///
/// Sequential conditionals: with an orthonormal family {e_1..e_m} spanning the
/// feature vectors Phi(x_l) = (phi_j(x_l))_{j in E_N} of the points drawn so
/// far, the next point is proposed uniformly on [0,1]^d and accepted with
/// probability (N - sum_l |<e_l, Phi(x)>|^2) / N; K(x,x) = N makes the uniform
/// envelope exact and tight. Accepted features are orthogonalized against the
/// family and appended. Deterministic given (fv, seed); per proposal the
/// stream is consumed as d coordinates then one acceptance uniform.
std::pair<PointPattern, SampleDiagnostics> sample_pattern(const FactorVector& fv,
                                                          const SamplerConfig& cfg);

/// The projected points {P_I u_1 .. P_I u_N}, order-preserving, with parent
/// provenance attached.
PointPattern project_pattern(const PointPattern& p, const SubsetSelector& I);

/// R independent patterns; replication r uses the RNG stream
/// derive_stream_seed(base_seed, r), so results are bit-identical regardless
/// of execution order or thread count. threads == 0 picks the hardware count.
std::vector<PointPattern> batch_sample(const FactorVector& fv, std::uint64_t base_seed,
                                       long long replications, int threads = 0,
                                       SampleDiagnostics* merged = nullptr);

}  // namespace ddpp
