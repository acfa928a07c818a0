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

#include "ddpp/sampler.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <thread>

#include "ddpp/rng.hpp"

namespace ddpp {

void SampleDiagnostics::merge(const SampleDiagnostics& other) {
  total_proposals += other.total_proposals;
  max_gram_schmidt_residual = std::max(max_gram_schmidt_residual, other.max_gram_schmidt_residual);
  if (per_point_rejections.size() < other.per_point_rejections.size())
    per_point_rejections.resize(other.per_point_rejections.size(), 0);
  for (std::size_t i = 0; i < other.per_point_rejections.size(); ++i)
    per_point_rejections[i] += other.per_point_rejections[i];
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOrthogonalityTol = 1e-8;

/// Feature map Phi(x) = (exp(2*i*pi * j.x))_{j in E_N}, laid out row-major
/// over E_N (last axis fastest). Built as a tensor product of per-axis
/// geometric progressions, ~2N complex multiplies.
class FeatureMap {
 public:
  explicit FeatureMap(const FactorVector& fv) : fv_(fv), n_(fv.total()) {}

  void eval(std::span<const double> x, Eigen::VectorXcd& out) const {
    out(0) = 1.0;
    long long filled = 1;
    for (int axis = 0; axis < fv_.dim(); ++axis) {
      const int n_axis = fv_.factor(axis);
      const std::complex<double> w = std::polar(1.0, kTwoPi * x[static_cast<std::size_t>(axis)]);
      // Expand the filled block by the powers w^0 .. w^{n_axis-1}.
      for (long long b = filled - 1; b >= 0; --b) {
        const std::complex<double> base = out(b);
        std::complex<double> p = base;
        out(b * n_axis) = base;
        for (int t = 1; t < n_axis; ++t) {
          p *= w;
          out(b * n_axis + t) = p;
        }
      }
      filled *= n_axis;
    }
  }

  long long size() const { return n_; }

 private:
  const FactorVector& fv_;
  long long n_;
};

std::pair<PointPattern, SampleDiagnostics> sample_stream(const FactorVector& fv,
                                                         const SamplerConfig& cfg,
                                                         SeedRecord rec, long long replication) {
  const long long n = fv.total();
  const int d = fv.dim();
  const long long cap =
      cfg.max_rejections_per_point > 0 ? cfg.max_rejections_per_point : 1000 * n;
  if (!(cfg.reorthogonalization_threshold > 0.0 && cfg.reorthogonalization_threshold < 1.0))
    throw std::invalid_argument("reorthogonalization_threshold must lie in (0,1)");

  Rng rng(derive_stream_seed(rec.base, rec.stream));
  FeatureMap features(fv);

  Eigen::MatrixXcd basis(n, n);
  Eigen::VectorXcd phi(n), proj(n), v(n);
  std::vector<double> x(static_cast<std::size_t>(d));
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(n * d));

  SampleDiagnostics diag;
  diag.per_point_rejections.assign(static_cast<std::size_t>(n), 0);
  const double sqrt_n = std::sqrt(static_cast<double>(n));

  for (long long m = 0; m < n; ++m) {
    auto cols = basis.leftCols(m);
    long long attempts = 0;
    while (true) {
      if (attempts >= cap)
        throw SamplerError("rejection cap exceeded at point " + std::to_string(m + 1) +
                               " (degenerate Gram-Schmidt state?)",
                           replication);
      ++attempts;
      ++diag.total_proposals;
      for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = rng.uniform();
      features.eval(x, phi);
      proj.head(m).noalias() = cols.adjoint() * phi;
      const double mass = proj.head(m).squaredNorm();
      const double accept = std::max(0.0, (static_cast<double>(n) - mass) / static_cast<double>(n));
      if (rng.uniform() < accept) break;
    }
    diag.per_point_rejections[static_cast<std::size_t>(m)] = attempts - 1;

    // Orthogonalize Phi(x) against the family; re-run the pass when the
    // residual is small relative to ||Phi|| = sqrt(N).
    v = phi;
    v.noalias() -= cols * proj.head(m);
    if (m > 0 && v.norm() < cfg.reorthogonalization_threshold * sqrt_n) {
      proj.head(m).noalias() = cols.adjoint() * v;
      v.noalias() -= cols * proj.head(m);
    }
    double vnorm = v.norm();
    if (!(vnorm > 0.0))
      throw SamplerError("Gram-Schmidt produced a zero residual", replication);
    v /= vnorm;
    // Orthogonality invariant; another pass if violated.
    int extra_passes = 0;
    double residual = 0.0;
    while (m > 0) {
      proj.head(m).noalias() = cols.adjoint() * v;
      residual = proj.head(m).norm();
      if (residual <= kOrthogonalityTol) break;
      if (++extra_passes > 4)
        throw SamplerError("Gram-Schmidt failed to orthogonalize (residual " +
                               std::to_string(residual) + ")",
                           replication);
      v.noalias() -= cols * proj.head(m);
      vnorm = v.norm();
      if (!(vnorm > 0.0)) throw SamplerError("Gram-Schmidt produced a zero residual", replication);
      v /= vnorm;
    }
    diag.max_gram_schmidt_residual = std::max(diag.max_gram_schmidt_residual, residual);
    basis.col(m) = v;
    coords.insert(coords.end(), x.begin(), x.end());
  }

  return {PointPattern(fv, rec, std::move(coords), d), std::move(diag)};
}

}  // namespace

std::pair<PointPattern, SampleDiagnostics> sample_pattern(const FactorVector& fv,
                                                          const SamplerConfig& cfg) {
  return sample_stream(fv, cfg, SeedRecord{cfg.seed, 0}, -1);
}

PointPattern project_pattern(const PointPattern& p, const SubsetSelector& I) {
  if (!I.valid_for(p.dim())) throw std::invalid_argument("project_pattern: selector out of range");
  const int iota = I.iota();
  std::vector<double> coords(static_cast<std::size_t>(p.size()) * static_cast<std::size_t>(iota));
  for (long long r = 0; r < p.size(); ++r)
    I.project(p.point(r), {coords.data() + r * iota, static_cast<std::size_t>(iota)});
  return PointPattern(p.factors(), p.seed(), std::move(coords), iota, I.indices());
}

std::vector<PointPattern> batch_sample(const FactorVector& fv, std::uint64_t base_seed,
                                       long long replications, int threads,
                                       SampleDiagnostics* merged) {
  if (replications < 1) throw std::invalid_argument("batch_sample: R must be >= 1");
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = static_cast<int>(std::min<long long>(threads, replications));

  std::vector<std::optional<PointPattern>> slots(static_cast<std::size_t>(replications));
  std::vector<SampleDiagnostics> diags(static_cast<std::size_t>(replications));
  std::atomic<long long> next{0};
  std::atomic<bool> failed{false};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));

  auto worker = [&](int tid) {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        const long long r = next.fetch_add(1);
        if (r >= replications) break;
        SamplerConfig cfg;  // per-replication seeding goes through the stream rule
        auto [pat, dg] = sample_stream(fv, cfg, SeedRecord{base_seed, static_cast<std::uint64_t>(r)}, r);
        slots[static_cast<std::size_t>(r)].emplace(std::move(pat));
        diags[static_cast<std::size_t>(r)] = std::move(dg);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(tid)] = std::current_exception();
      failed.store(true);
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::vector<PointPattern> out;
  out.reserve(static_cast<std::size_t>(replications));
  SampleDiagnostics total;
  for (long long r = 0; r < replications; ++r) {
    out.push_back(std::move(*slots[static_cast<std::size_t>(r)]));
    total.merge(diags[static_cast<std::size_t>(r)]);
  }
  if (merged) *merged = std::move(total);
  return out;
}

}  // namespace ddpp
