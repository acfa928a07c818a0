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
#include <span>
#include <vector>

namespace ddpp {

/// Frequency multi-index j in Z^d.
using MultiIndex = std::vector<int>;

/// The factor vector n = (n_1,...,n_d) of an (N,d)-Dirichlet model,
/// with N = prod n_i points.
class FactorVector {
 public:
  /// Throws std::invalid_argument unless d >= 1 and every factor >= 1.
  explicit FactorVector(std::vector<int> factors);

  int dim() const { return static_cast<int>(factors_.size()); }
  long long total() const { return total_; }  // N
  const std::vector<int>& factors() const { return factors_; }
  int factor(int axis) const { return factors_[static_cast<std::size_t>(axis)]; }

  bool operator==(const FactorVector& other) const { return factors_ == other.factors_; }

 private:
  std::vector<int> factors_;
  long long total_;
};

/// Factorization of N into d parts (padded with 1s, sorted descending) that
/// minimizes max(n_i)/min(n_i), ties broken by the variance of log(n_i).
/// Exhaustive over multiplicative partitions; reproduces (100,2) -> (10,10)
/// and (100,6) -> (5,5,2,2,1,1).
FactorVector balanced_factorization(long long total, int dim);

/// E_N = {0..n_1-1} x ... x {0..n_d-1}, the rectangular index set carrying
/// the unit eigenvalues of the kernel (all other eigenvalues are 0, so the
/// model is a projection DPP with exactly N points).
class RectIndexSet {
 public:
  explicit RectIndexSet(FactorVector fv) : fv_(std::move(fv)) {}

  long long size() const { return fv_.total(); }
  const FactorVector& factors() const { return fv_; }
  bool contains(const MultiIndex& j) const;
  /// Multi-index at flat position `pos`, row-major with the last axis fastest.
  MultiIndex at(long long pos) const;
  std::vector<MultiIndex> enumerate() const;

 private:
  FactorVector fv_;
};

/// F_N = {j in Z^d : |j_i| <= n_i - 1}, the support of the difference set
/// E_N - E_N; cardinality prod(2 n_i - 1).
class SymIndexSet {
 public:
  explicit SymIndexSet(FactorVector fv) : fv_(std::move(fv)) {}

  long long size() const;
  const FactorVector& factors() const { return fv_; }
  bool contains(const MultiIndex& j) const;
  std::vector<MultiIndex> enumerate() const;

 private:
  FactorVector fv_;
};

/// Coordinate subset I of {1..d} (1-based, strictly increasing); |I| = iota.
class SubsetSelector {
 public:
  /// Throws std::invalid_argument if empty, non-increasing or any index < 1.
  explicit SubsetSelector(std::vector<int> indices);
  static SubsetSelector full(int d);

  int iota() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  int max_index() const { return indices_.back(); }
  bool valid_for(int d) const { return indices_.back() <= d; }
  bool is_full(int d) const;

  /// x_I = P_I x. `out` must have iota() slots; x at least max_index() long.
  void project(std::span<const double> x, std::span<double> out) const;

 private:
  std::vector<int> indices_;
};

}  // namespace ddpp
