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

#include "ddpp/indexing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace ddpp {

FactorVector::FactorVector(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("factor vector must have d >= 1");
  total_ = 1;
  for (int n : factors_) {
    if (n < 1) throw std::invalid_argument("every factor must be >= 1");
    total_ *= n;
  }
}

namespace {

struct PartitionSearch {
  int dim;
  std::vector<long long> divisors;  // divisors of N that are >= 2, descending
  std::vector<int> current;
  std::vector<int> best;
  double best_ratio = std::numeric_limits<double>::infinity();
  double best_logvar = std::numeric_limits<double>::infinity();

  void consider() {
    std::vector<int> padded = current;
    padded.resize(static_cast<std::size_t>(dim), 1);
    const auto [mn, mx] = std::minmax_element(padded.begin(), padded.end());
    const double ratio = static_cast<double>(*mx) / static_cast<double>(*mn);
    double mean = 0.0;
    for (int n : padded) mean += std::log(static_cast<double>(n));
    mean /= dim;
    double var = 0.0;
    for (int n : padded) {
      const double dlt = std::log(static_cast<double>(n)) - mean;
      var += dlt * dlt;
    }
    var /= dim;
    if (ratio < best_ratio - 1e-12 ||
        (ratio < best_ratio + 1e-12 && var < best_logvar - 1e-12)) {
      best_ratio = ratio;
      best_logvar = var;
      best = padded;
    }
  }

  // Multiplicative partitions of `rem` into parts <= `maxpart`, non-increasing.
  void recurse(long long rem, long long maxpart, int parts_left) {
    if (rem == 1) {
      consider();
      return;
    }
    if (parts_left == 0) return;
    for (long long part : divisors) {
      if (part > maxpart || part > rem || rem % part != 0) continue;
      current.push_back(static_cast<int>(part));
      recurse(rem / part, part, parts_left - 1);
      current.pop_back();
    }
  }
};

}  // namespace

FactorVector balanced_factorization(long long total, int dim) {
  if (total < 1) throw std::invalid_argument("N must be >= 1");
  if (dim < 1) throw std::invalid_argument("d must be >= 1");
  if (total > std::numeric_limits<int>::max())
    throw std::invalid_argument("N too large for int factors");
  PartitionSearch search;
  search.dim = dim;
  for (long long lo = 1; lo * lo <= total; ++lo) {
    if (total % lo != 0) continue;
    if (lo >= 2) search.divisors.push_back(lo);
    const long long hi = total / lo;
    if (hi >= 2 && hi != lo) search.divisors.push_back(hi);
  }
  std::sort(search.divisors.begin(), search.divisors.end(), std::greater<long long>());
  search.recurse(total, total, dim);
  std::sort(search.best.begin(), search.best.end(), std::greater<int>());
  return FactorVector(search.best);
}

bool RectIndexSet::contains(const MultiIndex& j) const {
  if (static_cast<int>(j.size()) != fv_.dim()) return false;
  for (int i = 0; i < fv_.dim(); ++i)
    if (j[static_cast<std::size_t>(i)] < 0 || j[static_cast<std::size_t>(i)] > fv_.factor(i) - 1)
      return false;
  return true;
}

MultiIndex RectIndexSet::at(long long pos) const {
  MultiIndex j(static_cast<std::size_t>(fv_.dim()));
  for (int i = fv_.dim() - 1; i >= 0; --i) {
    j[static_cast<std::size_t>(i)] = static_cast<int>(pos % fv_.factor(i));
    pos /= fv_.factor(i);
  }
  return j;
}

std::vector<MultiIndex> RectIndexSet::enumerate() const {
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (long long p = 0; p < size(); ++p) out.push_back(at(p));
  return out;
}

long long SymIndexSet::size() const {
  long long s = 1;
  for (int i = 0; i < fv_.dim(); ++i) s *= 2LL * fv_.factor(i) - 1;
  return s;
}

bool SymIndexSet::contains(const MultiIndex& j) const {
  if (static_cast<int>(j.size()) != fv_.dim()) return false;
  for (int i = 0; i < fv_.dim(); ++i)
    if (std::abs(j[static_cast<std::size_t>(i)]) > fv_.factor(i) - 1) return false;
  return true;
}

std::vector<MultiIndex> SymIndexSet::enumerate() const {
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(size()));
  MultiIndex j(static_cast<std::size_t>(fv_.dim()));
  std::function<void(int)> walk = [&](int axis) {
    if (axis == fv_.dim()) {
      out.push_back(j);
      return;
    }
    for (int v = -(fv_.factor(axis) - 1); v <= fv_.factor(axis) - 1; ++v) {
      j[static_cast<std::size_t>(axis)] = v;
      walk(axis + 1);
    }
  };
  walk(0);
  return out;
}

SubsetSelector::SubsetSelector(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("selector must be non-empty");
  int prev = 0;
  for (int ix : indices_) {
    if (ix <= prev) throw std::invalid_argument("selector indices must be strictly increasing and >= 1");
    prev = ix;
  }
}

SubsetSelector SubsetSelector::full(int d) {
  std::vector<int> ix(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) ix[static_cast<std::size_t>(i)] = i + 1;
  return SubsetSelector(std::move(ix));
}

bool SubsetSelector::is_full(int d) const {
  if (iota() != d) return false;
  for (int i = 0; i < d; ++i)
    if (indices_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

void SubsetSelector::project(std::span<const double> x, std::span<double> out) const {
  for (std::size_t k = 0; k < indices_.size(); ++k)
    out[k] = x[static_cast<std::size_t>(indices_[k] - 1)];
}

}  // namespace ddpp
