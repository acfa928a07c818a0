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

#include <complex>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "ddpp/indexing.hpp"
#include "ddpp/integrand.hpp"

namespace ddpp {

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& j) const {
    std::size_t h = 1469598103934665603ULL;
    for (int v : j) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
      h *= 1099511628211ULL;
    }
    return h;
  }
};

/// Finite map j in Z^iota -> fhat(j). The table is the single source of truth
/// for every sum over Z^iota downstream: truncation radius is caller-chosen.
class FourierTable {
 public:
  using Map = std::unordered_map<MultiIndex, std::complex<double>, MultiIndexHash>;

  explicit FourierTable(int iota);

  int dim() const { return iota_; }
  std::size_t size() const { return entries_.size(); }
  void set(const MultiIndex& j, std::complex<double> c);
  /// 0 when absent.
  std::complex<double> at(const MultiIndex& j) const;
  bool contains(const MultiIndex& j) const { return entries_.count(j) > 0; }
  const Map& entries() const { return entries_; }
  /// Per-coordinate max |j_i| over the stored support.
  std::vector<int> support_bound() const;

  /// For real-valued functions: fhat(-j) must equal conj(fhat(j)).
  /// Throws std::invalid_argument when violated beyond `tol`.
  void check_conj_symmetry(double tol = 1e-8) const;

 private:
  int iota_;
  Map entries_;
};

/// Numerical Fourier coefficient int f(u) exp(-2*i*pi*j.u) du by tensor-grid
/// trapezoid on the periodic grid {k/M} (spectrally accurate for smooth
/// periodic f). Refuses grids with M < 4*(|j_i|+1) rather than aliasing.
std::complex<double> fourier_coeff(const IntegrandHandle& f, const MultiIndex& j,
                                   int grid_per_axis);

/// All coefficients with |j_i| <= max_freq from one tensor grid of f values.
/// grid_per_axis == 0 picks the minimum legal grid 4*(max_freq+1). The grid
/// used is recorded in the result via grid_used (optional out).
FourierTable build_fourier_table(const IntegrandHandle& f, int max_freq, int grid_per_axis = 0,
                                 int* grid_used = nullptr);

/// Lift an iota-dimensional table onto the slice {j : j_{I^c} = 0} in Z^d.
FourierTable lift_table(const FourierTable& tbl, const SubsetSelector& I, int d);

/// CSV rows (j_1..j_iota, re, im) with a header; 17 significant digits.
void save_table(const FourierTable& tbl, const std::string& path);
FourierTable load_table(const std::string& path);

}  // namespace ddpp
