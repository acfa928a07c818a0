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

#include "ddpp/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ddpp/io_error.hpp"

namespace ddpp {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

FourierTable::FourierTable(int iota) : iota_(iota) {
  if (iota < 1) throw std::invalid_argument("FourierTable: iota must be >= 1");
}

void FourierTable::set(const MultiIndex& j, std::complex<double> c) {
  if (static_cast<int>(j.size()) != iota_)
    throw std::invalid_argument("FourierTable: index dimension mismatch");
  entries_[j] = c;
}

std::complex<double> FourierTable::at(const MultiIndex& j) const {
  const auto it = entries_.find(j);
  return it == entries_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

std::vector<int> FourierTable::support_bound() const {
  std::vector<int> bound(static_cast<std::size_t>(iota_), 0);
  for (const auto& [j, c] : entries_)
    for (int i = 0; i < iota_; ++i)
      bound[static_cast<std::size_t>(i)] =
          std::max(bound[static_cast<std::size_t>(i)], std::abs(j[static_cast<std::size_t>(i)]));
  return bound;
}

void FourierTable::check_conj_symmetry(double tol) const {
  MultiIndex neg(static_cast<std::size_t>(iota_));
  for (const auto& [j, c] : entries_) {
    for (int i = 0; i < iota_; ++i) neg[static_cast<std::size_t>(i)] = -j[static_cast<std::size_t>(i)];
    const std::complex<double> mirrored = at(neg);
    if (std::abs(mirrored - std::conj(c)) > tol * (1.0 + std::abs(c)))
      throw std::invalid_argument("FourierTable: conjugate symmetry violated (function not real?)");
  }
}

namespace {

int required_grid(const MultiIndex& j) {
  int mx = 0;
  for (int v : j) mx = std::max(mx, std::abs(v));
  return 4 * (mx + 1);
}

}  // namespace

std::complex<double> fourier_coeff(const IntegrandHandle& f, const MultiIndex& j,
                                   int grid_per_axis) {
  if (static_cast<int>(j.size()) != f.iota)
    throw std::invalid_argument("fourier_coeff: index dimension mismatch");
  if (grid_per_axis < required_grid(j))
    throw std::invalid_argument("fourier_coeff: grid too coarse for requested frequency (need >= " +
                                std::to_string(required_grid(j)) + " points per axis)");
  const int iota = f.iota;
  const long long m = grid_per_axis;
  long long cells = 1;
  for (int i = 0; i < iota; ++i) {
    cells *= m;
    if (cells > 100'000'000LL) throw std::invalid_argument("fourier_coeff: tensor grid too large");
  }
  std::vector<double> x(static_cast<std::size_t>(iota));
  std::vector<long long> k(static_cast<std::size_t>(iota), 0);
  std::complex<double> acc = 0.0;
  for (long long c = 0; c < cells; ++c) {
    double phase = 0.0;
    for (int i = 0; i < iota; ++i) {
      x[static_cast<std::size_t>(i)] = static_cast<double>(k[static_cast<std::size_t>(i)]) / m;
      phase += j[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
    acc += eval_checked(f, x) * std::polar(1.0, -kTwoPi * phase);
    for (int i = iota - 1; i >= 0; --i) {
      if (++k[static_cast<std::size_t>(i)] < m) break;
      k[static_cast<std::size_t>(i)] = 0;
    }
  }
  return acc / static_cast<double>(cells);
}

FourierTable build_fourier_table(const IntegrandHandle& f, int max_freq, int grid_per_axis,
                                 int* grid_used) {
  if (max_freq < 0) throw std::invalid_argument("build_fourier_table: max_freq must be >= 0");
  const int need = 4 * (max_freq + 1);
  const int m = grid_per_axis == 0 ? need : grid_per_axis;
  if (m < need)
    throw std::invalid_argument("build_fourier_table: grid too coarse for requested frequency");
  if (grid_used) *grid_used = m;
  const int iota = f.iota;

  long long cells = 1;
  for (int i = 0; i < iota; ++i) {
    cells *= m;
    if (cells > 100'000'000LL) throw std::invalid_argument("build_fourier_table: tensor grid too large");
  }

  // Sample f on the tensor grid.
  std::vector<std::complex<double>> data(static_cast<std::size_t>(cells));
  {
    std::vector<double> x(static_cast<std::size_t>(iota));
    std::vector<long long> k(static_cast<std::size_t>(iota), 0);
    for (long long c = 0; c < cells; ++c) {
      for (int i = 0; i < iota; ++i)
        x[static_cast<std::size_t>(i)] = static_cast<double>(k[static_cast<std::size_t>(i)]) / m;
      data[static_cast<std::size_t>(c)] = eval_checked(f, x);
      for (int i = iota - 1; i >= 0; --i) {
        if (++k[static_cast<std::size_t>(i)] < m) break;
        k[static_cast<std::size_t>(i)] = 0;
      }
    }
  }

  // Contract one axis at a time against W(j,k) = exp(-2*i*pi*j*k/m)/m,
  // j = -max_freq..max_freq. Deterministic reduction order.
  const int nfreq = 2 * max_freq + 1;
  std::vector<std::complex<double>> w(static_cast<std::size_t>(nfreq) * static_cast<std::size_t>(m));
  for (int jj = 0; jj < nfreq; ++jj)
    for (int kk = 0; kk < m; ++kk)
      w[static_cast<std::size_t>(jj) * m + kk] =
          std::polar(1.0 / m, -kTwoPi * (jj - max_freq) * kk / static_cast<double>(m));

  // Each step transforms the (current) last axis and moves the frequency axis
  // to the front; after iota steps the axes are back in original order with
  // every axis in the frequency domain.
  for (int step = 0; step < iota; ++step) {
    const long long outer = static_cast<long long>(data.size()) / m;
    std::vector<std::complex<double>> next(static_cast<std::size_t>(outer) * nfreq);
    for (long long b = 0; b < outer; ++b) {
      const std::complex<double>* src = data.data() + b * m;
      for (int jj = 0; jj < nfreq; ++jj) {
        const std::complex<double>* wr = w.data() + static_cast<std::size_t>(jj) * m;
        std::complex<double> acc = 0.0;
        for (int kk = 0; kk < m; ++kk) acc += wr[kk] * src[kk];
        next[static_cast<std::size_t>(jj) * outer + static_cast<std::size_t>(b)] = acc;
      }
    }
    data.swap(next);
  }

  FourierTable tbl(iota);
  {
    std::vector<int> j(static_cast<std::size_t>(iota), -max_freq);
    for (std::size_t c = 0; c < data.size(); ++c) {
      tbl.set(j, data[c]);
      for (int i = iota - 1; i >= 0; --i) {
        if (++j[static_cast<std::size_t>(i)] <= max_freq) break;
        j[static_cast<std::size_t>(i)] = -max_freq;
      }
    }
  }
  if (f.periodic) tbl.check_conj_symmetry(1e-7);
  return tbl;
}

FourierTable lift_table(const FourierTable& tbl, const SubsetSelector& I, int d) {
  if (!I.valid_for(d)) throw std::invalid_argument("lift_table: selector out of range");
  if (I.iota() != tbl.dim()) throw std::invalid_argument("lift_table: table dim must equal iota");
  FourierTable out(d);
  MultiIndex lifted(static_cast<std::size_t>(d), 0);
  for (const auto& [j, c] : tbl.entries()) {
    std::fill(lifted.begin(), lifted.end(), 0);
    for (int t = 0; t < I.iota(); ++t)
      lifted[static_cast<std::size_t>(I.indices()[static_cast<std::size_t>(t)] - 1)] =
          j[static_cast<std::size_t>(t)];
    out.set(lifted, c);
  }
  return out;
}

void save_table(const FourierTable& tbl, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (int i = 0; i < tbl.dim(); ++i) out << "j" << (i + 1) << ",";
  out << "re,im\n";
  // Sorted for reproducible files.
  std::vector<MultiIndex> keys;
  keys.reserve(tbl.size());
  for (const auto& [j, c] : tbl.entries()) keys.push_back(j);
  std::sort(keys.begin(), keys.end());
  char buf[64];
  for (const auto& j : keys) {
    const auto c = tbl.at(j);
    for (int v : j) out << v << ",";
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g", c.real(), c.imag());
    out << buf << "\n";
  }
  if (!out.good()) throw IoError("write failed: " + path);
}

FourierTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw IoError("empty table file: " + path);
  std::size_t start = 0;
  if (!rows[0].empty() && rows[0][0].size() && rows[0][0][0] == 'j') start = 1;  // header
  if (start == rows.size()) throw IoError("table has no data rows: " + path);
  const int iota = static_cast<int>(rows[start].size()) - 2;
  if (iota < 1) throw IoError("table rows need j columns plus re,im: " + path);
  FourierTable tbl(iota);
  for (std::size_t r = start; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (static_cast<int>(cells.size()) != iota + 2) throw IoError("row width mismatch in " + path);
    MultiIndex j(static_cast<std::size_t>(iota));
    try {
      for (int i = 0; i < iota; ++i) j[static_cast<std::size_t>(i)] = std::stoi(cells[static_cast<std::size_t>(i)]);
      tbl.set(j, {std::stod(cells[static_cast<std::size_t>(iota)]),
                  std::stod(cells[static_cast<std::size_t>(iota) + 1])});
    } catch (const std::exception&) {
      throw IoError("bad table row in " + path);
    }
  }
  return tbl;
}

}  // namespace ddpp
