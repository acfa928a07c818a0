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

#include "ddpp/pattern.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ddpp/io_error.hpp"
#include "ddpp/sampler.hpp"
#include "json.hpp"

namespace ddpp {

PointPattern::PointPattern(FactorVector fv, SeedRecord seed, std::vector<double> coords, int dim,
                           std::optional<std::vector<int>> projected_from)
    : fv_(std::move(fv)),
      seed_(seed),
      coords_(std::move(coords)),
      dim_(dim),
      projected_from_(std::move(projected_from)) {
  if (dim_ < 1) throw std::invalid_argument("pattern dimension must be >= 1");
  const long long n = fv_.total();
  if (static_cast<long long>(coords_.size()) != n * dim_)
    throw std::invalid_argument("pattern must hold exactly N points");
  for (double c : coords_)
    if (!(c >= 0.0 && c < 1.0)) throw std::invalid_argument("pattern coordinates must lie in [0,1)");
  // Pairwise distinctness via a lexicographic sort of row indices.
  std::vector<long long> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0LL);
  auto row_less = [&](long long a, long long b) {
    return std::lexicographical_compare(
        coords_.begin() + a * dim_, coords_.begin() + (a + 1) * dim_,
        coords_.begin() + b * dim_, coords_.begin() + (b + 1) * dim_);
  };
  std::sort(order.begin(), order.end(), row_less);
  for (long long i = 0; i + 1 < n; ++i) {
    const long long a = order[static_cast<std::size_t>(i)];
    const long long b = order[static_cast<std::size_t>(i + 1)];
    if (std::equal(coords_.begin() + a * dim_, coords_.begin() + (a + 1) * dim_,
                   coords_.begin() + b * dim_))
      throw std::invalid_argument("pattern points must be pairwise distinct");
  }
}

namespace {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void save_pattern(const PointPattern& p, const std::string& csv_path,
                  const std::string& sidecar_path, const SampleDiagnostics* diag) {
  std::ofstream csv(csv_path);
  if (!csv) throw IoError("cannot open for writing: " + csv_path);
  for (int i = 0; i < p.dim(); ++i) csv << (i ? "," : "") << "x" << (i + 1);
  csv << "\n";
  for (long long r = 0; r < p.size(); ++r) {
    const auto pt = p.point(r);
    for (int i = 0; i < p.dim(); ++i) csv << (i ? "," : "") << format_g17(pt[static_cast<std::size_t>(i)]);
    csv << "\n";
  }
  if (!csv.good()) throw IoError("write failed: " + csv_path);

  nlohmann::json meta;
  meta["factors"] = p.factors().factors();
  meta["seed"] = {{"base", p.seed().base}, {"stream", p.seed().stream}};
  meta["N"] = p.size();
  meta["d"] = p.dim();
  if (p.projected_from()) meta["projected_from"] = *p.projected_from();
  if (diag) {
    meta["diagnostics"] = {{"total_proposals", diag->total_proposals},
                           {"per_point_rejections", diag->per_point_rejections},
                           {"max_gram_schmidt_residual", diag->max_gram_schmidt_residual}};
  }
  std::ofstream side(sidecar_path);
  if (!side) throw IoError("cannot open for writing: " + sidecar_path);
  side << meta.dump(2) << "\n";
  if (!side.good()) throw IoError("write failed: " + sidecar_path);
}

PointPattern load_pattern(const std::string& csv_path, const std::string& sidecar_path) {
  std::ifstream side(sidecar_path);
  if (!side) throw IoError("cannot open: " + sidecar_path);
  nlohmann::json meta;
  try {
    side >> meta;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad sidecar " + sidecar_path + ": " + e.what());
  }
  if (!meta.contains("factors") || !meta.contains("seed") || !meta.contains("d"))
    throw IoError("sidecar missing factors/seed/d: " + sidecar_path);
  FactorVector fv(meta["factors"].get<std::vector<int>>());
  SeedRecord seed{meta["seed"].value("base", std::uint64_t{0}),
                  meta["seed"].value("stream", std::uint64_t{0})};
  const int dim = meta["d"].get<int>();
  std::optional<std::vector<int>> projected_from;
  if (meta.contains("projected_from"))
    projected_from = meta["projected_from"].get<std::vector<int>>();

  std::ifstream csv(csv_path);
  if (!csv) throw IoError("cannot open: " + csv_path);
  std::string line;
  if (!std::getline(csv, line)) throw IoError("empty pattern file: " + csv_path);
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(fv.total()) * static_cast<std::size_t>(dim));
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    int got = 0;
    while (std::getline(ss, cell, ',')) {
      try {
        coords.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw IoError("bad coordinate '" + cell + "' in " + csv_path);
      }
      ++got;
    }
    if (got != dim) throw IoError("row width mismatch in " + csv_path);
  }
  return PointPattern(std::move(fv), seed, std::move(coords), dim, std::move(projected_from));
}

}  // namespace ddpp
