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

#include "ddpp/estimator.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "ddpp/io_error.hpp"
#include "ddpp/stats.hpp"
#include "json.hpp"

namespace ddpp {

RectangleDomain::RectangleDomain(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.empty() || lower.size() != upper.size())
    throw std::invalid_argument("rectangle bounds must be non-empty and of equal dimension");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (!(lower[i] < upper[i])) throw std::invalid_argument("rectangle needs a_i < b_i");
}

double RectangleDomain::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i];
  return v;
}

KappaVector::KappaVector(std::vector<double> ks) : kappas(std::move(ks)) {
  if (kappas.empty()) throw std::invalid_argument("kappa vector must be non-empty");
  for (double k : kappas)
    if (!(k > 0.0)) throw std::invalid_argument("kappa entries must be strictly positive");
}

KappaVector kappa_from_design(const FactorVector& fv) {
  std::vector<double> ks(static_cast<std::size_t>(fv.dim()));
  const double scale = std::pow(static_cast<double>(fv.total()), -1.0 / fv.dim());
  for (int i = 0; i < fv.dim(); ++i) ks[static_cast<std::size_t>(i)] = fv.factor(i) * scale;
  return KappaVector(std::move(ks));
}

namespace {

void check_selector(const IntegrandHandle& f, const PointPattern& p, const SubsetSelector& I) {
  if (f.iota != I.iota())
    throw std::invalid_argument("integrand dimension must equal |I|");
  if (!I.valid_for(p.dim()))
    throw std::invalid_argument("pattern dimension must cover the selector");
}

Estimate make_estimate(double value, const PointPattern& p, const SubsetSelector& I) {
  Estimate e{.value = value,
             .sigma2_hat = std::nullopt,
             .ci = std::nullopt,
             .factors = p.factors(),
             .N = p.size(),
             .d = p.factors().dim(),
             .selector = I.indices(),
             .seed = p.seed()};
  return e;
}

}  // namespace

Estimate estimate_mean(const IntegrandHandle& f, const PointPattern& p, const SubsetSelector& I) {
  check_selector(f, p, I);
  std::vector<double> xi(static_cast<std::size_t>(I.iota()));
  double acc = 0.0;
  for (long long r = 0; r < p.size(); ++r) {
    I.project(p.point(r), xi);
    acc += eval_checked(f, xi);
  }
  return make_estimate(acc / static_cast<double>(p.size()), p, I);
}

Estimate estimate_rectangle(const IntegrandHandle& f, const PointPattern& p,
                            const SubsetSelector& I, const RectangleDomain& dom) {
  check_selector(f, p, I);
  if (dom.dim() != I.iota())
    throw std::invalid_argument("rectangle dimension must equal |I|");
  const int iota = I.iota();
  std::vector<double> xi(static_cast<std::size_t>(iota));
  double acc = 0.0;
  for (long long r = 0; r < p.size(); ++r) {
    I.project(p.point(r), xi);
    for (int i = 0; i < iota; ++i) {
      const auto ix = static_cast<std::size_t>(i);
      xi[ix] = dom.lower[ix] + (dom.upper[ix] - dom.lower[ix]) * xi[ix];
    }
    acc += eval_checked(f, xi);
  }
  return make_estimate(dom.volume() * acc / static_cast<double>(p.size()), p, I);
}

namespace {

double l2_mass(const FourierTable& tbl) {
  double s = 0.0;
  for (const auto& [j, c] : tbl.entries()) s += std::norm(c);
  return s;
}

void check_table_dim(const FourierTable& tbl, const FactorVector& fv) {
  if (tbl.dim() != fv.dim())
    throw std::invalid_argument("table dimension must match the factor vector");
}

}  // namespace

double exact_variance_var1(const FourierTable& tbl, const FactorVector& fv) {
  check_table_dim(tbl, fv);
  const double n = static_cast<double>(fv.total());
  const RectIndexSet en{fv};
  const auto indices = en.enumerate();
  MultiIndex diff(static_cast<std::size_t>(fv.dim()));
  double corr = 0.0;
  for (const auto& j : indices)
    for (const auto& k : indices) {
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = j[i] - k[i];
      corr += std::norm(tbl.at(diff));
    }
  return l2_mass(tbl) / n - corr / (n * n);
}

double exact_variance_var2(const FourierTable& tbl, const FactorVector& fv) {
  check_table_dim(tbl, fv);
  const double n = static_cast<double>(fv.total());
  const SymIndexSet fn{fv};
  double corr = 0.0;
  for (const auto& [j, c] : tbl.entries()) {
    if (!fn.contains(j)) continue;
    double weight = 1.0;
    for (int i = 0; i < fv.dim(); ++i)
      weight *= fv.factor(i) - std::abs(j[static_cast<std::size_t>(i)]);
    corr += weight * std::norm(c);
  }
  return l2_mass(tbl) / n - corr / (n * n);
}

double sigma2_asymptotic(const FourierTable& tbl, const SubsetSelector& I,
                         const KappaVector& kappa) {
  if (tbl.dim() != I.iota())
    throw std::invalid_argument("sigma2_asymptotic: table dimension must equal |I|");
  if (!I.valid_for(static_cast<int>(kappa.kappas.size())))
    throw std::invalid_argument("sigma2_asymptotic: kappa missing entries for the selector");
  double s = 0.0;
  for (const auto& [j, c] : tbl.entries()) {
    double weight = 0.0;
    for (int t = 0; t < I.iota(); ++t)
      weight += std::abs(j[static_cast<std::size_t>(t)]) /
                kappa.kappas[static_cast<std::size_t>(I.indices()[static_cast<std::size_t>(t)] - 1)];
    s += weight * std::norm(c);
  }
  return s;
}

double sigma2_hat(const FourierTable& tbl, const FactorVector& fv) {
  check_table_dim(tbl, fv);
  const SymIndexSet fn{fv};
  double s = 0.0;
  for (const auto& [j, c] : tbl.entries()) {
    if (!fn.contains(j)) continue;
    double weight = 0.0;
    for (int i = 0; i < fv.dim(); ++i)
      weight += static_cast<double>(std::abs(j[static_cast<std::size_t>(i)])) / fv.factor(i);
    s += weight * std::norm(c);
  }
  return std::pow(static_cast<double>(fv.total()), 1.0 / fv.dim()) * s;
}

Estimate with_sigma2(Estimate e, const FourierTable& tbl) {
  if (tbl.dim() == e.d) {
    e.sigma2_hat = sigma2_hat(tbl, e.factors);
  } else if (tbl.dim() == static_cast<int>(e.selector.size())) {
    const SubsetSelector sel{e.selector};
    e.sigma2_hat = sigma2_hat(lift_table(tbl, sel, e.d), e.factors);
  } else {
    throw std::invalid_argument("table dimension matches neither d nor |I|");
  }
  return e;
}

Estimate ci_clt(Estimate e, double level) {
  if (!e.sigma2_hat) throw std::invalid_argument("ci_clt: sigma2_hat must be attached first");
  if (!(*e.sigma2_hat >= 0.0)) throw std::invalid_argument("ci_clt: sigma2_hat must be >= 0");
  if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("ci_clt: level must be in (0,1)");
  const double z = normal_quantile(0.5 * (1.0 + level));
  const double rate = std::sqrt(std::pow(static_cast<double>(e.N), 1.0 + 1.0 / e.d));
  const double hw = z * std::sqrt(*e.sigma2_hat) / rate;
  e.ci = ConfidenceInterval{level, e.value - hw, e.value + hw};
  return e;
}

Eigen::MatrixXcd covariance_matrix(const std::vector<FourierTable>& tables,
                                   const std::vector<SubsetSelector>& selectors,
                                   const KappaVector& kappa) {
  const int p = static_cast<int>(tables.size());
  if (p < 1 || selectors.size() != tables.size())
    throw std::invalid_argument("covariance_matrix: need matching tables and selectors");
  const int d = static_cast<int>(kappa.kappas.size());
  std::vector<FourierTable> lifted;
  lifted.reserve(tables.size());
  for (int l = 0; l < p; ++l) {
    if (!selectors[static_cast<std::size_t>(l)].valid_for(d))
      throw std::invalid_argument("covariance_matrix: selector exceeds kappa dimension");
    lifted.push_back(tables[static_cast<std::size_t>(l)].dim() == d &&
                             selectors[static_cast<std::size_t>(l)].is_full(d)
                         ? tables[static_cast<std::size_t>(l)]
                         : lift_table(tables[static_cast<std::size_t>(l)],
                                      selectors[static_cast<std::size_t>(l)], d));
  }
  Eigen::MatrixXcd sigma(p, p);
  for (int a = 0; a < p; ++a)
    for (int b = a; b < p; ++b) {
      std::complex<double> acc = 0.0;
      for (const auto& [j, ca] : lifted[static_cast<std::size_t>(a)].entries()) {
        const std::complex<double> cb = lifted[static_cast<std::size_t>(b)].at(j);
        if (cb == std::complex<double>{0.0, 0.0}) continue;
        double weight = 0.0;
        for (int i = 0; i < d; ++i)
          weight += std::abs(j[static_cast<std::size_t>(i)]) / kappa.kappas[static_cast<std::size_t>(i)];
        acc += weight * ca * std::conj(cb);
      }
      sigma(a, b) = acc;
      sigma(b, a) = std::conj(acc);
    }
  return sigma;
}

void save_estimate(const Estimate& e, const std::string& json_path) {
  nlohmann::json out;
  out["value"] = e.value;
  out["sigma2_hat"] = e.sigma2_hat ? nlohmann::json(*e.sigma2_hat) : nlohmann::json(nullptr);
  out["ci"] = e.ci ? nlohmann::json{{"level", e.ci->level}, {"lo", e.ci->lo}, {"hi", e.ci->hi}}
                   : nlohmann::json(nullptr);
  out["N"] = e.N;
  out["d"] = e.d;
  out["I"] = e.selector;
  out["seed"] = {{"base", e.seed.base}, {"stream", e.seed.stream}};
  std::ofstream f(json_path);
  if (!f) throw IoError("cannot open for writing: " + json_path);
  f << out.dump(2) << "\n";
  if (!f.good()) throw IoError("write failed: " + json_path);
}

}  // namespace ddpp
