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
#include <span>

#include "ddpp/indexing.hpp"

namespace ddpp {

/// Fourier eigenfunction phi_j(x) = exp(2*i*pi * j.x). Unit modulus.
/// Throws std::invalid_argument on dimension mismatch.
std::complex<double> eigenfunction_eval(const MultiIndex& j, std::span<const double> x);

/// One-dimensional Dirichlet factor sum_{j=0}^{n-1} exp(2*i*pi*j*t), evaluated
/// as exp(i*pi*(n-1)*t) * sin(pi*n*t)/sin(pi*t); the removable singularity at
/// integer t returns n * exp(i*pi*(n-1)*t).
std::complex<double> dirichlet_factor(int n, double t);

/// Stationary kernel K(delta) = sum_{j in E_N} exp(2*i*pi * j.delta)
/// = prod_i dirichlet_factor(n_i, delta_i). K(0) = N and |K| <= N.
std::complex<double> kernel_eval(const FactorVector& fv, std::span<const double> delta);

/// k-th order intensity det[K(x_i - x_j)] for k pairwise-distinct points
/// (flat row-major, k rows of fv.dim() coordinates). Returns 0 by convention
/// if two inputs coincide.
double intensity_k(const FactorVector& fv, std::span<const double> points, int k);

/// Pair correlation 1 - |K(x-y)|^2 / N^2, in [0,1]; 0 at x == y by convention.
double pcf_eval(const FactorVector& fv, std::span<const double> x, std::span<const double> y);

/// Pair correlation of the projected pattern X_I: 1 - |K_I(x-y)|^2 / (N * N_I)
/// with K_I the (N_I, iota)-Dirichlet factor kernel. Values in [1 - N_I/N, 1].
/// x, y live in the projected space [0,1]^iota.
double pcf_projected_eval(const FactorVector& fv, const SubsetSelector& I,
                          std::span<const double> x, std::span<const double> y);

}  // namespace ddpp
