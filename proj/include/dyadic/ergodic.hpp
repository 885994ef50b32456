// Copyright 2026 The dyadic-fht Authors
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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dyadic/params.hpp"

// Dynamical-systems view of the deviations: the doubling map acting on the
// repeating binary fractions i/(2^p - 1), the sawtooth observable, exact
// characteristic functions of the normalized deviation, and a grid transfer
// operator realizing Nagaev's identity psi_p(xi) = integral of L_{xi/sqrt p}^p 1.
//
// The exact finite sum psi_exact is the source of truth for the
// central-limit evidence; the operator route is a cross-check of the
// identity, since any grid is a discretization choice of ours.

namespace dyadic {

/// Sawtooth observable: -x below 1/2, 1 - x from 1/2 on. Domain [0, 1].
double sawtooth_f(double x);

/// Doubling map 2x mod 1, with T(1) = 1 (the branch 2x - 1 extends to the
/// right endpoint), matching the bit rotation on i/(2^p - 1) at all 2^p
/// points including i = 2^p - 1.
double doubling(double x);

/// Exact characteristic function of sqrt(48)-normalizable deviations:
///   psi_p(xi) = 2^-p * sum over x in Delta_p of
///               prod_i (1 + exp(i xi f(T^i x) / sqrt p)) / 2
/// with f(T^i x) evaluated exactly as a rational over 2^p - 1. p <= 22.
std::complex<double> psi_exact(const DyadicParams& params, double xi);

/// Midpoint-sampled function on [0, 1]: values[j] lives at (j + 1/2) / m.
/// Evaluation between samples is linear, constant beyond the end samples
/// (which keeps the grid mean of the transfer image exact).
struct GridFunction {
  std::size_t m = 0;
  std::vector<std::complex<double>> values;

  static GridFunction constant(std::size_t m, std::complex<double> v = 1.0);
  std::complex<double> eval(double x) const;
  std::complex<double> mean() const;
};

/// (L_0 h)(x) = (h(x/2) + h(1/2 + x/2)) / 2 resampled at the grid midpoints.
/// Fixes constants exactly and preserves the grid mean.
GridFunction transfer_L0(const GridFunction& h);

/// Twisted operator L_xi h = L_0((1 + e^{i xi f}) h / 2), in the explicit
/// two-branch form
///   (L_xi h)(x) = 1/4 [ h(x/2)(1 + e^{-i xi x/2})
///                     + h(1/2 + x/2)(1 + e^{i xi (1 - x)/2}) ],
/// using f(1/2 + x/2) = (1 - x)/2 from the sawtooth definition.
GridFunction transfer_L_xi(const GridFunction& h, double xi);

/// Nagaev route: mean of L_{xi/sqrt p}^p applied to 1 on an m-point grid.
std::complex<double> psi_nagaev(const DyadicParams& params, double xi,
                                std::size_t m);

/// | integral of u_p - 2^-p sum over Delta_p of u_p | for the untwisted-
/// scale product u_p(x) = prod_i (1 + exp(i xi f(T^i x))) / 2. The integral
/// uses 7-node Gauss-Legendre on each of the 2^p intervals where u_p is
/// analytic. Result is provably below |xi|. p <= 10.
double discretization_gap(const DyadicParams& params, double xi);

struct CharFnRow {
  double xi;
  std::complex<double> psi;
  double gauss;  // exp(-xi^2 / 96)
  double abs_err;
  std::optional<std::complex<double>> nagaev;
  std::optional<double> nagaev_err;
};

struct CharFnReport {
  int p;
  std::vector<CharFnRow> rows;
  double sup_err_exact_vs_gauss = 0.0;
  double sup_err_nagaev_vs_exact = 0.0;
};

/// Tabulates psi_exact against the Gaussian reference exp(-xi^2/96) fixed by
/// the sqrt(48) normalization, optionally with the Nagaev estimate on an
/// m-point grid.
CharFnReport clt_report_one(const DyadicParams& params,
                            std::span<const double> xi_grid,
                            std::optional<std::size_t> grid_m = std::nullopt);

std::vector<CharFnReport> clt_report(std::span<const int> ps,
                                     std::span<const double> xi_grid,
                                     std::optional<std::size_t> grid_m = std::nullopt);

/// The default evaluation grid xi = 0, 0.25, ..., xi_max.
std::vector<double> default_xi_grid(double xi_max = 4.0, int steps = 16);

}  // namespace dyadic
