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

#include "dyadic/ergodic.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <string>

#include "dyadic/lines.hpp"
#include "dyadic/parallel.hpp"

namespace dyadic {

double sawtooth_f(double x) {
  if (x < 0.0 || x > 1.0) {
    throw argument_error("sawtooth argument outside [0, 1]");
  }
  return x < 0.5 ? -x : 1.0 - x;
}

double doubling(double x) {
  if (x < 0.0 || x > 1.0) {
    throw argument_error("doubling argument outside [0, 1]");
  }
  return x < 0.5 ? 2.0 * x : 2.0 * x - 1.0;
}

namespace {

constexpr int kPsiBlocks = 256;

// Numerator of f(v / (2^p - 1)) over 2^p - 1: -v on the lower half,
// denom - v on the upper.
inline std::int64_t f_num(std::int64_t v, const DyadicParams& params) {
  return detail::e0_num_unchecked(v, params);
}

// prod over the rotation orbit of x of factor[rotl(x, i)], summed over all
// x in a fixed 256-block pairwise order so the result does not depend on the
// worker count.
std::complex<double> orbit_product_mean(
    const DyadicParams& params,
    const std::vector<std::complex<double>>& factor) {
  const int p = params.p;
  const std::int64_t n = params.n;
  std::vector<std::complex<double>> block_sum(kPsiBlocks, 0.0);

  parallel_blocks(n, kPsiBlocks, [&](int block, std::int64_t lo,
                                     std::int64_t hi) {
    std::complex<double> acc = 0.0;
    for (std::int64_t x = lo; x < hi; ++x) {
      std::complex<double> prod = factor[static_cast<std::size_t>(x)];
      std::int64_t v = x;
      for (int i = 1; i < p; ++i) {
        v = detail::rotl_unchecked(v, 1, params);
        prod *= factor[static_cast<std::size_t>(v)];
      }
      acc += prod;
    }
    block_sum[block] = acc;
  });

  std::complex<double> total = 0.0;
  for (const auto& s : block_sum) total += s;
  return total / static_cast<double>(n);
}

}  // namespace

std::complex<double> psi_exact(const DyadicParams& params, double xi) {
  if (params.p > 22) {
    throw resource_error("psi_exact limited to p <= 22 (p * 2^p factor table)");
  }
  const int p = params.p;
  const std::int64_t n = params.n;
  const double scale = xi / (std::sqrt(static_cast<double>(p)) *
                             static_cast<double>(params.denom));

  std::vector<std::complex<double>> factor(static_cast<std::size_t>(n));
  for (std::int64_t v = 0; v < n; ++v) {
    const double theta = scale * static_cast<double>(f_num(v, params));
    factor[static_cast<std::size_t>(v)] =
        0.5 * (1.0 + std::complex<double>(std::cos(theta), std::sin(theta)));
  }
  return orbit_product_mean(params, factor);
}

GridFunction GridFunction::constant(std::size_t m, std::complex<double> v) {
  if (m < 2 || (m & (m - 1)) != 0) {
    throw argument_error("grid size must be a power of two >= 2");
  }
  GridFunction g;
  g.m = m;
  g.values.assign(m, v);
  return g;
}

std::complex<double> GridFunction::eval(double x) const {
  const double u = x * static_cast<double>(m) - 0.5;
  if (u <= 0.0) return values.front();
  if (u >= static_cast<double>(m - 1)) return values.back();
  const auto j = static_cast<std::size_t>(u);
  const double frac = u - static_cast<double>(j);
  return values[j] + frac * (values[j + 1] - values[j]);
}

std::complex<double> GridFunction::mean() const {
  std::complex<double> acc = 0.0;
  for (const auto& v : values) acc += v;
  return acc / static_cast<double>(m);
}

GridFunction transfer_L0(const GridFunction& h) {
  if (h.m < 4) throw argument_error("transfer grid must have m >= 4");
  GridFunction out;
  out.m = h.m;
  out.values.resize(h.m);
  const double inv_m = 1.0 / static_cast<double>(h.m);
  for (std::size_t j = 0; j < h.m; ++j) {
    const double x = (static_cast<double>(j) + 0.5) * inv_m;
    out.values[j] = 0.5 * (h.eval(0.5 * x) + h.eval(0.5 + 0.5 * x));
  }
  return out;
}

GridFunction transfer_L_xi(const GridFunction& h, double xi) {
  if (h.m < 4) throw argument_error("transfer grid must have m >= 4");
  GridFunction out;
  out.m = h.m;
  out.values.resize(h.m);
  const double inv_m = 1.0 / static_cast<double>(h.m);
  for (std::size_t j = 0; j < h.m; ++j) {
    const double x = (static_cast<double>(j) + 0.5) * inv_m;
    const std::complex<double> lo =
        h.eval(0.5 * x) *
        (1.0 + std::exp(std::complex<double>(0.0, -xi * 0.5 * x)));
    const std::complex<double> hi =
        h.eval(0.5 + 0.5 * x) *
        (1.0 + std::exp(std::complex<double>(0.0, xi * 0.5 * (1.0 - x))));
    out.values[j] = 0.25 * (lo + hi);
  }
  return out;
}

std::complex<double> psi_nagaev(const DyadicParams& params, double xi,
                                std::size_t m) {
  if (m > (std::size_t{1} << 26)) {
    throw resource_error("transfer grid limited to m <= 2^26");
  }
  const double twisted = xi / std::sqrt(static_cast<double>(params.p));
  GridFunction h = GridFunction::constant(m);
  for (int step = 0; step < params.p; ++step) {
    h = transfer_L_xi(h, twisted);
  }
  return h.mean();
}

double discretization_gap(const DyadicParams& params, double xi) {
  if (params.p > 10) {
    throw resource_error("discretization gap limited to p <= 10");
  }
  const int p = params.p;
  const std::int64_t n = params.n;

  // u_p as a function of a real x: the orbit under T stays exact as long as
  // the branch points j/2^p are avoided, which per-interval quadrature does.
  const auto u_p = [&](double x) {
    std::complex<double> prod = 1.0;
    double y = x;
    for (int i = 0; i < p; ++i) {
      prod *= 0.5 * (1.0 + std::exp(std::complex<double>(
                               0.0, xi * (y < 0.5 ? -y : 1.0 - y))));
      y = y < 0.5 ? 2.0 * y : 2.0 * y - 1.0;
    }
    return prod;
  };

  using gauss7 = boost::math::quadrature::gauss<double, 7>;
  std::complex<double> integral = 0.0;
  for (std::int64_t j = 0; j < n; ++j) {
    const double a = static_cast<double>(j) / static_cast<double>(n);
    const double b = static_cast<double>(j + 1) / static_cast<double>(n);
    const double re =
        gauss7::integrate([&](double x) { return u_p(x).real(); }, a, b);
    const double im =
        gauss7::integrate([&](double x) { return u_p(x).imag(); }, a, b);
    integral += std::complex<double>(re, im);
  }

  std::complex<double> sum = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    std::complex<double> prod = 1.0;
    std::int64_t v = i;
    for (int k = 0; k < p; ++k) {
      const double fv = static_cast<double>(f_num(v, params)) /
                        static_cast<double>(params.denom);
      prod *= 0.5 * (1.0 + std::exp(std::complex<double>(0.0, xi * fv)));
      v = detail::rotl_unchecked(v, 1, params);
    }
    sum += prod;
  }
  sum /= static_cast<double>(n);

  const double gap = std::abs(integral - sum);
  if (gap >= std::abs(xi) && xi != 0.0) {
    throw consistency_error("discretization gap exceeds |xi| at p=" +
                            std::to_string(p));
  }
  return gap;
}

std::vector<double> default_xi_grid(double xi_max, int steps) {
  if (steps < 1 || xi_max <= 0.0) {
    throw argument_error("xi grid needs xi_max > 0 and steps >= 1");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    grid[static_cast<std::size_t>(k)] = xi_max * k / steps;
  }
  return grid;
}

CharFnReport clt_report_one(const DyadicParams& params,
                            std::span<const double> xi_grid,
                            std::optional<std::size_t> grid_m) {
  CharFnReport rep;
  rep.p = params.p;
  rep.rows.reserve(xi_grid.size());
  for (const double xi : xi_grid) {
    CharFnRow row;
    row.xi = xi;
    row.psi = psi_exact(params, xi);
    row.gauss = std::exp(-xi * xi / 96.0);
    row.abs_err = std::abs(row.psi - row.gauss);
    if (grid_m) {
      row.nagaev = psi_nagaev(params, xi, *grid_m);
      row.nagaev_err = std::abs(*row.nagaev - row.psi);
      rep.sup_err_nagaev_vs_exact =
          std::max(rep.sup_err_nagaev_vs_exact, *row.nagaev_err);
    }
    rep.sup_err_exact_vs_gauss =
        std::max(rep.sup_err_exact_vs_gauss, row.abs_err);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<CharFnReport> clt_report(std::span<const int> ps,
                                     std::span<const double> xi_grid,
                                     std::optional<std::size_t> grid_m) {
  std::vector<CharFnReport> out;
  out.reserve(ps.size());
  for (const int p : ps) {
    out.push_back(clt_report_one(DyadicParams(p), xi_grid, grid_m));
  }
  return out;
}

}  // namespace dyadic
