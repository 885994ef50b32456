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

#include "dyadic/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dyadic/lines.hpp"

namespace dyadic {

CirculantA build_circulant(const DyadicParams& params) {
  const int p = params.p;
  CirculantA a;
  a.p = p;
  a.entries.resize(static_cast<std::size_t>(p) * p);
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) {
      a.entries[r * p + c] = std::int64_t{1} << ((p - 1 + c - r) % p);
    }
  }
  return a;
}

namespace {

std::complex<double> root_of_unity(int k, int p) {
  // Exact values at the real axis keep the even-p minimum exact.
  if (k == 0) return {1.0, 0.0};
  if (2 * k == p) return {-1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * k / p;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::vector<std::complex<double>> eigs_via_roots(const DyadicParams& params) {
  const int p = params.p;
  const auto a = build_circulant(params);
  const double scale = static_cast<double>(params.denom);

  std::vector<std::complex<double>> eigs;
  eigs.reserve(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    const std::complex<double> lambda = root_of_unity(k, p);
    const std::complex<double> mu = scale / (2.0 - lambda);

    // P v = lambda v needs v_j = lambda^{-j} = conj(lambda)^j, the DFT
    // vector matching this row convention; check A v = mu v on it.
    std::vector<std::complex<double>> v(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) v[j] = std::pow(std::conj(lambda), j);
    double residual = 0.0;
    for (int r = 0; r < p; ++r) {
      std::complex<double> acc = 0.0;
      for (int c = 0; c < p; ++c) acc += static_cast<double>(a.at(r, c)) * v[c];
      residual = std::max(residual, std::abs(acc - mu * v[r]));
    }
    if (residual >= 1e-9 * std::abs(mu)) {
      throw consistency_error("eigenvalue residual check failed at p=" +
                              std::to_string(p) + ", k=" + std::to_string(k));
    }
    eigs.push_back(mu);
  }
  return eigs;
}

double min_symmetrized_eig(const DyadicParams& params) {
  const int p = params.p;
  if (p % 2 == 0) {
    // lambda = -1 is a p-th root of unity and f(-1) = 1/3 is the circle's
    // leftmost point, so the minimum is exact.
    return static_cast<double>(params.denom) / 3.0;
  }
  double min_re = 1.0;  // f(1) = 1 is attained at k = 0
  for (int k = 0; k < p; ++k) {
    const std::complex<double> f = 1.0 / (2.0 - root_of_unity(k, p));
    min_re = std::min(min_re, f.real());
  }
  return static_cast<double>(params.denom) * min_re;
}

Rational ell_value(std::span<const Rational> x) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += Rational(BigInt(1) << i) * x[i];
  }
  return acc;
}

Rational ell_deviation(std::span<const Rational> x,
                       const DyadicParams& params) {
  if (x.size() != static_cast<std::size_t>(params.p)) {
    throw argument_error("vector length must equal p");
  }
  return x[params.p - 1] - ell_value(x) / params.denom;
}

namespace {

std::vector<Rational> cycled(std::span<const Rational> x, int shift) {
  // (P^i x)_k = x_{(k - i) mod p}
  const int p = static_cast<int>(x.size());
  std::vector<Rational> out(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    out[k] = x[((k - shift) % p + p) % p];
  }
  return out;
}

}  // namespace

Rational quad_form_a(std::span<const Rational> y, const DyadicParams& params) {
  const int p = params.p;
  if (y.size() != static_cast<std::size_t>(p)) {
    throw argument_error("vector length must equal p");
  }

  Rational direct = 0;
  for (int i = 0; i < p; ++i) {
    direct += y[p - 1 - i] * ell_value(cycled(y, i));
  }

  const auto a = build_circulant(params);
  Rational via_matrix = 0;
  for (int r = 0; r < p; ++r) {
    Rational row = 0;
    for (int c = 0; c < p; ++c) row += Rational(a.at(r, c)) * y[c];
    via_matrix += row * y[r];
  }

  if (direct != via_matrix) {
    throw consistency_error(
        "a(y) != <Ay, y>: the two quadratic-form routes disagree");
  }
  return direct;
}

namespace {

// Gray-code walk over sign vertices s in {-1, +1}^p, maintaining As, A^T s
// and <As, s> under single-coordinate flips.
template <typename Visit>
void for_each_vertex_quadform(int p, std::span<const std::int64_t> a,
                              Visit&& visit) {
  const auto at = [&](int r, int c) { return a[r * p + c]; };
  std::vector<std::int64_t> s(static_cast<std::size_t>(p), 1);
  std::vector<std::int64_t> as(static_cast<std::size_t>(p), 0);
  std::vector<std::int64_t> ats(static_cast<std::size_t>(p), 0);
  std::int64_t value = 0;
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) {
      as[r] += at(r, c);
      ats[r] += at(c, r);
    }
    value += as[r];
  }

  const std::uint64_t count = std::uint64_t{1} << p;
  std::uint32_t gray = 0;
  visit(gray, value);
  for (std::uint64_t k = 1; k < count; ++k) {
    const int j = std::countr_zero(k);  // flip coordinate j
    value -= 2 * s[j] * (as[j] + ats[j]) - 4 * at(j, j);
    s[j] = -s[j];
    const std::int64_t delta = 2 * s[j];
    for (int r = 0; r < p; ++r) {
      as[r] += delta * at(r, j);
      ats[r] += delta * at(j, r);
    }
    gray ^= std::uint32_t{1} << j;
    visit(gray, value);
  }
}

}  // namespace

HypercubeMin hypercube_min(const DyadicParams& params) {
  if (params.p > 20) {
    throw resource_error("hypercube enumeration limited to p <= 20");
  }
  const auto a = build_circulant(params);
  HypercubeMin out{};
  bool first = true;
  for_each_vertex_quadform(
      params.p, a.entries, [&](std::uint32_t mask, std::int64_t value) {
        if (first || value < out.min_times4) {
          out.min_times4 = value;
          out.argmin = mask;
          first = false;
        }
      });

  const std::int64_t floor_bound = params.p * params.denom;  // 3 * bound
  if (3 * out.min_times4 < floor_bound ||
      (params.p % 2 == 0) != (3 * out.min_times4 == floor_bound)) {
    throw consistency_error("hypercube minimum violates the p/12 bound shape");
  }
  return out;
}

Rational q_of_x(std::int64_t x, const DyadicParams& params) {
  detail::check_x(x, params);
  std::int64_t num = 0;
  for (int i = 0; i < params.p; ++i) {
    if ((x >> (params.p - 1 - i)) & 1) num += ei_num(x, i, params);
  }
  return Rational(num, params.denom);
}

TracePair trace_expectation_check(const DyadicParams& params,
                                  std::span<const std::int64_t> matrix) {
  const int p = params.p;
  if (p > 12) throw resource_error("vertex enumeration limited to p <= 12");
  if (matrix.size() != static_cast<std::size_t>(p) * p) {
    throw argument_error("matrix must be p x p");
  }

  // <Ay, y> at y = s/2 is <As, s>/4; average exactly over all vertices.
  BigInt sum = 0;
  for_each_vertex_quadform(p, matrix,
                           [&](std::uint32_t, std::int64_t v) { sum += v; });

  std::int64_t trace = 0;
  for (int r = 0; r < p; ++r) trace += matrix[r * p + r];

  TracePair pair;
  pair.lhs = Rational(sum, BigInt(1) << (p + 2));
  pair.rhs = Rational(trace, 4);
  if (pair.lhs != pair.rhs) {
    throw consistency_error("vertex average of <Ay,y> != tr A / 4");
  }
  return pair;
}

Rational ell_deviation_trace_sum(const DyadicParams& params) {
  const int p = params.p;
  std::vector<Rational> e(static_cast<std::size_t>(p), Rational(0));
  Rational sum = 0;
  for (int i = 0; i < p; ++i) {
    e[i] = 1;
    const Rational v = ell_deviation(e, params);
    sum += v * v;
    e[i] = 0;
  }
  return sum;
}

Rational ell_deviation_vertex_average(const DyadicParams& params) {
  const int p = params.p;
  if (p > 12) throw resource_error("vertex enumeration limited to p <= 12");
  const std::int64_t d = params.denom;

  // ell_deviation(s/2) = (d * s_{p-1} - sum_i 2^i s_i) / (2d); enumerate the
  // integer numerator over all sign vertices.
  BigInt sum_sq = 0;
  const std::uint64_t count = std::uint64_t{1} << p;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::int64_t val = 0;
    for (int i = 0; i < p; ++i) {
      const std::int64_t s = (mask >> i) & 1 ? -1 : 1;
      val += s * (std::int64_t{1} << i);
    }
    const std::int64_t top = (mask >> (p - 1)) & 1 ? -1 : 1;
    const std::int64_t num = d * top - val;
    sum_sq += BigInt(num) * num;
  }
  return Rational(sum_sq, (BigInt(1) << p) * 4 * d * d);
}

SpectralReport spectral_report(const DyadicParams& params) {
  SpectralReport rep;
  rep.p = params.p;
  rep.eigenvalues = eigs_via_roots(params);
  rep.min_sym_eig = min_symmetrized_eig(params);
  const auto cube = hypercube_min(params);
  rep.hypercube_min_times4 = cube.min_times4;
  rep.bound_holds = 3 * cube.min_times4 >= params.p * params.denom;
  rep.sharp = 3 * cube.min_times4 == params.p * params.denom;
  return rep;
}

}  // namespace dyadic
