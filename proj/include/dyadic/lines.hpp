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

#include <cstdint>
#include <string>

#include "dyadic/errors.hpp"
#include "dyadic/params.hpp"

// Exact integer model of dyadic lines. A dyadic line of slope index t is the
// bitwise sum of basic lines round(2^i x / (2^p - 1)); its deviation from the
// ideal line t*x/(2^p - 1) is a rational with denominator 2^p - 1, and this
// module works with the integer numerators only.

namespace dyadic {

namespace detail {

// round(2^i * x / denom) as floor((2 * 2^i * x + denom) / (2 * denom)).
// denom is odd, so the half-way tie can never occur and the round-half-up
// choice is immaterial.
inline std::int64_t basic_line_unchecked(std::int64_t x, int i,
                                         const DyadicParams& params) {
  const std::int64_t num = (std::int64_t{1} << i) * x;
  return (2 * num + params.denom) / (2 * params.denom);
}

inline std::int64_t dyadic_line_unchecked(std::int64_t x, std::int64_t t,
                                          const DyadicParams& params) {
  std::int64_t y = 0;
  for (int i = 0; i < params.p; ++i) {
    if ((t >> i) & 1) y += basic_line_unchecked(x, i, params);
  }
  return y;
}

inline std::int64_t rotl_unchecked(std::int64_t x, int i,
                                   const DyadicParams& params) {
  if (i == 0) return x;
  return ((x << i) | (x >> (params.p - i))) & params.denom;
}

// Numerator of E_0 at the p-bit string v: denom * v_{p-1} - v.
inline std::int64_t e0_num_unchecked(std::int64_t v,
                                     const DyadicParams& params) {
  return (v >> (params.p - 1)) ? params.denom - v : -v;
}

inline void check_x(std::int64_t x, const DyadicParams& params) {
  if (x < 0 || x >= params.n) {
    throw argument_error("x out of range [0, " + std::to_string(params.n - 1) +
                         "]: " + std::to_string(x));
  }
}

inline void check_t(std::int64_t t, const DyadicParams& params) {
  if (t < 0 || t >= params.n) {
    throw argument_error("t out of range [0, " + std::to_string(params.n - 1) +
                         "]: " + std::to_string(t));
  }
}

inline void check_i(int i, const DyadicParams& params) {
  if (i < 0 || i >= params.p) {
    throw argument_error("bit index out of range [0, " +
                         std::to_string(params.p - 1) +
                         "]: " + std::to_string(i));
  }
}

}  // namespace detail

/// Basic dyadic line of slope 2^i: round(2^i x / (2^p - 1)), in [0, 2^i].
inline std::int64_t basic_line(std::int64_t x, int i,
                               const DyadicParams& params) {
  detail::check_x(x, params);
  detail::check_i(i, params);
  return detail::basic_line_unchecked(x, i, params);
}

/// Dyadic line D(x, t) = sum over set bits i of t of basic_line(x, i).
/// Connects (0, 0) to (n - 1, t); value in [0, t].
inline std::int64_t dyadic_line(std::int64_t x, std::int64_t t,
                                const DyadicParams& params) {
  detail::check_x(x, params);
  detail::check_t(t, params);
  return detail::dyadic_line_unchecked(x, t, params);
}

/// Exact numerator of the deviation E(x, t) = D(x, t) - t x / (2^p - 1)
/// over the common denominator 2^p - 1.
struct DeviationNumerator {
  std::int64_t x;
  std::int64_t t;
  std::int64_t num;  // denom * D(x,t) - t * x
};

inline DeviationNumerator deviation_num(std::int64_t x, std::int64_t t,
                                        const DyadicParams& params) {
  detail::check_x(x, params);
  detail::check_t(t, params);
  const std::int64_t d = detail::dyadic_line_unchecked(x, t, params);
  return DeviationNumerator{x, t, params.denom * d - t * x};
}

/// Circular left shift of the p-bit string of x by i positions. Bijective on
/// [0, n - 1]; any integer i is reduced mod p, so rotl(x, p) == x.
inline std::int64_t rotl(std::int64_t x, std::int64_t i,
                         const DyadicParams& params) {
  detail::check_x(x, params);
  const int r = static_cast<int>(((i % params.p) + params.p) % params.p);
  return detail::rotl_unchecked(x, r, params);
}

/// Numerator of E_i(x) = round(2^i x / denom) - 2^i x / denom over denom.
/// Satisfies ei_num(x, i) == ei_num(rotl(x, i), 0).
inline std::int64_t ei_num(std::int64_t x, int i, const DyadicParams& params) {
  detail::check_x(x, params);
  detail::check_i(i, params);
  return params.denom * detail::basic_line_unchecked(x, i, params) -
         (std::int64_t{1} << i) * x;
}

}  // namespace dyadic
