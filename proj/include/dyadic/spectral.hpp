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
#include <span>
#include <vector>

#include "dyadic/params.hpp"
#include "dyadic/rational.hpp"

// The circulant-matrix route to the worst-case bound: the p x p matrix
// A = sum_k 2^(p-1-k) P^k, its spectrum (2^p - 1)/(2 - lambda) over the p-th
// roots of unity, the quadratic form a(y) = <Ay, y> minimized over the
// centered hypercube, and the trace identity behind the variance formula.
//
// Two different linear functionals both written as "ell" in the source
// material are kept strictly apart here:
//   ell_value(x)     = sum_i 2^i x_i                    (binary value form)
//   ell_deviation(x) = x_{p-1} - ell_value(x)/(2^p - 1) (linearized E_0)

namespace dyadic {

/// Circulant matrix with entries A[r][c] = 2^((p - 1 + c - r) mod p).
struct CirculantA {
  int p;
  std::vector<std::int64_t> entries;  // row-major p x p

  std::int64_t at(int r, int c) const { return entries[r * p + c]; }
};

CirculantA build_circulant(const DyadicParams& params);

/// Eigenvalues (2^p - 1) / (2 - lambda_k) for the p-th roots of unity
/// lambda_k. Each is verified against A by an explicit residual check on the
/// DFT eigenvector; a residual above 1e-9 throws consistency_error.
std::vector<std::complex<double>> eigs_via_roots(const DyadicParams& params);

/// (2^p - 1) * min_k Re f(lambda_k), the smallest eigenvalue of
/// (A + A^T)/2. Exactly (2^p - 1)/3 for even p (lambda = -1 is then a root
/// of unity), strictly greater for odd p.
double min_symmetrized_eig(const DyadicParams& params);

/// Exact value functional sum_i 2^i x_i.
Rational ell_value(std::span<const Rational> x);

/// Linearized E_0: x_{p-1} - ell_value(x) / (2^p - 1).
Rational ell_deviation(std::span<const Rational> x, const DyadicParams& params);

/// a(y) evaluated two ways, sum_i y_{p-1-i} ell_value(P^i y) and <Ay, y>,
/// in exact rationals; disagreement throws consistency_error.
Rational quad_form_a(std::span<const Rational> y, const DyadicParams& params);

struct HypercubeMin {
  std::int64_t min_times4;  // min over sign vertices of 4 a(y) = <As, s>
  std::uint32_t argmin;     // bit i set <=> s_i = -1
};

/// Exact minimum of 4 a(y) over the 2^p vertices (+-1/2, ..., +-1/2),
/// enumerated by Gray code in O(p) per vertex. p <= 20.
HypercubeMin hypercube_min(const DyadicParams& params);

/// q(x) = sum_i x_{p-1-i} E_i(x) for a binary x; equals max_t E(x, t).
Rational q_of_x(std::int64_t x, const DyadicParams& params);

struct TracePair {
  Rational lhs;  // vertex average of <Ay, y>
  Rational rhs;  // tr A / 4
};

/// Vertex average of <Ay, y> vs tr A / 4 for an arbitrary integer matrix;
/// inequality throws consistency_error. p <= 12.
TracePair trace_expectation_check(const DyadicParams& params,
                                  std::span<const std::int64_t> matrix);

/// sum_i ell_deviation(e_i)^2 with e_i = P^i e_0; equals
/// (1/3)(1 - 1/(2^p - 1)) exactly.
Rational ell_deviation_trace_sum(const DyadicParams& params);

/// Vertex average of ell_deviation(y)^2, for the trace check on the rank-one
/// form. p <= 12.
Rational ell_deviation_vertex_average(const DyadicParams& params);

struct SpectralReport {
  int p;
  std::vector<std::complex<double>> eigenvalues;
  double min_sym_eig;
  std::int64_t hypercube_min_times4;
  bool bound_holds;  // 3 * hypercube_min_times4 >= p * (2^p - 1)
  bool sharp;        // equality above (iff p even)
};

SpectralReport spectral_report(const DyadicParams& params);

}  // namespace dyadic
