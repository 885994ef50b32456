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
#include <optional>
#include <vector>

#include "dyadic/params.hpp"
#include "dyadic/rational.hpp"

// Statistics of the deviation numerators num(x, t) over the n x n image:
// extrema, exact moments, tail fractions, histograms and distance to normal.
// Everything below the exhaustive p-limits is an exact enumeration; above
// them a seeded counter-based sample is used and (count, seed) are carried
// in every report.

namespace dyadic {

struct SampleSpec {
  std::uint64_t count;
  std::uint64_t seed;
};

/// Multiset of deviation numerators, compressed to (value, multiplicity)
/// atoms in increasing value order. The common input of every statistic.
struct DeviationTally {
  int p;
  std::vector<std::pair<std::int64_t, std::uint64_t>> atoms;
  std::uint64_t total = 0;
  std::optional<SampleSpec> sample;  // empty = exhaustive over all (x, t)

  // extrema bookkeeping from the scan; arg pair of the first maximum seen
  std::int64_t min_num = 0;
  std::int64_t max_num = 0;
  std::int64_t argmax_x = 0;
  std::int64_t argmax_t = 0;
};

/// All 2^(2p) pairs. p <= 14.
DeviationTally exhaustive_tally(const DyadicParams& params);

/// `count` uniform (x, t) draws from the counter RNG stream of `seed`.
DeviationTally sampled_tally(const DyadicParams& params, SampleSpec sample);

struct Extrema {
  std::int64_t min_num;
  std::int64_t max_num;
  std::int64_t argmax_x;
  std::int64_t argmax_t;
};

/// Exact min/max of num over all pairs (p <= 14). 6*|num| <= p*(2^p - 1)
/// with equality iff p is even.
Extrema exhaustive_extrema(const DyadicParams& params);

struct MomentReport {
  enum class Path { doubly_exhaustive, x_only };
  int p;
  Path path;
  BigInt sum_num;     // sum of num over all (x, t)
  BigInt sum_num_sq;  // sum of num^2 over all (x, t)
  Rational mean;
  Rational variance;
  Rational variance_formula;  // p/48 * (1 - 1/(2^p - 1))
};

/// Exact mean and variance of E(x, t). Dispatches to the pairwise scan for
/// p <= 12 and to the x-only route otherwise. Both paths check the integer
/// identity 48 * sum(num^2) = p * 2^(2p) * (2^p - 1) * (2^p - 2).
MomentReport moments(const DyadicParams& params);
MomentReport moments_pairs(const DyadicParams& params);   // p <= 12
MomentReport moments_xonly(const DyadicParams& params);   // p <= 24

struct TailReport {
  int p;
  Rational threshold;
  BigInt count_ge;
  Rational fraction_ge;
  std::optional<Rational> markov_bound;  // p/48 / threshold^2, absent at 0
  std::optional<SampleSpec> sample;
};

/// Fraction of pairs with |E| >= threshold. Exhaustive for p <= 12 unless a
/// sample spec is given.
TailReport tail_fraction(const DyadicParams& params, const Rational& threshold,
                         std::optional<SampleSpec> sample = std::nullopt);
TailReport tail_fraction(const DeviationTally& tally,
                         const Rational& threshold);

struct HistogramBin {
  double center;
  Rational mass;
};

/// Mass per bin over [-p/6, p/6], mirror-symmetric binning centered at 0.
/// Edge values are assigned outward symmetrically, so for odd bin counts
/// mass(k) == mass(bins-1-k) exactly; with an even count the atom at 0 goes
/// to bin bins/2.
std::vector<HistogramBin> histogram(const DyadicParams& params, int bins,
                                    std::optional<SampleSpec> sample = std::nullopt);
std::vector<HistogramBin> histogram(const DeviationTally& tally, int bins);

struct NormalityReport {
  int p;
  std::optional<SampleSpec> sample;
  double ks_distance;     // sup_a |F_emp(a) - Phi(a)|
  double normalization;   // sqrt(48/p): e -> sqrt(48) * e / sqrt(p)
};

/// Kolmogorov-Smirnov distance between the normalized deviation
/// sqrt(48) * E / sqrt(p) and the standard normal. Exhaustive for p <= 12;
/// sampled mode required beyond.
NormalityReport ks_distance(const DyadicParams& params,
                            std::optional<SampleSpec> sample = std::nullopt);
NormalityReport ks_distance(const DeviationTally& tally);

}  // namespace dyadic
