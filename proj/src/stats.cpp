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

#include "dyadic/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dyadic/lines.hpp"
#include "dyadic/parallel.hpp"
#include "dyadic/rng.hpp"

namespace dyadic {

namespace {

constexpr int kScanBlocks = 8;

// |num| <= sum_i |e_i| <= p * (2^(p-1) - 1); used to size dense count arrays
// without assuming the p/6 worst-case bound that the scans are meant to test.
std::int64_t safe_num_bound(const DyadicParams& params) {
  return static_cast<std::int64_t>(params.p) * ((params.n >> 1) - 1);
}

struct BlockExtrema {
  std::int64_t min_num = 0;
  std::int64_t max_num = 0;
  std::int64_t argmax_x = 0;
  std::int64_t argmax_t = 0;
  bool seen = false;
};

void finish_extrema(DeviationTally& tally,
                    const std::vector<BlockExtrema>& blocks) {
  bool seen = false;
  for (const auto& b : blocks) {
    if (!b.seen) continue;
    if (!seen || b.max_num > tally.max_num) {
      tally.max_num = b.max_num;
      tally.argmax_x = b.argmax_x;
      tally.argmax_t = b.argmax_t;
    }
    if (!seen || b.min_num < tally.min_num) tally.min_num = b.min_num;
    seen = true;
  }
}

void compress_counts(DeviationTally& tally, const std::vector<std::uint64_t>& counts,
                     std::int64_t bound) {
  for (std::int64_t v = -bound; v <= bound; ++v) {
    const std::uint64_t c = counts[static_cast<std::size_t>(v + bound)];
    if (c != 0) tally.atoms.emplace_back(v, c);
  }
}

double normal_cdf(double a) { return 0.5 * std::erfc(-a / std::sqrt(2.0)); }

}  // namespace

DeviationTally exhaustive_tally(const DyadicParams& params) {
  if (params.p > 14) {
    throw resource_error(
        "exhaustive scan limited to p <= 14 (2^(2p) pairs); use sampled mode");
  }
  const int p = params.p;
  const std::int64_t n = params.n;
  const std::int64_t bound = safe_num_bound(params);

  std::vector<std::vector<std::uint64_t>> counts(
      kScanBlocks,
      std::vector<std::uint64_t>(static_cast<std::size_t>(2 * bound + 1), 0));
  std::vector<BlockExtrema> extrema(kScanBlocks);

  parallel_blocks(n, kScanBlocks, [&](int block, std::int64_t lo,
                                      std::int64_t hi) {
    auto& local = counts[block];
    auto& ext = extrema[block];
    std::vector<std::int32_t> dp(static_cast<std::size_t>(n));
    std::int64_t e[DyadicParams::kMaxP];
    for (std::int64_t x = lo; x < hi; ++x) {
      std::int64_t v = x;
      for (int i = 0; i < p; ++i) {
        e[i] = detail::e0_num_unchecked(v, params);
        v = detail::rotl_unchecked(v, 1, params);
      }
      // num(x, t) for every t via subset sums over the e_i.
      dp[0] = 0;
      std::int64_t cnt = 1;
      for (int i = 0; i < p; ++i) {
        const auto ei = static_cast<std::int32_t>(e[i]);
        for (std::int64_t j = 0; j < cnt; ++j) dp[cnt + j] = dp[j] + ei;
        cnt <<= 1;
      }
      for (std::int64_t t = 0; t < n; ++t) {
        const std::int64_t num = dp[t];
        ++local[static_cast<std::size_t>(num + bound)];
        if (!ext.seen || num > ext.max_num) {
          ext.max_num = num;
          ext.argmax_x = x;
          ext.argmax_t = t;
        }
        if (!ext.seen || num < ext.min_num) ext.min_num = num;
        ext.seen = true;
      }
    }
  });

  for (int b = 1; b < kScanBlocks; ++b) {
    for (std::size_t i = 0; i < counts[0].size(); ++i)
      counts[0][i] += counts[b][i];
  }

  DeviationTally tally;
  tally.p = p;
  tally.total = std::uint64_t{1} << (2 * p);
  compress_counts(tally, counts[0], bound);
  finish_extrema(tally, extrema);
  return tally;
}

DeviationTally sampled_tally(const DyadicParams& params, SampleSpec sample) {
  if (sample.count == 0) throw argument_error("sample count must be positive");
  const int p = params.p;
  const std::int64_t mask = params.n - 1;

  std::vector<std::int64_t> values(sample.count);
  std::vector<BlockExtrema> extrema(64);

  parallel_blocks(
      static_cast<std::int64_t>(sample.count), 64,
      [&](int block, std::int64_t lo, std::int64_t hi) {
        auto& ext = extrema[block];
        for (std::int64_t idx = lo; idx < hi; ++idx) {
          const std::uint64_t r =
              counter_rng(sample.seed, static_cast<std::uint64_t>(idx));
          const std::int64_t x = static_cast<std::int64_t>(r) & mask;
          const std::int64_t t = static_cast<std::int64_t>(r >> p) & mask;
          std::int64_t v = x;
          std::int64_t num = 0;
          for (int i = 0; i < p; ++i) {
            if ((t >> i) & 1) num += detail::e0_num_unchecked(v, params);
            v = detail::rotl_unchecked(v, 1, params);
          }
          values[static_cast<std::size_t>(idx)] = num;
          if (!ext.seen || num > ext.max_num) {
            ext.max_num = num;
            ext.argmax_x = x;
            ext.argmax_t = t;
          }
          if (!ext.seen || num < ext.min_num) ext.min_num = num;
          ext.seen = true;
        }
      });

  std::sort(values.begin(), values.end());

  DeviationTally tally;
  tally.p = p;
  tally.total = sample.count;
  tally.sample = sample;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    tally.atoms.emplace_back(values[i], static_cast<std::uint64_t>(j - i));
    i = j;
  }
  finish_extrema(tally, extrema);
  return tally;
}

Extrema exhaustive_extrema(const DyadicParams& params) {
  const DeviationTally tally = exhaustive_tally(params);
  return Extrema{tally.min_num, tally.max_num, tally.argmax_x, tally.argmax_t};
}

namespace {

Rational variance_formula_of(const DyadicParams& params) {
  return Rational(params.p, 48) *
         (Rational(1) - Rational(1, params.denom));
}

void check_moment_identity(const DyadicParams& params, const BigInt& sum_num,
                           const BigInt& sum_num_sq) {
  const BigInt rhs = BigInt(params.p) * (BigInt(1) << (2 * params.p)) *
                     BigInt(params.denom) * BigInt(params.denom - 1);
  if (sum_num != 0 || 48 * sum_num_sq != rhs) {
    throw consistency_error("moment identity failed at p=" +
                            std::to_string(params.p));
  }
}

MomentReport assemble_moments(const DyadicParams& params,
                              MomentReport::Path path, const BigInt& sum_num,
                              const BigInt& sum_num_sq) {
  check_moment_identity(params, sum_num, sum_num_sq);
  MomentReport rep;
  rep.p = params.p;
  rep.path = path;
  rep.sum_num = sum_num;
  rep.sum_num_sq = sum_num_sq;
  const BigInt pairs = BigInt(1) << (2 * params.p);
  rep.mean = Rational(sum_num, pairs * params.denom);
  rep.variance =
      Rational(sum_num_sq, pairs * params.denom * params.denom);
  rep.variance_formula = variance_formula_of(params);
  if (rep.variance != rep.variance_formula) {
    throw consistency_error("variance does not match the closed form at p=" +
                            std::to_string(params.p));
  }
  return rep;
}

}  // namespace

MomentReport moments_pairs(const DyadicParams& params) {
  if (params.p > 12) {
    throw resource_error("pairwise moment scan limited to p <= 12");
  }
  const DeviationTally tally = exhaustive_tally(params);
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;  // <= p * 2^(2p) * d^2 / 48 ~ 3.4e15 at p = 12
  for (const auto& [v, c] : tally.atoms) {
    sum += v * static_cast<std::int64_t>(c);
    sum_sq += v * v * static_cast<std::int64_t>(c);
  }
  return assemble_moments(params, MomentReport::Path::doubly_exhaustive,
                          BigInt(sum), BigInt(sum_sq));
}

MomentReport moments_xonly(const DyadicParams& params) {
  const int p = params.p;
  const std::int64_t n = params.n;

  // Per x: s1 = sum_i e_i (vanishes identically) and s2 = sum_i e_i^2.
  // sum over (x, t) of num   = 2^(p-1) * sum_x s1
  // sum over (x, t) of num^2 = 2^(p-2) * sum_x (s2 + s1^2)
  using Wide = unsigned __int128;
  __int128 total_s1 = 0;
  Wide total_sq = 0;
  std::vector<__int128> block_s1(kScanBlocks, 0);
  std::vector<Wide> block_sq(kScanBlocks, 0);

  parallel_blocks(n, kScanBlocks, [&](int block, std::int64_t lo,
                                      std::int64_t hi) {
    __int128 s1_acc = 0;
    Wide sq_acc = 0;
    for (std::int64_t x = lo; x < hi; ++x) {
      std::int64_t v = x;
      std::int64_t s1 = 0;
      Wide s2 = 0;
      for (int i = 0; i < p; ++i) {
        const std::int64_t e = detail::e0_num_unchecked(v, params);
        s1 += e;
        s2 += static_cast<Wide>(e * e);
        v = detail::rotl_unchecked(v, 1, params);
      }
      s1_acc += s1;
      sq_acc += s2 + static_cast<Wide>(s1 * s1);
    }
    block_s1[block] = s1_acc;
    block_sq[block] = sq_acc;
  });
  for (int b = 0; b < kScanBlocks; ++b) {
    total_s1 += block_s1[b];
    total_sq += block_sq[b];
  }

  BigInt sum_num = BigInt(static_cast<std::int64_t>(total_s1 >> 64)) *
                       (BigInt(1) << 64) +
                   BigInt(static_cast<std::uint64_t>(total_s1));
  sum_num <<= (p - 1);
  BigInt sum_sq = BigInt(static_cast<std::uint64_t>(total_sq >> 64)) *
                      (BigInt(1) << 64) +
                  BigInt(static_cast<std::uint64_t>(total_sq));
  if (p >= 2) {
    sum_sq <<= (p - 2);
  } else {
    sum_sq >>= (2 - p);  // p = 1: sum is 0, both e_i vanish
  }
  return assemble_moments(params, MomentReport::Path::x_only, sum_num, sum_sq);
}

MomentReport moments(const DyadicParams& params) {
  return params.p <= 12 ? moments_pairs(params) : moments_xonly(params);
}

TailReport tail_fraction(const DeviationTally& tally,
                         const Rational& threshold) {
  if (threshold < 0) throw argument_error("threshold must be >= 0");
  const DyadicParams params(tally.p);
  const BigInt a = boost::multiprecision::numerator(threshold);
  const BigInt b = boost::multiprecision::denominator(threshold);
  const BigInt lhs_scale = b;
  const BigInt rhs = a * params.denom;

  BigInt count = 0;
  for (const auto& [v, c] : tally.atoms) {
    const BigInt scaled = lhs_scale * (v < 0 ? -v : v);
    if (scaled >= rhs) count += c;
  }

  TailReport rep;
  rep.p = tally.p;
  rep.threshold = threshold;
  rep.count_ge = count;
  rep.fraction_ge = Rational(count, BigInt(tally.total));
  if (threshold > 0) {
    rep.markov_bound = Rational(params.p, 48) / (threshold * threshold);
  }
  rep.sample = tally.sample;
  return rep;
}

TailReport tail_fraction(const DyadicParams& params, const Rational& threshold,
                         std::optional<SampleSpec> sample) {
  if (threshold < 0) throw argument_error("threshold must be >= 0");
  if (!sample && params.p > 12) {
    throw resource_error(
        "exhaustive tail fraction limited to p <= 12; pass a sample spec");
  }
  const DeviationTally tally =
      sample ? sampled_tally(params, *sample) : exhaustive_tally(params);
  return tail_fraction(tally, threshold);
}

std::vector<HistogramBin> histogram(const DeviationTally& tally, int bins) {
  if (bins <= 0) throw argument_error("bins must be positive");
  const DyadicParams params(tally.p);
  const std::int64_t pd = static_cast<std::int64_t>(params.p) * params.denom;

  // Bin index for v < 0 by plain floor over [-pd/6, pd/6) in 6*num units;
  // positive values are mirrored so the assignment is symmetric by
  // construction.
  const auto negative_bin = [&](std::int64_t v) {
    std::int64_t k = (6 * v + pd) * bins / (2 * pd);
    return std::clamp<std::int64_t>(k, 0, bins - 1);
  };

  std::vector<BigInt> mass(static_cast<std::size_t>(bins), BigInt(0));
  for (const auto& [v, c] : tally.atoms) {
    std::int64_t k;
    if (v < 0) {
      k = negative_bin(v);
    } else if (v > 0) {
      k = bins - 1 - negative_bin(-v);
    } else {
      k = bins / 2;
    }
    mass[static_cast<std::size_t>(k)] += c;
  }

  std::vector<HistogramBin> out;
  out.reserve(static_cast<std::size_t>(bins));
  const double half_width = params.p / 6.0;
  for (int k = 0; k < bins; ++k) {
    HistogramBin bin;
    bin.center = -half_width + (k + 0.5) * (2 * half_width) / bins;
    bin.mass = Rational(mass[static_cast<std::size_t>(k)], BigInt(tally.total));
    out.push_back(std::move(bin));
  }
  return out;
}

std::vector<HistogramBin> histogram(const DyadicParams& params, int bins,
                                    std::optional<SampleSpec> sample) {
  if (bins <= 0) throw argument_error("bins must be positive");
  if (!sample && params.p > 12) {
    throw resource_error(
        "exhaustive histogram limited to p <= 12; pass a sample spec");
  }
  const DeviationTally tally =
      sample ? sampled_tally(params, *sample) : exhaustive_tally(params);
  return histogram(tally, bins);
}

NormalityReport ks_distance(const DeviationTally& tally) {
  const DyadicParams params(tally.p);
  const double factor = std::sqrt(48.0 / params.p) / params.denom;
  const double total = static_cast<double>(tally.total);

  double ks = 0.0;
  std::uint64_t cum = 0;
  for (const auto& [v, c] : tally.atoms) {
    const double phi = normal_cdf(factor * static_cast<double>(v));
    const double lo = static_cast<double>(cum) / total;
    cum += c;
    const double hi = static_cast<double>(cum) / total;
    ks = std::max({ks, std::abs(hi - phi), std::abs(phi - lo)});
  }

  NormalityReport rep;
  rep.p = tally.p;
  rep.sample = tally.sample;
  rep.ks_distance = ks;
  rep.normalization = std::sqrt(48.0 / params.p);
  return rep;
}

NormalityReport ks_distance(const DyadicParams& params,
                            std::optional<SampleSpec> sample) {
  if (!sample && params.p > 12) {
    throw resource_error(
        "exhaustive KS limited to p <= 12; pass a sample spec (>= 1e6 draws)");
  }
  if (sample && params.p > 12 && sample->count < 1'000'000) {
    throw argument_error("sampled KS beyond p = 12 needs >= 1e6 draws");
  }
  const DeviationTally tally =
      sample ? sampled_tally(params, *sample) : exhaustive_tally(params);
  return ks_distance(tally);
}

}  // namespace dyadic
