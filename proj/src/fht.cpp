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

#include "dyadic/fht.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <utility>

#include "dyadic/lines.hpp"
#include "dyadic/parallel.hpp"

namespace dyadic {

Image flip_for_quadrant(const Image& img, Quadrant q) {
  switch (q) {
    case Quadrant::q0:
      return img;
    case Quadrant::q1:
      return img.transposed();
    case Quadrant::q2:
      return img.mirrored_x();
    case Quadrant::q3:
      return img.mirrored_x().transposed();
  }
  throw argument_error("bad quadrant");
}

namespace {

int log2_of_side(std::int64_t n) {
  if (n < 1 || (n & (n - 1)) != 0) {
    throw dimension_error("image side must be a power of two, got " +
                          std::to_string(n));
  }
  int p = 0;
  while ((std::int64_t{1} << p) < n) ++p;
  return p;
}

}  // namespace

// Strip buffers hold, for every strip of width m and local slope t < m, the
// line sums over all shifts h in [-(n-1), n-1]. Layout is
// buf[(strip * m + t) * (2n - 1) + (h + n - 1)], which keeps the buffer at a
// fixed n * (2n - 1) cells across stages. Only the band h in [-t, n-1] can
// be nonzero; everything below it is zero-filled so merge reads need no
// bounds checks. Cells cannot overflow: a line sum is at most
// n * max_pixel <= 2^24 * (2^32 - 1) < 2^56.
HoughAccumulator fht_quadrant(const Image& img, FhtMetrics* metrics) {
  const std::int64_t n = img.n;
  log2_of_side(n);
  const std::int64_t H = 2 * n - 1;
  const std::int64_t base = n - 1;  // index of h = 0

  std::vector<std::uint64_t> cur(static_cast<std::size_t>(n) * H, 0);
  std::vector<std::uint64_t> next;

  // Width-1 strips: the only slope is t = 0 and the line through (x, h) is
  // the single pixel (x, h).
  for (std::int64_t x = 0; x < n; ++x) {
    std::uint64_t* row = cur.data() + static_cast<std::size_t>(x) * H + base;
    for (std::int64_t y = 0; y < n; ++y) row[y] = img.at(x, y);
  }

  std::uint64_t additions = 0;
  next.assign(cur.size(), 0);
  for (std::int64_t m = 1; m < n; m *= 2) {
    const std::int64_t out_width = 2 * m;
    const std::int64_t out_strips = n / out_width;
    std::vector<std::uint64_t> block_adds(64, 0);

    // One (strip, t) output row per work item; rows are independent.
    parallel_blocks(
        out_strips * out_width, 64,
        [&](int block, std::int64_t lo, std::int64_t hi) {
          std::uint64_t adds = 0;
          for (std::int64_t job = lo; job < hi; ++job) {
            const std::int64_t s = job / out_width;
            const std::int64_t t = job % out_width;
            const std::int64_t t_half = t >> 1;
            const std::int64_t lift = (t + 1) >> 1;  // ceil(t/2)

            const std::uint64_t* left =
                cur.data() +
                static_cast<std::size_t>(2 * s * m + t_half) * H + base;
            const std::uint64_t* right =
                cur.data() +
                static_cast<std::size_t>((2 * s + 1) * m + t_half) * H + base;
            std::uint64_t* out =
                next.data() + static_cast<std::size_t>(job) * H + base;

            std::fill(out - (n - 1), out - t, std::uint64_t{0});
            for (std::int64_t h = -t; h <= n - 1 - lift; ++h) {
              out[h] = left[h] + right[h + lift];
            }
            adds += n + t_half;  // band length of the loop above
            for (std::int64_t h = n - lift; h <= n - 1; ++h) {
              out[h] = left[h];  // right half has left the image: plain copy
            }
          }
          block_adds[block] += adds;
        });

    for (auto a : block_adds) additions += a;
    std::swap(cur, next);
  }

  HoughAccumulator acc;
  acc.quadrant = Quadrant::q0;
  acc.n = n;
  acc.sums = std::move(cur);  // final stage layout == accumulator layout
  if (metrics) metrics->additions = additions;
  return acc;
}

std::array<HoughAccumulator, 4> fht_full(const Image& img) {
  std::array<HoughAccumulator, 4> out{};
  for (int q = 0; q < 4; ++q) {
    out[q] = fht_quadrant(flip_for_quadrant(img, static_cast<Quadrant>(q)));
    out[q].quadrant = static_cast<Quadrant>(q);
  }
  return out;
}

std::uint64_t brute_line_sum(const Image& img, std::int64_t t,
                             std::int64_t h) {
  const std::int64_t n = img.n;
  if (t < 0 || t >= n) {
    throw argument_error("t out of range [0, n-1]: " + std::to_string(t));
  }
  if (h < -(n - 1) || h > n - 1) {
    throw argument_error("h out of range [-(n-1), n-1]: " + std::to_string(h));
  }
  if (n == 1) return img.at(0, 0);  // the only line is the single pixel

  const DyadicParams params(log2_of_side(n));
  std::uint64_t sum = 0;
  for (std::int64_t x = 0; x < n; ++x) {
    const std::int64_t y = detail::dyadic_line_unchecked(x, t, params) + h;
    if (y >= 0 && y < n) sum += img.at(x, y);
  }
  return sum;
}

}  // namespace dyadic
