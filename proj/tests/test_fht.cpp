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

#include <doctest.h>

#include "dyadic/fht.hpp"
#include "dyadic/lines.hpp"
#include "dyadic/rng.hpp"
#include "dyadic/verify.hpp"

using namespace dyadic;

namespace {

Image random_image(std::int64_t n, std::uint64_t seed, std::uint32_t maxval) {
  Image img(n);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    img.pixels[i] =
        static_cast<std::uint32_t>(counter_rng(seed, i) % (maxval + 1));
  }
  return img;
}

// Same strip merge but with the halves' roles inverted; must be caught by
// the oracle check (negative control).
HoughAccumulator corrupted_fht(const Image& img) {
  const std::int64_t n = img.n;
  const std::int64_t H = 2 * n - 1;
  const std::int64_t base = n - 1;
  std::vector<std::uint64_t> cur(static_cast<std::size_t>(n) * H, 0);
  std::vector<std::uint64_t> next(cur.size(), 0);
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) {
      cur[static_cast<std::size_t>(x) * H + base + y] = img.at(x, y);
    }
  }
  for (std::int64_t m = 1; m < n; m *= 2) {
    std::fill(next.begin(), next.end(), 0);
    const std::int64_t width = 2 * m;
    for (std::int64_t job = 0; job < n; ++job) {
      const std::int64_t s = job / width;
      const std::int64_t t = job % width;
      const std::int64_t t_half = t >> 1;
      const std::int64_t lift = t >> 1;  // wrong: floor instead of ceil
      const auto* left =
          cur.data() + static_cast<std::size_t>(2 * s * m + t_half) * H + base;
      const auto* right =
          cur.data() +
          static_cast<std::size_t>((2 * s + 1) * m + t_half) * H + base;
      auto* out = next.data() + static_cast<std::size_t>(job) * H + base;
      for (std::int64_t h = -t; h <= n - 1 - lift; ++h) {
        out[h] = left[h] + right[h + lift];
      }
    }
    std::swap(cur, next);
  }
  HoughAccumulator acc;
  acc.quadrant = Quadrant::q0;
  acc.n = n;
  acc.sums = std::move(cur);
  return acc;
}

}  // namespace

TEST_CASE("image type enforces power-of-two sides") {
  CHECK_THROWS_AS(Image(6), dimension_error);
  CHECK_THROWS_AS(Image(0), dimension_error);
  CHECK_NOTHROW(Image(1));
  CHECK_NOTHROW(Image(64));
}

TEST_CASE("single-pixel images put their mass on exactly the incident lines") {
  const std::int64_t n = 8;
  const DyadicParams params(3);
  const std::int64_t x0 = 5, y0 = 2;
  Image img(n);
  img.at(x0, y0) = 1;
  const auto acc = fht_quadrant(img);
  for (std::int64_t t = 0; t < n; ++t) {
    const std::int64_t hit = y0 - dyadic_line(x0, t, params);
    for (std::int64_t h = -(n - 1); h <= n - 1; ++h) {
      CHECK(acc.at(t, h) == (h == hit ? 1u : 0u));
    }
  }
}

TEST_CASE("constant image under horizontal lines") {
  const std::int64_t n = 8;
  Image img(n);
  for (auto& v : img.pixels) v = 1;
  const auto acc = fht_quadrant(img);
  for (std::int64_t h = -(n - 1); h <= n - 1; ++h) {
    CHECK(acc.at(0, h) == (h >= 0 ? static_cast<std::uint64_t>(n) : 0u));
  }
}

TEST_CASE("the n=8 slope-6 line sums its own pixel set to 8") {
  const std::int64_t n = 8;
  const DyadicParams params(3);
  Image img(n);
  for (std::int64_t x = 0; x < n; ++x) img.at(x, dyadic_line(x, 6, params)) = 1;
  const auto acc = fht_quadrant(img);
  CHECK(acc.at(6, 0) == 8);
}

TEST_CASE("brute_line_sum matches its definition") {
  const std::int64_t n = 8;
  Image ones(n);
  for (auto& v : ones.pixels) v = 1;
  for (std::int64_t t = 0; t < n; ++t) {
    CHECK(brute_line_sum(ones, t, 0) == 8);  // D(x,t) <= t stays in range
  }
  Image delta(n);
  delta.at(7, 7) = 1;
  CHECK(brute_line_sum(delta, 7, 0) == 1);  // (7,7) lies on the diagonal
  Image zero(n);
  for (std::int64_t t = 0; t < n; ++t) {
    for (std::int64_t h = -(n - 1); h <= n - 1; ++h) {
      CHECK(brute_line_sum(zero, t, h) == 0);
    }
  }
  CHECK_THROWS_AS(brute_line_sum(zero, 8, 0), argument_error);
  CHECK_THROWS_AS(brute_line_sum(zero, 0, 8), argument_error);
  CHECK_THROWS_AS(brute_line_sum(zero, 0, -8), argument_error);
}

TEST_CASE("fht equals the analytic oracle cell by cell") {
  for (const std::int64_t n : {8, 16, 32}) {
    const Image img = random_image(n, 42 + n, 255);
    const auto acc = fht_quadrant(img);
    for (std::int64_t t = 0; t < n; ++t) {
      for (std::int64_t h = -(n - 1); h <= n - 1; ++h) {
        CHECK(acc.at(t, h) == brute_line_sum(img, t, h));
      }
    }
  }
}

TEST_CASE("full transform: flips, symmetry and spot checks") {
  const std::int64_t n = 8;
  // symmetric image: Q0 and Q1 coincide
  Image sym(n);
  for (std::int64_t y = 0; y < n; ++y) {
    for (std::int64_t x = 0; x < n; ++x) {
      sym.at(x, y) = static_cast<std::uint32_t>((x + 1) * (y + 1) % 17);
    }
  }
  Image symT = sym.transposed();
  for (std::int64_t i = 0; i < n * n; ++i) {
    REQUIRE(sym.pixels[static_cast<std::size_t>(i)] ==
            symT.pixels[static_cast<std::size_t>(i)]);
  }
  const auto accs = fht_full(sym);
  CHECK(accs[0].sums == accs[1].sums);

  // delta at the origin: each pencil of each quadrant contains exactly one
  // line through it; under the origin-fixing flips (Q0, Q1) that line is h=0
  Image delta(n);
  delta.at(0, 0) = 1;
  const auto deltas = fht_full(delta);
  for (const auto& acc : deltas) {
    for (std::int64_t t = 0; t < n; ++t) {
      std::uint64_t mass = 0;
      for (std::int64_t h = -(n - 1); h <= n - 1; ++h) mass += acc.at(t, h);
      CHECK(mass == 1);
    }
  }
  for (std::int64_t t = 0; t < n; ++t) {
    CHECK(deltas[0].at(t, 0) == 1);
    CHECK(deltas[1].at(t, 0) == 1);
  }

  // checkerboard: random cells against the oracle under the matching flip
  Image board(n);
  for (std::int64_t y = 0; y < n; ++y)
    for (std::int64_t x = 0; x < n; ++x) board.at(x, y) = (x + y) & 1;
  const auto full = fht_full(board);
  for (int rep = 0; rep < 5; ++rep) {
    const std::uint64_t r = counter_rng(777, rep);
    const int q = static_cast<int>(r % 4);
    const std::int64_t t = static_cast<std::int64_t>((r >> 8) % n);
    const std::int64_t h =
        static_cast<std::int64_t>((r >> 16) % (2 * n - 1)) - (n - 1);
    const Image flipped = flip_for_quadrant(board, static_cast<Quadrant>(q));
    CHECK(full[static_cast<std::size_t>(q)].at(t, h) ==
          brute_line_sum(flipped, t, h));
  }
}

TEST_CASE("pencils conserve the image mass") {
  const Image img = random_image(16, 99, 65535);
  const std::uint64_t total = img.total();
  const auto acc = fht_quadrant(img);
  for (std::int64_t t = 0; t < img.n; ++t) {
    std::uint64_t mass = 0;
    for (std::int64_t h = -(img.n - 1); h <= img.n - 1; ++h)
      mass += acc.at(t, h);
    CHECK(mass == total);
  }
}

TEST_CASE("addition count at n=8 equals the stage-by-stage total") {
  // stage m->2m costs n^2 + n(m-1)/2: 64 + 68 + 76
  FhtMetrics metrics;
  fht_quadrant(Image(8), &metrics);
  CHECK(metrics.additions == 208);
}

TEST_CASE("a corrupted merge rule is caught by the oracle check") {
  const auto bad = check_fht_oracle(VerifyLevel::quick, corrupted_fht);
  CHECK_FALSE(bad.pass);
  const auto good = check_fht_oracle(VerifyLevel::quick);
  CHECK(good.pass);
}
