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

#include <array>
#include <cstdint>
#include <vector>

#include "dyadic/image.hpp"
#include "dyadic/params.hpp"

namespace dyadic {

/// Slope quadrant of a Hough accumulator. Q0 is the native orientation
/// (y as a function of x, slopes 0..pi/4); the others are Q0 applied to a
/// flipped image:
///   Q1 = Q0(transpose(img))             slopes pi/4..pi/2
///   Q2 = Q0(mirror_x(img))              slopes -pi/4..0
///   Q3 = Q0(transpose(mirror_x(img)))   slopes -pi/2..-pi/4
enum class Quadrant : int { q0 = 0, q1 = 1, q2 = 2, q3 = 3 };

Image flip_for_quadrant(const Image& img, Quadrant q);

/// Table of line sums over one slope quadrant: for each slope index
/// t in [0, n-1] and shift h in [-(n-1), n-1],
///   sums(t, h) = sum over x of pixel(x, D(x, t) + h),
/// rows outside the image contributing zero. The shift range covers the
/// zero-padded working height 2n, so each pencil {D(.,t)+h}_h partitions the
/// image and every t-row of the table sums to the total pixel mass.
struct HoughAccumulator {
  Quadrant quadrant = Quadrant::q0;
  std::int64_t n = 0;
  std::vector<std::uint64_t> sums;  // sums[t * (2n - 1) + (h + n - 1)]

  std::int64_t shift_count() const { return 2 * n - 1; }

  std::uint64_t at(std::int64_t t, std::int64_t h) const {
    return sums[static_cast<std::size_t>(t) * shift_count() + (h + n - 1)];
  }
  std::uint64_t& at(std::int64_t t, std::int64_t h) {
    return sums[static_cast<std::size_t>(t) * shift_count() + (h + n - 1)];
  }

  bool operator==(const HoughAccumulator& other) const {
    return quadrant == other.quadrant && n == other.n && sums == other.sums;
  }
};

struct FhtMetrics {
  std::uint64_t additions = 0;
};

/// Fast Hough transform of the Q0 quadrant in O(n^2 log n) additions.
///
/// Strips of width m are merged pairwise bottom-up (m = 1, 2, ..., n). A
/// width-2m line of slope t splits into two width-m lines of slope
/// floor(t/2), the right half raised by ceil(t/2):
///
///   S_2m(t, h) = S_m_left(floor(t/2), h) + S_m_right(floor(t/2), h + ceil(t/2))
///
/// The rule reproduces the analytic dyadic lines exactly; the test suite
/// holds it to integer equality against brute_line_sum on every cell.
HoughAccumulator fht_quadrant(const Image& img, FhtMetrics* metrics = nullptr);

/// All four slope quadrants, via the flips documented on Quadrant.
std::array<HoughAccumulator, 4> fht_full(const Image& img);

/// Direct evaluation of one line sum from the analytic line model; the
/// oracle that fht_quadrant is checked against.
std::uint64_t brute_line_sum(const Image& img, std::int64_t t, std::int64_t h);

}  // namespace dyadic
