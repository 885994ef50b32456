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
#include <vector>

#include "dyadic/errors.hpp"

namespace dyadic {

/// Square gray-level image of side n = 2^p. Row-major storage; x is the
/// column index, y the row index, following the line model y = D(x, t) + h.
struct Image {
  std::int64_t n = 0;
  std::vector<std::uint32_t> pixels;  // pixels[y * n + x]

  Image() = default;
  explicit Image(std::int64_t side) : n(side) {
    if (n < 1 || (n & (n - 1)) != 0) {
      throw dimension_error("image side must be a power of two, got " +
                            std::to_string(n));
    }
    pixels.assign(static_cast<std::size_t>(n) * n, 0);
  }

  std::uint32_t at(std::int64_t x, std::int64_t y) const {
    return pixels[static_cast<std::size_t>(y) * n + x];
  }
  std::uint32_t& at(std::int64_t x, std::int64_t y) {
    return pixels[static_cast<std::size_t>(y) * n + x];
  }

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto v : pixels) s += v;
    return s;
  }

  Image transposed() const {
    Image out(n);
    for (std::int64_t y = 0; y < n; ++y)
      for (std::int64_t x = 0; x < n; ++x) out.at(x, y) = at(y, x);
    return out;
  }

  /// Reflection x -> n - 1 - x (columns reversed).
  Image mirrored_x() const {
    Image out(n);
    for (std::int64_t y = 0; y < n; ++y)
      for (std::int64_t x = 0; x < n; ++x) out.at(x, y) = at(n - 1 - x, y);
    return out;
  }
};

}  // namespace dyadic
