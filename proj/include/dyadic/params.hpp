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

namespace dyadic {

/// Global discretization context: image exponent p, side n = 2^p and the
/// common denominator 2^p - 1 of every deviation numerator.
///
/// p is capped at 24 so that every intermediate integer (up to p * 2^(2p))
/// stays well inside signed 64-bit range.
struct DyadicParams {
  int p;
  std::int64_t n;
  std::int64_t denom;

  explicit DyadicParams(int exponent) : p(exponent) {
    if (p < 1 || p > kMaxP) {
      throw argument_error("p must be in [1, " + std::to_string(kMaxP) +
                           "], got " + std::to_string(p));
    }
    n = std::int64_t{1} << p;
    denom = n - 1;
  }

  static constexpr int kMaxP = 24;
};

}  // namespace dyadic
