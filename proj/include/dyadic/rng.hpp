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

namespace dyadic {

// Counter-based generator (splitmix64 finalizer over seed + counter stream).
// Stateless, so sampled scans can be partitioned over counter ranges and
// still produce the identical draw sequence for a given (seed, count).

inline std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (counter + 1));
}

}  // namespace dyadic
