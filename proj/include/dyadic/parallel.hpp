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
#include <functional>

namespace dyadic {

/// Worker cap: min(DYADIC_THREADS, hardware threads), at least 1.
int worker_count();

/// Runs fn(block_index, begin, end) over a fixed partition of [0, count)
/// into `blocks` equal pieces. The partition depends only on (count, blocks),
/// never on the worker count, so per-block results can be combined in block
/// order to give bit-identical output for any DYADIC_THREADS setting.
void parallel_blocks(std::int64_t count, int blocks,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn);

}  // namespace dyadic
