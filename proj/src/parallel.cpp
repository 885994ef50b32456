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

#include "dyadic/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace dyadic {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("DYADIC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(v < hw ? v : hw);
  }
  return hw;
}

void parallel_blocks(
    std::int64_t count, int blocks,
    const std::function<void(int, std::int64_t, std::int64_t)>& fn) {
  if (count <= 0) return;
  if (blocks < 1) blocks = 1;
  if (static_cast<std::int64_t>(blocks) > count)
    blocks = static_cast<int>(count);

  auto run_block = [&](int b) {
    const std::int64_t begin = count * b / blocks;
    const std::int64_t end = count * (b + 1) / blocks;
    fn(b, begin, end);
  };

  const int workers = std::min(worker_count(), blocks);
  if (workers == 1) {
    for (int b = 0; b < blocks; ++b) run_block(b);
    return;
  }

  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
        run_block(b);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace dyadic
