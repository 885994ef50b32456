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

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dyadic/fht.hpp"

// The numerical shadow of every proposition: each check either reproduces an
// exact identity or holds a stated tolerance. `quick` caps the scans at
// p <= 8 (a few seconds); `full` runs the documented per-check limits.

namespace dyadic {

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// FHT vs analytic oracle on every accumulator cell, all four quadrants.
/// `transform` defaults to fht_quadrant; tests substitute a corrupted
/// transform as a negative control.
CheckResult check_fht_oracle(
    VerifyLevel level,
    const std::function<HoughAccumulator(const Image&)>& transform = {});

/// Runs the whole battery in a fixed order.
std::vector<CheckResult> run_verify(VerifyLevel level,
                                    std::ostream* progress = nullptr);

/// Human-readable PASS/FAIL table.
void print_check_table(const std::vector<CheckResult>& checks,
                       std::ostream& out);

/// Machine-readable summary; byte-identical for identical inputs regardless
/// of DYADIC_THREADS.
std::string checks_to_json(const std::vector<CheckResult>& checks,
                           VerifyLevel level);

}  // namespace dyadic
