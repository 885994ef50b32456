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

#include <stdexcept>
#include <string>

namespace dyadic {

/// Bad argument value (out-of-range index, invalid flag combination).
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds a documented enumeration limit; the message names the
/// sampled alternative where one exists.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree exactly did not; indicates a broken
/// invariant rather than bad input.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or unsupported input file.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Image dimensions violate the power-of-two contract.
class dimension_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dyadic
