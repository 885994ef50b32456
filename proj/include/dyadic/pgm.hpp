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

#include <string>

#include "dyadic/image.hpp"

namespace dyadic {

/// Loads a P2 (ASCII) or P5 (binary) PGM with maxval <= 65535. P5 samples
/// above 255 are two bytes, big endian. Without `pad` the image must already
/// be square with a power-of-two side; with it, the raster is zero-padded
/// right and bottom up to the next power of two of the larger dimension.
Image read_pgm(const std::string& path, bool pad = false);

/// P2 writer (tests and fixtures).
void write_pgm(const Image& img, const std::string& path);

}  // namespace dyadic
