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

#include "dyadic/pgm.hpp"

#include <fstream>
#include <limits>
#include <string>
#include <vector>

namespace dyadic {

namespace {

// Skips whitespace and '#' comment lines, then reads one unsigned decimal.
long read_header_int(std::istream& in, const char* what) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  if (c == EOF || !std::isdigit(c)) {
    throw parse_error(std::string("malformed PGM header: expected ") + what);
  }
  long value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > std::numeric_limits<int>::max()) {
      throw parse_error(std::string("PGM header value too large for ") + what);
    }
    c = in.get();
  }
  if (c != EOF) in.unget();
  return value;
}

std::int64_t next_power_of_two(std::int64_t v) {
  std::int64_t n = 1;
  while (n < v) n *= 2;
  return n;
}

}  // namespace

Image read_pgm(const std::string& path, bool pad) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);

  char magic[2] = {0, 0};
  in.read(magic, 2);
  const bool ascii = magic[0] == 'P' && magic[1] == '2';
  const bool binary = magic[0] == 'P' && magic[1] == '5';
  if (!ascii && !binary) {
    throw parse_error(path + ": not a P2/P5 PGM file");
  }

  const long width = read_header_int(in, "width");
  const long height = read_header_int(in, "height");
  const long maxval = read_header_int(in, "maxval");
  if (width < 1 || height < 1) throw parse_error(path + ": bad dimensions");
  if (maxval < 1 || maxval > 65535) {
    throw parse_error(path + ": maxval must be in [1, 65535]");
  }

  std::vector<std::uint32_t> raster(static_cast<std::size_t>(width) * height);
  if (ascii) {
    for (auto& v : raster) {
      const long s = read_header_int(in, "sample");
      if (s > maxval) throw parse_error(path + ": sample exceeds maxval");
      v = static_cast<std::uint32_t>(s);
    }
  } else {
    in.get();  // single whitespace after maxval
    const int bytes = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> buf(raster.size() * bytes);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
    if (static_cast<std::size_t>(in.gcount()) != buf.size()) {
      throw parse_error(path + ": truncated raster");
    }
    for (std::size_t i = 0; i < raster.size(); ++i) {
      raster[i] = bytes == 2 ? (static_cast<std::uint32_t>(buf[2 * i]) << 8) |
                                   buf[2 * i + 1]
                             : buf[i];
      if (raster[i] > static_cast<std::uint32_t>(maxval)) {
        throw parse_error(path + ": sample exceeds maxval");
      }
    }
  }

  std::int64_t side = width;
  if (width != height || (width & (width - 1)) != 0) {
    if (!pad) {
      throw dimension_error(
          path + ": image is " + std::to_string(width) + "x" +
          std::to_string(height) +
          "; need a square power-of-two side (e.g. " +
          std::to_string(next_power_of_two(std::max(width, height))) + "x" +
          std::to_string(next_power_of_two(std::max(width, height))) +
          "), or pass --pad");
    }
    side = next_power_of_two(std::max(width, height));
  }

  Image img(side);
  for (long y = 0; y < height; ++y) {
    for (long x = 0; x < width; ++x) {
      img.at(x, y) = raster[static_cast<std::size_t>(y) * width + x];
    }
  }
  return img;
}

void write_pgm(const Image& img, const std::string& path) {
  std::uint32_t maxval = 1;
  for (auto v : img.pixels) maxval = std::max(maxval, v);
  if (maxval > 65535) throw argument_error("pixel values exceed PGM maxval");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open " + path + " for writing");
  out << "P2\n" << img.n << " " << img.n << "\n" << maxval << "\n";
  for (std::int64_t y = 0; y < img.n; ++y) {
    for (std::int64_t x = 0; x < img.n; ++x) {
      out << img.at(x, y) << (x + 1 == img.n ? '\n' : ' ');
    }
  }
}

}  // namespace dyadic
