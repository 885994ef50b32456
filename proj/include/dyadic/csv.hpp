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

#include <iosfwd>
#include <string>
#include <vector>

#include "dyadic/ergodic.hpp"
#include "dyadic/fht.hpp"
#include "dyadic/spectral.hpp"
#include "dyadic/stats.hpp"

// CSV emission for every report type. Output is byte-deterministic: fixed
// column orders, fixed float formatting, rationals as "num/den".

namespace dyadic {

/// Shortest-roundtrip float formatting (printf %.17g trimmed via %.12g).
std::string format_double(double v);

/// Header `quadrant,t,h,sum`; rows ordered by t then h ascending.
void write_accumulator_csv(const HoughAccumulator& acc, std::ostream& out);
void write_accumulator_csv(const HoughAccumulator& acc,
                           const std::string& path);

/// Inverse of write_accumulator_csv (round-trip checks, external tools).
HoughAccumulator read_accumulator_csv(std::istream& in);
HoughAccumulator read_accumulator_csv(const std::string& path);

/// One row per statistic: `p,statistic,exact,value`.
void write_stats_csv(const MomentReport& moments, const Extrema& extrema,
                     const TailReport& tail, std::ostream& out);

void write_histogram_csv(int p, const std::vector<HistogramBin>& bins,
                         std::ostream& out);

void write_ks_csv(const std::vector<NormalityReport>& reports,
                  std::ostream& out);

void write_spectral_csv(const SpectralReport& report, std::ostream& out);

/// Columns p,xi,re_psi,im_psi,gauss_exp_minus_xi2_over_96,abs_err,
/// nagaev_re,nagaev_im,nagaev_err (nagaev columns empty without a grid).
/// The column name records the adopted Gaussian reference normalization.
void write_clt_csv(const std::vector<CharFnReport>& reports,
                   std::ostream& out);

}  // namespace dyadic
