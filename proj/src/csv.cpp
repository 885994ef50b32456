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

#include "dyadic/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dyadic {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_accumulator_csv(const HoughAccumulator& acc, std::ostream& out) {
  out << "quadrant,t,h,sum\n";
  const int q = static_cast<int>(acc.quadrant);
  for (std::int64_t t = 0; t < acc.n; ++t) {
    for (std::int64_t h = -(acc.n - 1); h <= acc.n - 1; ++h) {
      out << q << ',' << t << ',' << h << ',' << acc.at(t, h) << '\n';
    }
  }
}

void write_accumulator_csv(const HoughAccumulator& acc,
                           const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open " + path + " for writing");
  write_accumulator_csv(acc, out);
}

HoughAccumulator read_accumulator_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "quadrant,t,h,sum") {
    throw parse_error("accumulator CSV: bad header");
  }
  struct Row {
    int q;
    std::int64_t t, h;
    std::uint64_t sum;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Row r;
    char* end = nullptr;
    const char* s = line.c_str();
    r.q = static_cast<int>(std::strtol(s, &end, 10));
    if (*end != ',') throw parse_error("accumulator CSV: bad row");
    r.t = std::strtoll(end + 1, &end, 10);
    if (*end != ',') throw parse_error("accumulator CSV: bad row");
    r.h = std::strtoll(end + 1, &end, 10);
    if (*end != ',') throw parse_error("accumulator CSV: bad row");
    r.sum = std::strtoull(end + 1, &end, 10);
    rows.push_back(r);
  }
  // row count is n * (2n - 1)
  std::int64_t n = 1;
  while (n * (2 * n - 1) < static_cast<std::int64_t>(rows.size())) n *= 2;
  if (rows.empty() || n * (2 * n - 1) != static_cast<std::int64_t>(rows.size())) {
    throw parse_error("accumulator CSV: row count is not n(2n-1)");
  }

  HoughAccumulator acc;
  acc.quadrant = static_cast<Quadrant>(rows.front().q);
  acc.n = n;
  acc.sums.assign(static_cast<std::size_t>(n) * (2 * n - 1), 0);
  for (const Row& r : rows) {
    if (r.t < 0 || r.t >= n || r.h < -(n - 1) || r.h > n - 1) {
      throw parse_error("accumulator CSV: index out of range");
    }
    acc.at(r.t, r.h) = r.sum;
  }
  return acc;
}

HoughAccumulator read_accumulator_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  return read_accumulator_csv(in);
}

namespace {

void stat_row(std::ostream& out, int p, const char* name,
              const std::string& exact, const std::string& value) {
  out << p << ',' << name << ',' << exact << ',' << value << '\n';
}

void stat_row(std::ostream& out, int p, const char* name, const Rational& r) {
  stat_row(out, p, name, to_fraction_string(r), format_double(to_double(r)));
}

}  // namespace

void write_stats_csv(const MomentReport& moments, const Extrema& extrema,
                     const TailReport& tail, std::ostream& out) {
  const int p = moments.p;
  out << "p,statistic,exact,value\n";
  stat_row(out, p, "mean", moments.mean);
  stat_row(out, p, "variance", moments.variance);
  stat_row(out, p, "variance_formula", moments.variance_formula);
  stat_row(out, p, "sum_num", moments.sum_num.str(), moments.sum_num.str());
  stat_row(out, p, "sum_num_sq", moments.sum_num_sq.str(),
           moments.sum_num_sq.str());
  stat_row(out, p, "moment_path",
           moments.path == MomentReport::Path::doubly_exhaustive
               ? "doubly_exhaustive"
               : "x_only",
           "");
  stat_row(out, p, "min_num", std::to_string(extrema.min_num),
           std::to_string(extrema.min_num));
  stat_row(out, p, "max_num", std::to_string(extrema.max_num),
           std::to_string(extrema.max_num));
  stat_row(out, p, "argmax_x", std::to_string(extrema.argmax_x), "");
  stat_row(out, p, "argmax_t", std::to_string(extrema.argmax_t), "");
  const DyadicParams params(p);
  stat_row(out, p, "max_abs_e",
           Rational(std::max(std::abs(extrema.min_num),
                             std::abs(extrema.max_num)),
                    params.denom));
  stat_row(out, p, "bound_p_over_6", Rational(p, 6));
  stat_row(out, p, "tail_ge_1_fraction", tail.fraction_ge);
  if (tail.markov_bound) stat_row(out, p, "markov_bound", *tail.markov_bound);
  if (tail.sample) {
    stat_row(out, p, "samples", std::to_string(tail.sample->count), "");
    stat_row(out, p, "seed", std::to_string(tail.sample->seed), "");
  }
}

void write_histogram_csv(int p, const std::vector<HistogramBin>& bins,
                         std::ostream& out) {
  out << "p,bin,center,mass,mass_value\n";
  for (std::size_t k = 0; k < bins.size(); ++k) {
    out << p << ',' << k << ',' << format_double(bins[k].center) << ','
        << to_fraction_string(bins[k].mass) << ','
        << format_double(to_double(bins[k].mass)) << '\n';
  }
}

void write_ks_csv(const std::vector<NormalityReport>& reports,
                  std::ostream& out) {
  out << "p,mode,samples,seed,ks\n";
  char buf[32];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof(buf), "%.6f", r.ks_distance);
    out << r.p << ',' << (r.sample ? "sampled" : "exhaustive") << ','
        << (r.sample ? std::to_string(r.sample->count) : "") << ','
        << (r.sample ? std::to_string(r.sample->seed) : "") << ',' << buf
        << '\n';
  }
}

void write_spectral_csv(const SpectralReport& report, std::ostream& out) {
  out << "kind,k,re,im,min_sym_eig,hypercube_min_times4,bound_holds,sharp\n";
  for (std::size_t k = 0; k < report.eigenvalues.size(); ++k) {
    out << "eig," << k << ',' << format_double(report.eigenvalues[k].real())
        << ',' << format_double(report.eigenvalues[k].imag()) << ",,,,\n";
  }
  out << "summary,,,," << format_double(report.min_sym_eig) << ','
      << report.hypercube_min_times4 << ',' << (report.bound_holds ? 1 : 0)
      << ',' << (report.sharp ? 1 : 0) << '\n';
}

void write_clt_csv(const std::vector<CharFnReport>& reports,
                   std::ostream& out) {
  out << "p,xi,re_psi,im_psi,gauss_exp_minus_xi2_over_96,abs_err,"
         "nagaev_re,nagaev_im,nagaev_err\n";
  for (const auto& rep : reports) {
    for (const auto& row : rep.rows) {
      out << rep.p << ',' << format_double(row.xi) << ','
          << format_double(row.psi.real()) << ','
          << format_double(row.psi.imag()) << ',' << format_double(row.gauss)
          << ',' << format_double(row.abs_err) << ',';
      if (row.nagaev) {
        out << format_double(row.nagaev->real()) << ','
            << format_double(row.nagaev->imag()) << ','
            << format_double(*row.nagaev_err);
      } else {
        out << ",,";
      }
      out << '\n';
    }
  }
}

}  // namespace dyadic
