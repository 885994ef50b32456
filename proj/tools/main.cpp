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

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dyadic/csv.hpp"
#include "dyadic/ergodic.hpp"
#include "dyadic/fht.hpp"
#include "dyadic/lines.hpp"
#include "dyadic/pgm.hpp"
#include "dyadic/rng.hpp"
#include "dyadic/spectral.hpp"
#include "dyadic/stats.hpp"
#include "dyadic/verify.hpp"

namespace {

using namespace dyadic;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open " + path + " for writing");
  return out;
}

int log2_side(std::int64_t n) {
  int p = 0;
  while ((std::int64_t{1} << p) < n) ++p;
  return p;
}

int cmd_fht(const std::string& input, const std::string& quadrant, bool pad,
            const std::string& output) {
  const Image img = read_pgm(input, pad);
  std::ofstream out = open_output(output);
  if (quadrant == "all") {
    out << "quadrant,t,h,sum\n";
    for (const auto& acc : fht_full(img)) {
      std::ostringstream one;
      write_accumulator_csv(acc, one);
      out << one.str().substr(one.str().find('\n') + 1);  // drop header
    }
  } else {
    const auto q = static_cast<Quadrant>(std::stoi(quadrant));
    auto acc = fht_quadrant(flip_for_quadrant(img, q));
    acc.quadrant = q;
    write_accumulator_csv(acc, out);
  }
  std::cout << "n=" << img.n << " quadrants: 0 = y(x) slopes [0,pi/4], "
               "1 = transpose, 2 = mirror-x, 3 = mirror-x + transpose\n"
            << "wrote " << output << "\n";
  return 0;
}

int cmd_line(int p, std::int64_t t, std::optional<std::int64_t> x) {
  const DyadicParams params(p);
  std::cout << "x,y,e_num,e\n";
  const auto row = [&](std::int64_t xi) {
    const auto dev = deviation_num(xi, t, params);
    std::cout << xi << ',' << dyadic_line(xi, t, params) << ',' << dev.num
              << ',' << format_double(static_cast<double>(dev.num) / params.denom)
              << "\n";
  };
  if (x) {
    row(*x);
  } else {
    for (std::int64_t xi = 0; xi < params.n; ++xi) row(xi);
  }
  return 0;
}

std::optional<SampleSpec> make_sample(std::optional<std::uint64_t> samples,
                                      std::uint64_t seed) {
  if (!samples) return std::nullopt;
  return SampleSpec{*samples, seed};
}

int cmd_dev_stats(int p, std::optional<std::uint64_t> samples,
                  std::uint64_t seed) {
  const DyadicParams params(p);
  const MomentReport rep = moments(params);
  const auto sample = make_sample(samples, seed);
  if (p > 14 && !sample) {
    throw resource_error("p > 14 needs --samples for extrema/tail");
  }
  if (sample) {
    const DeviationTally tally = sampled_tally(params, *sample);
    write_stats_csv(rep,
                    Extrema{tally.min_num, tally.max_num, tally.argmax_x,
                            tally.argmax_t},
                    tail_fraction(tally, Rational(1)), std::cout);
  } else {
    const DeviationTally tally = exhaustive_tally(params);
    write_stats_csv(rep,
                    Extrema{tally.min_num, tally.max_num, tally.argmax_x,
                            tally.argmax_t},
                    tail_fraction(tally, Rational(1)), std::cout);
  }
  return 0;
}

int cmd_dev_hist(int p, int bins, std::optional<std::uint64_t> samples,
                 std::uint64_t seed, const std::string& output) {
  const DyadicParams params(p);
  const auto hist = histogram(params, bins, make_sample(samples, seed));
  std::ofstream out = open_output(output);
  write_histogram_csv(p, hist, out);
  std::cout << "wrote " << output << "\n";
  return 0;
}

int cmd_dev_ks(const std::vector<int>& ps, std::uint64_t samples,
               std::uint64_t seed) {
  std::vector<NormalityReport> reports;
  for (const int p : ps) {
    const DyadicParams params(p);
    if (p <= 12) {
      reports.push_back(ks_distance(params));
    } else {
      reports.push_back(ks_distance(params, SampleSpec{samples, seed}));
    }
  }
  write_ks_csv(reports, std::cout);
  return 0;
}

int cmd_spectral(int p, const std::string& output) {
  const SpectralReport rep = spectral_report(DyadicParams(p));
  std::ofstream out = open_output(output);
  write_spectral_csv(rep, out);
  std::cout << "wrote " << output << "\n";
  return 0;
}

int cmd_clt(const std::vector<int>& ps, double xi_max, int xi_steps,
            std::optional<std::size_t> grid_m, const std::string& output) {
  const auto grid = default_xi_grid(xi_max, xi_steps);
  const auto reports = clt_report(ps, grid, grid_m);
  std::ofstream out = open_output(output);
  write_clt_csv(reports, out);
  for (const auto& rep : reports) {
    std::cout << "p=" << rep.p << " sup|psi - exp(-xi^2/96)| = "
              << format_double(rep.sup_err_exact_vs_gauss);
    if (grid_m) {
      std::cout << "  sup|nagaev - psi| = "
                << format_double(rep.sup_err_nagaev_vs_exact);
    }
    std::cout << "\n";
  }
  std::cout << "wrote " << output << "\n";
  return 0;
}

int cmd_verify(const std::string& level_name, bool json) {
  const VerifyLevel level =
      level_name == "full" ? VerifyLevel::full : VerifyLevel::quick;
  // With --json the table goes to stderr so stdout carries only the summary.
  const auto checks = run_verify(level, nullptr);
  if (json) {
    print_check_table(checks, std::cerr);
    std::cout << checks_to_json(checks, level);
  } else {
    print_check_table(checks, std::cout);
  }
  for (const auto& c : checks) {
    if (!c.pass) return 1;
  }
  return 0;
}

int cmd_bench(std::int64_t n) {
  if (n < 2 || n > 4096 || (n & (n - 1)) != 0) {
    throw argument_error("bench needs a power-of-two n in [2, 4096]");
  }
  std::cout << "n,wall_ms,additions,budget_3n2nlogn\n";
  std::uint64_t prev = 0;
  for (const std::int64_t side : {n / 2, n}) {
    Image img(side);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
      img.pixels[i] = static_cast<std::uint32_t>(counter_rng(7, i) & 0xFFFFu);
    }
    FhtMetrics metrics;
    const auto start = std::chrono::steady_clock::now();
    const auto acc = fht_quadrant(img, &metrics);
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    const double budget = 3.0 * static_cast<double>(side) *
                          static_cast<double>(2 * side) * log2_side(side);
    std::cout << side << ',' << format_double(ms) << ',' << metrics.additions
              << ',' << format_double(budget) << "\n";
    if (prev != 0) {
      std::cout << "ratio," << format_double(static_cast<double>(
                                   metrics.additions) /
                                   static_cast<double>(prev))
                << ",ideal_range,[3.5 4.6]\n";
    }
    prev = metrics.additions;
    (void)acc;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast Hough transform over dyadic lines, with the deviation "
               "statistics toolkit"};
  app.require_subcommand(1);

  // fht
  std::string input, output, quadrant = "all";
  bool pad = false;
  auto* fht_cmd = app.add_subcommand("fht", "transform a PGM image");
  fht_cmd->add_option("--input", input, "PGM file (P2 or P5)")->required();
  fht_cmd->add_option("--quadrant", quadrant, "all|0|1|2|3")
      ->check(CLI::IsMember({"all", "0", "1", "2", "3"}));
  fht_cmd->add_flag("--pad", pad, "zero-pad to the next power-of-two square");
  fht_cmd->add_option("--output", output, "CSV destination")->required();

  // line
  int p = 3;
  std::int64_t t = 0;
  std::optional<std::int64_t> x;
  auto* line_cmd = app.add_subcommand("line", "print one dyadic line");
  line_cmd->add_option("--p", p, "image exponent")->required();
  line_cmd->add_option("--t", t, "slope index")->required();
  line_cmd->add_option("--x", x, "single column (default: whole line)");

  // dev
  auto* dev = app.add_subcommand("dev", "deviation statistics");
  dev->require_subcommand(1);
  int dev_p = 8;
  std::optional<std::uint64_t> dev_samples;
  std::uint64_t dev_seed = 1;
  auto* dev_stats = dev->add_subcommand("stats", "moments, extrema, tail");
  dev_stats->add_option("--p", dev_p)->required();
  dev_stats->add_option("--samples", dev_samples, "sampled mode draw count");
  dev_stats->add_option("--seed", dev_seed, "sampled mode seed");

  int bins = 33;
  std::string hist_output;
  auto* dev_hist = dev->add_subcommand("hist", "deviation histogram");
  dev_hist->add_option("--p", dev_p)->required();
  dev_hist->add_option("--bins", bins)->required();
  dev_hist->add_option("--samples", dev_samples);
  dev_hist->add_option("--seed", dev_seed);
  dev_hist->add_option("--output", hist_output)->required();

  std::vector<int> ks_ps;
  std::uint64_t ks_samples = 10'000'000;
  auto* dev_ks = dev->add_subcommand("ks", "KS distance to normal");
  dev_ks->add_option("--p", ks_ps, "exponents (comma separated)")
      ->required()
      ->delimiter(',');
  dev_ks->add_option("--samples", ks_samples, "draws when p > 12");
  dev_ks->add_option("--seed", dev_seed);

  // spectral
  int sp_p = 8;
  std::string sp_output;
  auto* sp_cmd = app.add_subcommand("spectral", "circulant spectrum report");
  sp_cmd->add_option("--p", sp_p)->required();
  sp_cmd->add_option("--output", sp_output)->required();

  // clt
  std::vector<int> clt_ps;
  double xi_max = 4.0;
  int xi_steps = 16;
  std::optional<std::size_t> grid_m;
  std::string clt_output;
  auto* clt_cmd = app.add_subcommand("clt", "characteristic function report");
  clt_cmd->add_option("--p", clt_ps)->required()->delimiter(',');
  clt_cmd->add_option("--xi-max", xi_max);
  clt_cmd->add_option("--xi-steps", xi_steps);
  clt_cmd->add_option("--grid", grid_m, "transfer-operator grid size");
  clt_cmd->add_option("--output", clt_output)->required();

  // verify
  std::string level = "quick";
  bool json = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the whole check battery");
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_flag("--json", json, "machine-readable summary on stdout");

  // bench
  std::int64_t bench_n = 1024;
  auto* bench_cmd = app.add_subcommand("bench", "addition counts and timing");
  bench_cmd->add_option("--n", bench_n)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fht_cmd->parsed()) return cmd_fht(input, quadrant, pad, output);
    if (line_cmd->parsed()) return cmd_line(p, t, x);
    if (dev_stats->parsed()) return cmd_dev_stats(dev_p, dev_samples, dev_seed);
    if (dev_hist->parsed())
      return cmd_dev_hist(dev_p, bins, dev_samples, dev_seed, hist_output);
    if (dev_ks->parsed()) return cmd_dev_ks(ks_ps, ks_samples, dev_seed);
    if (sp_cmd->parsed()) return cmd_spectral(sp_p, sp_output);
    if (clt_cmd->parsed())
      return cmd_clt(clt_ps, xi_max, xi_steps, grid_m, clt_output);
    if (verify_cmd->parsed()) return cmd_verify(level, json);
    if (bench_cmd->parsed()) return cmd_bench(bench_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
