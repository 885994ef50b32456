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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "dyadic/ergodic.hpp"
#include "dyadic/fht.hpp"
#include "dyadic/lines.hpp"
#include "dyadic/pgm.hpp"
#include "dyadic/spectral.hpp"
#include "dyadic/stats.hpp"
#include "dyadic/verify.hpp"

namespace py = pybind11;

namespace {

using namespace dyadic;

Image image_from_array(const py::array_t<std::uint32_t>& a) {
  const auto buf = a.unchecked<2>();
  if (buf.shape(0) != buf.shape(1)) {
    throw dimension_error("image must be square");
  }
  Image img(buf.shape(0));
  for (py::ssize_t y = 0; y < buf.shape(0); ++y)
    for (py::ssize_t x = 0; x < buf.shape(1); ++x) img.at(x, y) = buf(y, x);
  return img;
}

// rows: t in [0, n), columns: shift h - (n-1) in [0, 2n-1)
py::array_t<std::uint64_t> accumulator_to_array(const HoughAccumulator& acc) {
  py::array_t<std::uint64_t> out({acc.n, acc.shift_count()});
  auto view = out.mutable_unchecked<2>();
  for (std::int64_t t = 0; t < acc.n; ++t)
    for (std::int64_t h = 0; h < acc.shift_count(); ++h)
      view(t, h) = acc.at(t, h - (acc.n - 1));
  return out;
}

py::object to_py_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(boost::multiprecision::numerator(r).str())),
                  py::int_(py::str(boost::multiprecision::denominator(r).str())));
}

std::optional<SampleSpec> sample_of(std::optional<std::uint64_t> samples,
                                    std::uint64_t seed) {
  if (!samples) return std::nullopt;
  return SampleSpec{*samples, seed};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fast Hough transform over dyadic lines, with exact deviation "
            "statistics";

  py::register_exception<argument_error>(m, "ArgumentError",
                                         PyExc_ValueError);
  py::register_exception<resource_error>(m, "ResourceError",
                                         PyExc_RuntimeError);
  py::register_exception<dimension_error>(m, "DimensionError",
                                          PyExc_ValueError);

  // dyadic lines
  m.def(
      "basic_line",
      [](int p, std::int64_t x, int i) {
        return basic_line(x, i, DyadicParams(p));
      },
      py::arg("p"), py::arg("x"), py::arg("i"),
      "round(2^i x / (2^p - 1)) in pure integer arithmetic");
  m.def(
      "dyadic_line",
      [](int p, std::int64_t x, std::int64_t t) {
        return dyadic_line(x, t, DyadicParams(p));
      },
      py::arg("p"), py::arg("x"), py::arg("t"));
  m.def(
      "deviation_num",
      [](int p, std::int64_t x, std::int64_t t) {
        return deviation_num(x, t, DyadicParams(p)).num;
      },
      py::arg("p"), py::arg("x"), py::arg("t"),
      "numerator of E(x,t) over 2^p - 1");
  m.def(
      "deviation",
      [](int p, std::int64_t x, std::int64_t t) {
        const DyadicParams params(p);
        return to_py_fraction(
            Rational(deviation_num(x, t, params).num, params.denom));
      },
      py::arg("p"), py::arg("x"), py::arg("t"),
      "E(x,t) as an exact Fraction");
  m.def(
      "ei_num",
      [](int p, std::int64_t x, int i) {
        return ei_num(x, i, DyadicParams(p));
      },
      py::arg("p"), py::arg("x"), py::arg("i"));
  m.def(
      "rotl",
      [](int p, std::int64_t x, std::int64_t i) {
        return rotl(x, i, DyadicParams(p));
      },
      py::arg("p"), py::arg("x"), py::arg("i"));

  // transform
  m.def(
      "fht_quadrant",
      [](const py::array_t<std::uint32_t>& img) {
        return accumulator_to_array(fht_quadrant(image_from_array(img)));
      },
      py::arg("image"),
      "Q0 accumulator as an (n, 2n-1) array; column j holds shift "
      "h = j - (n-1)");
  m.def(
      "fht_full",
      [](const py::array_t<std::uint32_t>& img) {
        py::list out;
        for (const auto& acc : fht_full(image_from_array(img))) {
          out.append(accumulator_to_array(acc));
        }
        return out;
      },
      py::arg("image"), "accumulators for quadrants 0..3");
  m.def(
      "brute_line_sum",
      [](const py::array_t<std::uint32_t>& img, std::int64_t t,
         std::int64_t h) { return brute_line_sum(image_from_array(img), t, h); },
      py::arg("image"), py::arg("t"), py::arg("h"));
  m.def(
      "read_pgm",
      [](const std::string& path, bool pad) {
        const Image img = read_pgm(path, pad);
        py::array_t<std::uint32_t> out({img.n, img.n});
        auto view = out.mutable_unchecked<2>();
        for (std::int64_t y = 0; y < img.n; ++y)
          for (std::int64_t x = 0; x < img.n; ++x) view(y, x) = img.at(x, y);
        return out;
      },
      py::arg("path"), py::arg("pad") = false);

  // statistics
  m.def(
      "moments",
      [](int p) {
        const MomentReport rep = moments(DyadicParams(p));
        py::dict d;
        d["p"] = rep.p;
        d["path"] = rep.path == MomentReport::Path::doubly_exhaustive
                        ? "doubly_exhaustive"
                        : "x_only";
        d["sum_num"] = py::int_(py::str(rep.sum_num.str()));
        d["sum_num_sq"] = py::int_(py::str(rep.sum_num_sq.str()));
        d["mean"] = to_py_fraction(rep.mean);
        d["variance"] = to_py_fraction(rep.variance);
        d["variance_formula"] = to_py_fraction(rep.variance_formula);
        return d;
      },
      py::arg("p"));
  m.def(
      "exhaustive_extrema",
      [](int p) {
        const Extrema e = exhaustive_extrema(DyadicParams(p));
        return py::make_tuple(e.min_num, e.max_num,
                              py::make_tuple(e.argmax_x, e.argmax_t));
      },
      py::arg("p"));
  m.def(
      "tail_fraction",
      [](int p, const std::string& threshold,
         std::optional<std::uint64_t> samples, std::uint64_t seed) {
        const TailReport rep = tail_fraction(
            DyadicParams(p), Rational(threshold), sample_of(samples, seed));
        py::dict d;
        d["count_ge"] = py::int_(py::str(rep.count_ge.str()));
        d["fraction_ge"] = to_py_fraction(rep.fraction_ge);
        if (rep.markov_bound) d["markov_bound"] = to_py_fraction(*rep.markov_bound);
        return d;
      },
      py::arg("p"), py::arg("threshold") = "1",
      py::arg("samples") = std::nullopt, py::arg("seed") = 1);
  m.def(
      "histogram",
      [](int p, int bins, std::optional<std::uint64_t> samples,
         std::uint64_t seed) {
        py::list out;
        for (const auto& bin :
             histogram(DyadicParams(p), bins, sample_of(samples, seed))) {
          out.append(py::make_tuple(bin.center, to_py_fraction(bin.mass)));
        }
        return out;
      },
      py::arg("p"), py::arg("bins"), py::arg("samples") = std::nullopt,
      py::arg("seed") = 1);
  m.def(
      "ks_distance",
      [](int p, std::optional<std::uint64_t> samples, std::uint64_t seed) {
        return ks_distance(DyadicParams(p), sample_of(samples, seed))
            .ks_distance;
      },
      py::arg("p"), py::arg("samples") = std::nullopt, py::arg("seed") = 1,
      "KS distance of sqrt(48) E / sqrt(p) to the standard normal");

  // spectral
  m.def(
      "spectral_report",
      [](int p) {
        const SpectralReport rep = spectral_report(DyadicParams(p));
        py::dict d;
        d["eigenvalues"] = rep.eigenvalues;
        d["min_sym_eig"] = rep.min_sym_eig;
        d["hypercube_min_times4"] = rep.hypercube_min_times4;
        d["bound_holds"] = rep.bound_holds;
        d["sharp"] = rep.sharp;
        return d;
      },
      py::arg("p"));
  m.def(
      "q_of_x",
      [](int p, std::int64_t x) {
        return to_py_fraction(q_of_x(x, DyadicParams(p)));
      },
      py::arg("p"), py::arg("x"));

  // ergodic
  m.def("sawtooth_f", &sawtooth_f, py::arg("x"));
  m.def("doubling", &doubling, py::arg("x"));
  m.def(
      "psi_exact",
      [](int p, double xi) { return psi_exact(DyadicParams(p), xi); },
      py::arg("p"), py::arg("xi"),
      "exact characteristic function of E/sqrt(p) at xi");
  m.def(
      "psi_nagaev",
      [](int p, double xi, std::size_t m) {
        return psi_nagaev(DyadicParams(p), xi, m);
      },
      py::arg("p"), py::arg("xi"), py::arg("m") = std::size_t{1} << 14);
  m.def(
      "discretization_gap",
      [](int p, double xi) { return discretization_gap(DyadicParams(p), xi); },
      py::arg("p"), py::arg("xi"));
  m.def(
      "clt_report",
      [](const std::vector<int>& ps, double xi_max, int xi_steps,
         std::optional<std::size_t> grid_m) {
        const auto grid = default_xi_grid(xi_max, xi_steps);
        py::list out;
        for (const auto& rep : clt_report(ps, grid, grid_m)) {
          py::dict d;
          d["p"] = rep.p;
          d["sup_err_exact_vs_gauss"] = rep.sup_err_exact_vs_gauss;
          if (grid_m) d["sup_err_nagaev_vs_exact"] = rep.sup_err_nagaev_vs_exact;
          py::list rows;
          for (const auto& row : rep.rows) {
            rows.append(py::make_tuple(row.xi, row.psi, row.gauss));
          }
          d["rows"] = rows;
          out.append(d);
        }
        return out;
      },
      py::arg("ps"), py::arg("xi_max") = 4.0, py::arg("xi_steps") = 16,
      py::arg("grid_m") = std::nullopt);

  // verification
  m.def(
      "verify",
      [](const std::string& level) {
        const auto checks = run_verify(
            level == "full" ? VerifyLevel::full : VerifyLevel::quick);
        py::list out;
        bool all = true;
        for (const auto& c : checks) {
          py::dict d;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["detail"] = c.detail;
          out.append(d);
          all = all && c.pass;
        }
        return py::make_tuple(all, out);
      },
      py::arg("level") = "quick",
      "(all_pass, [{name, pass, detail}, ...]) for the proposition checks");
}
