// Copyright 2026 The qslice Authors
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

// Python bindings. Quaternions are length-4 arrays (x0, x1, x2, x3); matrices
// are float64 arrays of shape (rows, cols, 4); series are (degree + 1, rows, cols, 4)
// with coefficients multiplied from the left by powers of p.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "qslice/blaschke.hpp"
#include "qslice/error.hpp"
#include "qslice/kernels.hpp"
#include "qslice/realize.hpp"
#include "qslice/series.hpp"
#include "qslice/sspec.hpp"
#include "qslice/verify.hpp"

namespace py = pybind11;
using namespace qslice;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Quaternion to_quat(const Array& a) {
  if (a.ndim() == 0) return Quaternion(*a.data());
  if (a.ndim() != 1 || a.shape(0) != 4) throw py::value_error("quaternion must be a scalar or have shape (4,)");
  const double* d = a.data();
  return {d[0], d[1], d[2], d[3]};
}

Array from_quat(const Quaternion& q) {
  Array out(std::vector<py::ssize_t>{4});
  double* d = out.mutable_data();
  d[0] = q.x0; d[1] = q.x1; d[2] = q.x2; d[3] = q.x3;
  return out;
}

QMatrix to_matrix(const Array& a) {
  if (a.ndim() == 2) {
    // Real matrix.
    QMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    auto v = a.unchecked<2>();
    for (py::ssize_t r = 0; r < a.shape(0); ++r)
      for (py::ssize_t c = 0; c < a.shape(1); ++c) m(r, c) = v(r, c);
    return m;
  }
  if (a.ndim() != 3 || a.shape(2) != 4) throw py::value_error("matrix must have shape (rows, cols, 4) or (rows, cols)");
  QMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
  auto v = a.unchecked<3>();
  for (py::ssize_t r = 0; r < a.shape(0); ++r)
    for (py::ssize_t c = 0; c < a.shape(1); ++c) m(r, c) = {v(r, c, 0), v(r, c, 1), v(r, c, 2), v(r, c, 3)};
  return m;
}

Array from_matrix(const QMatrix& m) {
  Array out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols()), py::ssize_t{4}});
  auto v = out.mutable_unchecked<3>();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Quaternion& q = m(r, c);
      v(r, c, 0) = q.x0; v(r, c, 1) = q.x1; v(r, c, 2) = q.x2; v(r, c, 3) = q.x3;
    }
  }
  return out;
}

SliceSeries to_series(const Array& a) {
  if (a.ndim() == 2 && a.shape(1) == 4) {
    // Scalar series given as (degree + 1, 4).
    std::vector<Quaternion> c;
    auto v = a.unchecked<2>();
    for (py::ssize_t n = 0; n < a.shape(0); ++n) c.push_back({v(n, 0), v(n, 1), v(n, 2), v(n, 3)});
    return SliceSeries::scalar_polynomial(c, static_cast<int>(c.size()) - 1);
  }
  if (a.ndim() != 4 || a.shape(3) != 4) throw py::value_error("series must have shape (degree + 1, rows, cols, 4)");
  std::vector<QMatrix> coeff;
  for (py::ssize_t n = 0; n < a.shape(0); ++n) {
    QMatrix m(static_cast<std::size_t>(a.shape(1)), static_cast<std::size_t>(a.shape(2)));
    for (py::ssize_t r = 0; r < a.shape(1); ++r)
      for (py::ssize_t c = 0; c < a.shape(2); ++c)
        m(r, c) = {*a.data(n, r, c, 0), *a.data(n, r, c, 1), *a.data(n, r, c, 2), *a.data(n, r, c, 3)};
    coeff.push_back(std::move(m));
  }
  return SliceSeries(std::move(coeff));
}

Array from_series(const SliceSeries& s) {
  const auto d = static_cast<py::ssize_t>(s.degree() + 1);
  Array out({d, static_cast<py::ssize_t>(s.rows()), static_cast<py::ssize_t>(s.cols()), py::ssize_t{4}});
  auto v = out.mutable_unchecked<4>();
  for (py::ssize_t n = 0; n < d; ++n) {
    for (std::size_t r = 0; r < s.rows(); ++r) {
      for (std::size_t c = 0; c < s.cols(); ++c) {
        const Quaternion& q = s[static_cast<int>(n)](r, c);
        v(n, r, c, 0) = q.x0; v(n, r, c, 1) = q.x1; v(n, r, c, 2) = q.x2; v(n, r, c, 3) = q.x3;
      }
    }
  }
  return out;
}

py::list spheres(const std::vector<SphereMultiplicity>& list) {
  py::list out;
  for (const auto& s : list) {
    py::dict d;
    d["re"] = s.sphere.re;
    d["im_mag"] = s.sphere.im_mag;
    d["multiplicity"] = s.multiplicity;
    out.append(d);
  }
  return out;
}

ContourSpec contour(double center, double radius, int nodes, const std::optional<std::vector<double>>& slice) {
  ContourSpec c{center, radius};
  c.nodes = nodes;
  if (slice) {
    if (slice->size() != 3) throw py::value_error("slice must have three components");
    c.slice = UnitImaginary((*slice)[0], (*slice)[1], (*slice)[2]);
  }
  return c;
}

py::dict neg_squares_dict(const NegSquares& ns) {
  py::list table;
  for (const auto& row : ns.table) {
    py::dict d;
    d["mu"] = row.mu;
    d["negative"] = row.negative;
    d["zero"] = row.zero;
    d["positive"] = row.positive;
    table.append(d);
  }
  py::dict out;
  out["kappa"] = ns.kappa;
  out["stabilized"] = ns.stabilized;
  out["table"] = table;
  return out;
}

py::dict realization_dict(const Realization& r) {
  py::dict d;
  d["A"] = from_matrix(r.A);
  d["B"] = from_matrix(r.B);
  d["C"] = from_matrix(r.C);
  d["D"] = from_matrix(r.D);
  d["sigma"] = from_matrix(r.sigma);
  d["P"] = from_matrix(r.P);
  return d;
}

Realization realization_from(const py::dict& d) {
  auto get = [&](const char* key) { return to_matrix(d[key].cast<Array>()); };
  Realization r{get("A"), get("B"), get("C"), get("D"), QMatrix{}, QMatrix{}};
  r.sigma = d.contains("sigma") ? get("sigma") : QMatrix::identity(r.D.rows());
  if (d.contains("P")) r.P = get("P");
  return r;
}

}  // namespace

PYBIND11_MODULE(_qslice, m) {
  m.doc() = "Slice hyperholomorphic Schur analysis over the quaternions";

  static py::exception<Error> error(m, "QsliceError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(std::string(e.what()));
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("qmul", [](const Array& p, const Array& q) { return from_quat(to_quat(p) * to_quat(q)); },
        "Quaternion product p q.");
  m.def("qinv", [](const Array& p) { return from_quat(inverse(to_quat(p))); }, "Quaternion inverse.");
  m.def("matmul", [](const Array& a, const Array& b) { return from_matrix(to_matrix(a) * to_matrix(b)); });

  m.def("right_eigen_spheres", [](const Array& t) { return spheres(right_eigen_spheres(to_matrix(t))); },
        py::arg("t"), "Right spectrum as a list of spheres with multiplicities.");
  m.def("s_resolvent_left", [](const Array& s, const Array& t) {
    return from_matrix(s_resolvent_left(to_quat(s), to_matrix(t)));
  });
  m.def("s_resolvent_right", [](const Array& s, const Array& t) {
    return from_matrix(s_resolvent_right(to_quat(s), to_matrix(t)));
  });
  m.def(
      "riesz_projector",
      [](const Array& t, double center, double radius, int nodes, const std::optional<std::vector<double>>& slice) {
        return from_matrix(riesz_projector(to_matrix(t), contour(center, radius, nodes, slice)).projector);
      },
      py::arg("t"), py::arg("center") = 0.0, py::arg("radius") = 1.0, py::arg("nodes") = kDefaultNodes,
      py::arg("slice") = py::none());
  m.def(
      "spectral_split",
      [](const Array& t, double center, double radius, int nodes) {
        const SpectralSplit sp = spectral_split(to_matrix(t), contour(center, radius, nodes, std::nullopt));
        py::dict d;
        d["inside"] = spheres(sp.inside);
        d["outside"] = spheres(sp.outside);
        d["t_inside"] = from_matrix(sp.t_inside);
        d["t_outside"] = from_matrix(sp.t_outside);
        d["union_matches"] = sp.union_matches;
        return d;
      },
      py::arg("t"), py::arg("center") = 0.0, py::arg("radius") = 1.0, py::arg("nodes") = kDefaultNodes);

  m.def("star_mul", [](const Array& f, const Array& g) { return from_series(star_mul(to_series(f), to_series(g))); });
  m.def("star_inverse", [](const Array& f) { return from_series(star_inverse(to_series(f))); });
  m.def("eval_series", [](const Array& f, const Array& p) { return from_matrix(eval(to_series(f), to_quat(p))); });

  m.def(
      "neg_squares",
      [](const Array& s, int mu_max, const std::optional<Array>& sigma1, const std::optional<Array>& sigma2) {
        const SliceSeries ser = to_series(s);
        const QMatrix id = QMatrix::identity(ser.rows());
        const QMatrix s1 = sigma1 ? to_matrix(*sigma1) : QMatrix::identity(ser.cols());
        const QMatrix s2 = sigma2 ? to_matrix(*sigma2) : id;
        return neg_squares_dict(neg_squares(schur_kernel_coeffs(ser, s1, s2, mu_max)));
      },
      py::arg("s"), py::arg("mu_max") = kDefaultMuMax, py::arg("sigma1") = py::none(),
      py::arg("sigma2") = py::none(), "Negative squares of the kernel of s, counted on truncations up to mu_max.");

  m.def(
      "blaschke_point", [](const Array& a, int degree) { return from_series(blaschke_point(to_quat(a), degree)); },
      py::arg("a"), py::arg("degree") = kBlaschkeDegree);
  m.def(
      "blaschke_product",
      [](const std::vector<Array>& points, const std::vector<std::pair<double, double>>& spheres_in, int degree) {
        BlaschkeSpec spec;
        for (const auto& p : points) spec.points.push_back({to_quat(p), 1});
        for (const auto& [re, im] : spheres_in) spec.spheres.push_back({Sphere{re, im}, 1});
        return from_series(blaschke_product(spec, degree).series);
      },
      py::arg("points"), py::arg("spheres") = std::vector<std::pair<double, double>>{},
      py::arg("degree") = kBlaschkeDegree, "Blaschke product; spheres are (re, im_mag) pairs.");

  m.def(
      "realize",
      [](const Array& a, const Array& c, const std::optional<Array>& sigma) {
        const QMatrix cm = to_matrix(c);
        const Realization r = realize(to_matrix(a), cm, sigma ? to_matrix(*sigma) : QMatrix::identity(cm.rows()));
        py::dict d = realization_dict(r);
        d["congruence_residual"] = congruence_residual(r);
        d["stein_residual"] = stein_residual(r.A, r.C, r.sigma, r.P);
        return d;
      },
      py::arg("a"), py::arg("c"), py::arg("sigma") = py::none());
  m.def("realization_eval", [](const py::dict& r, const Array& p) {
    return from_matrix(realization_eval(realization_from(r), to_quat(p)));
  });
  m.def(
      "realization_series",
      [](const py::dict& r, int degree) { return from_series(realization_series(realization_from(r), degree)); },
      py::arg("r"), py::arg("degree") = kDefaultDegree);
  m.def(
      "krein_langer_factor",
      [](const py::dict& r, int degree, int mu_max) {
        const KreinLangerResult kl = krein_langer_factor(realization_from(r), degree, mu_max);
        py::dict d;
        d["blaschke"] = realization_dict(kl.blaschke);
        d["blaschke_series"] = from_series(kl.blaschke_series);
        d["schur_series"] = from_series(kl.schur_series);
        d["outside_spheres"] = spheres(kl.outside_spheres);
        d["zero_spheres"] = spheres(kl.zero_spheres);
        d["outside_dim"] = kl.outside_dim;
        d["kappa_original"] = neg_squares_dict(kl.kappa_original);
        d["kappa_schur"] = neg_squares_dict(kl.kappa_schur);
        d["recomposition_error"] = kl.recomposition_error;
        return d;
      },
      py::arg("r"), py::arg("degree") = kDefaultMuMax, py::arg("mu_max") = kDefaultMuMax);

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, int nodes, int degree, int mu_max) {
        VerifyConfig cfg;
        cfg.seed = seed;
        cfg.nodes = nodes;
        cfg.degree = degree;
        cfg.mu_max = mu_max;
        const Report rep = run_suite(suite, cfg);
        py::list checks;
        for (const auto& c : rep.checks) {
          py::dict d;
          d["name"] = c.name;
          d["value"] = c.value;
          d["tolerance"] = c.tolerance;
          d["pass"] = c.pass;
          checks.append(d);
        }
        py::dict out;
        out["suite"] = rep.suite;
        out["passed"] = rep.passed();
        out["checks"] = checks;
        return out;
      },
      py::arg("suite"), py::arg("seed") = 42, py::arg("nodes") = kDefaultNodes, py::arg("degree") = kBlaschkeDegree,
      py::arg("mu_max") = kDefaultMuMax);
  m.def("suite_names", &suite_names);
}
