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

#include "qslice/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include "qslice/error.hpp"
#include "qslice/random.hpp"
#include "qslice/realize.hpp"

namespace qslice {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

using gen::Rng;

class Builder {
 public:
  Builder(std::string suite, const VerifyConfig& cfg) : cfg_(cfg) { report_.suite = std::move(suite); }

  void add(const std::string& name, double value, double tolerance) {
    const double tol = cfg_.tol.value_or(tolerance);
    report_.checks.push_back({name, value, tol, value <= tol});
  }
  // Counts are compared exactly and are not affected by the tolerance override.
  void add_count(const std::string& name, int count) {
    report_.checks.push_back({name, static_cast<double>(count), 0.0, count == 0});
  }

  Report take() { return std::move(report_); }

 private:
  const VerifyConfig& cfg_;
  Report report_;
};

Rng seeded(const VerifyConfig& cfg, std::uint64_t stream) { return Rng(cfg.seed * 0x9E3779B97F4A7C15ULL + stream); }

double real_matrix_oracle_gap(const Quaternion& p, const Quaternion& q) {
  // Left multiplication by p as a real 4x4 matrix acting on the coefficients of q.
  const double l[4][4] = {{p.x0, -p.x1, -p.x2, -p.x3},
                          {p.x1, p.x0, -p.x3, p.x2},
                          {p.x2, p.x3, p.x0, -p.x1},
                          {p.x3, -p.x2, p.x1, p.x0}};
  const double v[4] = {q.x0, q.x1, q.x2, q.x3};
  double w[4] = {0, 0, 0, 0};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) w[r] += l[r][c] * v[c];
  }
  return (p * q - Quaternion(w[0], w[1], w[2], w[3])).norm();
}

Report suite_quat(const VerifyConfig& cfg) {
  Builder b("quat", cfg);
  Rng rng = seeded(cfg, 1);
  double assoc = 0, mult = 0, inv = 0, oracle = 0, charpoly = 0, conjrev = 0;
  for (int k = 0; k < 1000; ++k) {
    const Quaternion p = gen::quaternion(rng);
    const Quaternion q = gen::quaternion(rng);
    const Quaternion r = gen::quaternion(rng);
    const double s = 1.0 + p.norm() * q.norm() * (1.0 + r.norm());
    assoc = std::max(assoc, ((p * q) * r - p * (q * r)).norm() / s);
    mult = std::max(mult, std::abs((p * q).norm() - p.norm() * q.norm()) / s);
    inv = std::max(inv, (p * inverse(p) - Quaternion(1.0)).norm());
    oracle = std::max(oracle, real_matrix_oracle_gap(p, q) / s);
    charpoly = std::max(charpoly, char_poly_value(p).norm() / (1.0 + p.norm2()));
    conjrev = std::max(conjrev, ((p * q).conj() - q.conj() * p.conj()).norm() / s);
  }
  b.add("associativity", assoc, 1e-14);
  b.add("norm_multiplicative", mult, 1e-14);
  b.add("inverse", inv, 1e-14);
  b.add("real_matrix_oracle", oracle, 1e-14);
  b.add("char_poly_vanishes", charpoly, 1e-14);
  b.add("conj_reverses_products", conjrev, 1e-14);
  return b.take();
}

Report suite_qmat(const VerifyConfig& cfg) {
  Builder b("qmat", cfg);
  Rng rng = seeded(cfg, 2);
  double hom = 0, adj = 0, herm = 0, cong = 0, solve_res = 0, eig = 0;
  for (int k = 0; k < 50; ++k) {
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 6));
    const QMatrix a = gen::matrix(rng, n, n);
    const QMatrix c = gen::matrix(rng, n, n);
    hom = std::max(hom, (complex_adjoint(a * c) - complex_adjoint(a) * complex_adjoint(c)).norm() /
                            (1.0 + norm(a) * norm(c)));
    adj = std::max(adj, (complex_adjoint(a.adjoint()) - complex_adjoint(a).adjoint()).norm());
    const QMatrix h = a + a.adjoint();
    const HermSpectrum hs = herm_eig(h);
    std::vector<Quaternion> d(hs.eigenvalues.begin(), hs.eigenvalues.end());
    herm = std::max(herm, norm(hs.unitary * QMatrix::diag(d) * hs.unitary.adjoint() - h) / (1.0 + norm(h)));
    cong = std::max(cong, norm(hs.congruence * signature_matrix(hs.signature) * hs.congruence.adjoint() - h) /
                              (1.0 + norm(h)));
    const QMatrix rhs = gen::matrix(rng, n, 2);
    const QMatrix x = solve(a, rhs);
    solve_res = std::max(solve_res, norm(a * x - rhs) / (1.0 + norm(a) * norm(x)));
    for (const auto& pr : right_eigenpairs(a)) {
      eig = std::max(eig, norm(a * pr.vector - pr.vector * pr.value) / (1.0 + norm(a)));
    }
  }
  b.add("chi_multiplicative", hom, 1e-13);
  b.add("chi_adjoint", adj, 0.0);
  b.add("herm_eig_reconstruction", herm, 1e-12);
  b.add("herm_congruence_reconstruction", cong, 1e-12);
  b.add("solve_residual", solve_res, 1e-12);
  b.add("right_eigenpair_residual", eig, 1e-9);
  return b.take();
}

Report suite_resolvent(const VerifyConfig& cfg) {
  Builder b("resolvent", cfg);
  Rng rng = seeded(cfg, 3);
  double left = 0, right = 0;
  int errors = 0;
  for (int k = 0; k < 200; ++k) {
    const QMatrix t = gen::matrix(rng, 5, 5);
    Quaternion s;
    do {
      s = gen::in_ball(rng, 4.0);
    } while (singular_values(char_operator(t, s)).back() < 1e-2);
    try {
      const ResidualPair r = resolvent_eq_residuals(s, t);
      const double scale = 1.0 + norm(t);
      left = std::max(left, r.left / scale);
      right = std::max(right, r.right / scale);
    } catch (const Error&) {
      ++errors;
    }
  }
  b.add("left_equation_residual", left, 1e-10);
  b.add("right_equation_residual", right, 1e-10);
  b.add_count("errors", errors);
  return b.take();
}

struct ContourCase {
  gen::SeparatedCase data;
  ContourSpec contour;
};

std::vector<ContourCase> contour_cases(const VerifyConfig& cfg, Rng& aux) {
  Rng rng = seeded(cfg, 4);
  std::vector<ContourCase> out;
  for (int k = 0; k < 20; ++k) {
    ContourCase c;
    c.data = gen::separated_matrix(rng, static_cast<std::size_t>(gen::uniform_int(rng, 2, 8)));
    c.contour.center = 0.0;
    c.contour.radius = c.data.radius;
    c.contour.nodes = cfg.nodes;
    c.contour.slice = cfg.slice ? *cfg.slice : gen::unit_imaginary(aux);
    out.push_back(std::move(c));
  }
  return out;
}

Report suite_projector(const VerifyConfig& cfg) {
  Builder b("projector", cfg);
  Rng aux = seeded(cfg, 5);
  double idem = 0, comm = 0, tpart = 0, idl = 0, idr = 0, slice = 0;
  int errors = 0;
  for (const auto& c : contour_cases(cfg, aux)) {
    try {
      const RieszProjector rp = riesz_projector(c.data.t, c.contour);
      const ProjectorDiagnostics d = projector_diagnostics(c.data.t, rp);
      idem = std::max(idem, d.idempotency);
      comm = std::max(comm, d.commutation);
      tpart = std::max(tpart, d.t_part_error);
      for (int k = 0; k < 3; ++k) {
        Quaternion lambda;
        do {
          lambda = gen::in_ball(aux, 1.5);
        } while (singular_values(char_operator(c.data.t, lambda)).back() < 5e-2);
        const ResidualPair r = projector_resolvent_identities(c.data.t, rp, lambda);
        idl = std::max(idl, r.left);
        idr = std::max(idr, r.right);
      }
      for (int k = 0; k < 5; ++k) {
        ContourSpec other = c.contour;
        other.slice = gen::unit_imaginary(aux);
        slice = std::max(slice, norm(riesz_projector(c.data.t, other).projector - rp.projector));
      }
    } catch (const Error&) {
      ++errors;
    }
  }
  b.add("idempotency", idem, 1e-8);
  b.add("commutation", comm, 1e-8);
  b.add("t_part", tpart, 1e-8);
  b.add("resolvent_identity_left", idl, 1e-7);
  b.add("resolvent_identity_right", idr, 1e-7);
  b.add("slice_independence", slice, 1e-8);
  b.add_count("errors", errors);
  return b.take();
}

Report suite_split(const VerifyConfig& cfg) {
  Builder b("split", cfg);
  Rng aux = seeded(cfg, 5);
  int mismatches = 0, dims = 0, errors = 0;
  double invariance = 0;
  for (const auto& c : contour_cases(cfg, aux)) {
    try {
      const SpectralSplit s = spectral_split(c.data.t, c.contour);
      if (!s.union_matches) ++mismatches;
      if (s.t_inside.rows() + s.t_outside.rows() != c.data.t.rows()) ++dims;
      for (const QMatrix* q : {&s.basis_inside, &s.basis_outside}) {
        const QMatrix tq = c.data.t * *q;
        invariance = std::max(invariance, norm(tq - *q * (q->adjoint() * tq)));
      }
    } catch (const Error&) {
      ++errors;
    }
  }
  b.add_count("union_mismatches", mismatches);
  b.add_count("dimension_mismatches", dims);
  b.add("invariant_subspace_residual", invariance, 1e-8);
  b.add_count("errors", errors);
  return b.take();
}

Report suite_sre(const VerifyConfig& cfg) {
  Builder b("sre", cfg);
  Rng rng = seeded(cfg, 6);
  double smin = 0, echeck = 0;
  int count_mismatch = 0;
  for (int k = 0; k < 50; ++k) {
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 2, 6));
    const QMatrix t = gen::matrix(rng, n, n);
    const auto spheres = right_eigen_spheres(t);
    int total = 0;
    for (const auto& sm : spheres) {
      total += sm.multiplicity;
      const Quaternion s = sm.sphere.point(gen::unit_imaginary(rng));
      smin = std::max(smin, singular_values(char_operator(t, s)).back());
    }
    if (total != static_cast<int>(n)) ++count_mismatch;
    for (const auto& pr : right_eigenpairs(t)) {
      const Quaternion s = sphere_of(pr.value).point(gen::unit_imaginary(rng));
      echeck = std::max(echeck, s_eigencheck(t, pr.vector, s));
    }
  }
  b.add("char_operator_min_singular_value", smin, 1e-8);
  b.add("s_eigencheck", echeck, 1e-8);
  b.add_count("multiplicity_mismatches", count_mismatch);
  return b.take();
}

double rel_diff(const SliceSeries& f, const SliceSeries& g) {
  double scale = 0.0;
  for (int n = 0; n <= std::min(f.degree(), g.degree()); ++n) scale = std::max(scale, f[n].max_abs());
  return max_coeff_diff(f, g) / (1.0 + scale);
}

Report suite_star(const VerifyConfig& cfg) {
  Builder b("star", cfg);
  Rng rng = seeded(cfg, 7);
  constexpr int kDeg = 16;
  double assoc = 0, dist = 0;
  for (int k = 0; k < 50; ++k) {
    const bool scalar = k % 2 == 0;
    const std::size_t n = scalar ? 1 : 2;
    const SliceSeries f = gen::matrix_series(rng, n, n, kDeg);
    const SliceSeries g = gen::matrix_series(rng, n, n, kDeg);
    const SliceSeries h = gen::matrix_series(rng, n, n, kDeg);
    assoc = std::max(assoc, rel_diff(star_mul(star_mul(f, g), h), star_mul(f, star_mul(g, h))));
    dist = std::max(dist, rel_diff(star_mul(f, g + h), star_mul(f, g) + star_mul(f, h)));
    dist = std::max(dist, rel_diff(star_mul(f + g, h), star_mul(f, h) + star_mul(g, h)));
  }
  b.add("associativity", assoc, 1e-12);
  b.add("distributivity", dist, 1e-12);

  double right = 0, left = 0, dual = 0, sym = 0;
  for (int k = 0; k < 100; ++k) {
    const SliceSeries f = gen::scalar_series(rng, kDeg);
    const SliceSeries fi = star_inverse(f);
    const SliceSeries one = SliceSeries::scalar_constant(1.0, kDeg);
    right = std::max(right, max_coeff_diff(star_mul(f, fi), one));
    left = std::max(left, max_coeff_diff(star_mul(fi, f), one));
    dual = std::max(dual, max_coeff_diff(fi, formal_star_inverse(f)));
    const SliceSeries fs = series_sym(f);
    for (int n = 0; n <= kDeg; ++n) sym = std::max(sym, fs.scalar(n).imag_norm());
  }
  b.add("inverse_right", right, 1e-10);
  b.add("inverse_left", left, 1e-10);
  b.add("inverse_two_routes", dual, 1e-10);
  b.add("symmetrization_real", sym, 1e-12);

  double resolvent = 0;
  for (int k = 0; k < 20; ++k) {
    const QMatrix a = gen::matrix_with_norm(rng, 3, 3, 0.6);
    const Quaternion p = gen::in_ball(rng, 0.9);
    resolvent = std::max(resolvent, (star_resolvent_eval(a, p) - eval(star_resolvent(a, 120), p)).max_abs());
  }
  b.add("resolvent_closed_form", resolvent, 1e-10);
  return b.take();
}

Report suite_blaschke(const VerifyConfig& cfg) {
  Builder b("blaschke", cfg);
  Rng rng = seeded(cfg, 8);
  const int d = cfg.degree;
  double excess = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 10; ++k) {
    const double m = k == 0 ? 0.8 : gen::uniform(rng, 0.05, 0.8);
    const Quaternion a = gen::quaternion_with_modulus(rng, m);
    const SliceSeries s = blaschke_point(a, d);
    const double bound = blaschke_point_tail_bound(a, d);
    for (int sl = 0; sl < 4; ++sl) {
      const UnitImaginary unit = gen::unit_imaginary(rng);
      for (int t = 0; t < 64; ++t) {
        const Quaternion p = slice_exp(unit.q(), 2.0 * std::numbers::pi * t / 64.0);
        excess = std::max(excess, std::abs(eval_scalar(s, p).norm() - 1.0) - bound);
      }
    }
  }
  b.add("boundary_modulus_excess_over_tail_bound", excess, 1e-12);

  double zero = 0;
  int errors = 0;
  for (int k = 0; k < 5; ++k) {
    BlaschkeSpec spec;
    const int npts = gen::uniform_int(rng, 2, 3);
    for (int j = 0; j < npts; ++j) {
      spec.points.push_back({gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.2, 0.6)), j == 0 ? 2 : 1});
    }
    if (k % 2 == 1) {
      const Quaternion c = gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.2, 0.6));
      spec.spheres.push_back({sphere_of(c), 1});
    }
    try {
      const BlaschkeProduct bp = blaschke_product(spec, d);
      for (const auto& z : spec.points) zero = std::max(zero, eval_scalar(bp.series, z.a).norm());
      for (const auto& z : spec.spheres) {
        for (int u = 0; u < 3; ++u) {
          zero = std::max(zero, eval_scalar(bp.series, z.sphere.point(gen::unit_imaginary(rng))).norm());
        }
      }
    } catch (const Error&) {
      ++errors;
    }
  }
  b.add("product_value_at_zeros", zero, 1e-8);
  b.add_count("errors", errors);
  return b.take();
}

// S = B_a^{-*} * c.
SliceSeries one_negative_square(const Quaternion& a, const Quaternion& c, int degree) {
  return krein_langer_compose(blaschke_point(a, degree), SliceSeries::scalar_constant(c, degree));
}

Report suite_negsq(const VerifyConfig& cfg) {
  Builder b("negsq", cfg);
  Rng rng = seeded(cfg, 9);
  const int mu = cfg.mu_max;
  const SliceSeries p = SliceSeries::scalar_polynomial({0.0, 1.0}, mu);
  b.add_count("kappa_identity_nonzero", neg_squares(schur_kernel_coeffs(p, mu)).kappa);

  int wrong_kappa = 0, not_stable = 0;
  constexpr int kStableBy = 10;
  for (int k = 0; k < 5; ++k) {
    const Quaternion a = gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.4, 0.8));
    const Quaternion c = gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.2, 0.8));
    const SliceSeries s = one_negative_square(a, c, std::max(mu, kStableBy));
    const NegSquares ns = neg_squares(schur_kernel_coeffs(s, kStableBy));
    if (ns.kappa != 1) ++wrong_kappa;
    if (!ns.stabilized) ++not_stable;
  }
  b.add_count("kappa_one_mismatches", wrong_kappa);
  b.add_count("kappa_one_not_stabilized", not_stable);

  int congruence_failures = 0;
  for (int k = 0; k < 20; ++k) {
    const Quaternion a = gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.4, 0.8));
    const Quaternion c = gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.2, 0.8));
    const KernelCoeffs kc = schur_kernel_coeffs(one_negative_square(a, c, kStableBy), kStableBy);
    const SliceSeries alpha = gen::scalar_series(rng, kStableBy);
    if (!congruence_check(kc, alpha, kStableBy).kappa_equal) ++congruence_failures;
  }
  b.add_count("congruence_kappa_mismatches", congruence_failures);

  // Coefficients recovered from point values by the double contour integral.
  const SliceSeries s0 = SliceSeries::scalar_polynomial({0.5, Quaternion(0.0, 0.2, 0.1, 0.0), 0.1}, 8);
  const QMatrix one = QMatrix::scalar(1.0);
  const KernelCoeffs exact = schur_kernel_coeffs(s0, one, one, 3);
  const KernelCoeffs quad = kernel_coeffs_by_quadrature(s0, one, one, 3, 0.5, 32);
  double gap = 0;
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) gap = std::max(gap, norm(exact(n, m) - quad(n, m)));
  }
  b.add("quadrature_cross_check", gap, 1e-8);
  return b.take();
}

Report suite_realize(const VerifyConfig& cfg) {
  Builder b("realize", cfg);
  Rng rng = seeded(cfg, 10);
  double stein = 0, cong = 0, kid = 0, sig_i = 0;
  int errors = 0;
  for (int k = 0; k < 10; ++k) {
    const auto m = static_cast<std::size_t>(gen::uniform_int(rng, 1, 3));
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 2));
    const QMatrix a = gen::matrix_with_norm(rng, m, m, 0.7);
    const QMatrix c = gen::matrix(rng, n, m);
    QMatrix sigma = QMatrix::identity(n);
    if (n == 2 && k % 2 == 1) sigma(1, 1) = -1.0;
    try {
      const Realization r = realize(a, c, sigma);
      stein = std::max(stein, stein_residual(a, c, sigma, r.P));
      cong = std::max(cong, congruence_residual(r));
      for (int j = 0; j < 50; ++j) {
        kid = std::max(kid, kernel_identity_residual(r, gen::in_ball(rng, 0.95), gen::in_ball(rng, 0.95)));
      }
      if (sigma == QMatrix::identity(n)) {
        const Realization ri = realization_sigma_I(a, c, r.P);
        for (int j = 0; j < 10; ++j) {
          sig_i = std::max(sig_i, kernel_identity_residual(ri, gen::in_ball(rng, 0.95), gen::in_ball(rng, 0.95)));
        }
      }
    } catch (const Error&) {
      ++errors;
    }
  }
  b.add("stein_residual", stein, 1e-10);
  b.add("congruence_residual", cong, 1e-8);
  b.add("kernel_identity_residual", kid, 1e-8);
  b.add("sigma_identity_kernel_residual", sig_i, 1e-8);
  b.add_count("errors", errors);

  const Realization id = realize(QMatrix::scalar(0.0), QMatrix::scalar(1.0), QMatrix::scalar(1.0));
  const SliceSeries s = realization_series(id, cfg.degree);
  const SliceSeries p = SliceSeries::scalar_polynomial({0.0, 1.0}, cfg.degree);
  b.add_count("identity_function_exact", s == p ? 0 : 1);
  return b.take();
}

// Distance between two sphere lists; infinite when multiplicities disagree.
double sphere_list_distance(std::vector<SphereMultiplicity> got, const std::vector<SphereMultiplicity>& want) {
  double worst = 0.0;
  for (const auto& w : want) {
    auto best = got.end();
    double bd = std::numeric_limits<double>::infinity();
    for (auto it = got.begin(); it != got.end(); ++it) {
      const double dd = std::hypot(it->sphere.re - w.sphere.re, it->sphere.im_mag - w.sphere.im_mag);
      if (dd < bd) {
        bd = dd;
        best = it;
      }
    }
    if (best == got.end() || best->multiplicity != w.multiplicity) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, bd);
    got.erase(best);
  }
  return got.empty() ? worst : std::numeric_limits<double>::infinity();
}

Report suite_klfactor(const VerifyConfig& cfg) {
  Builder b("klfactor", cfg);
  Rng rng = seeded(cfg, 11);
  const int mu = std::min(cfg.mu_max, 12);
  int kappa_wrong = 0, schur_not_positive = 0, errors = 0;
  double zero_err = 0, recompose = 0;
  for (int k = 0; k < 8; ++k) {
    Realization bprod;
    std::vector<SphereMultiplicity> want;
    int expected = 0;
    if (k < 4) {
      const Quaternion a = gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.5, 0.8));
      bprod = blaschke_point_realization(a);
      want = {{sphere_of(a), 1}};
      expected = 1;
    } else if (k < 6) {
      const Quaternion a = gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.5, 0.8));
      const Quaternion a2 = gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.5, 0.8));
      bprod = cascade(blaschke_point_realization(a), blaschke_point_realization(a2));
      want = {{sphere_of(a), 1}, {sphere_of(a2), 1}};
      expected = 2;
    } else {
      const Quaternion c = gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.5, 0.8));
      bprod = blaschke_sphere_realization(sphere_of(c));
      want = {{sphere_of(c), 2}};
      expected = 2;
    }
    // Schur factor: a constant or an affine function with |s0| + |s1| < 1.
    Realization s0 = constant_realization(QMatrix::scalar(gen::quaternion_with_modulus(rng, gen::uniform(rng, 0.2, 0.8))));
    if (k % 2 == 1) {
      const Quaternion d0 = gen::quaternion_with_modulus(rng, 0.3);
      const Quaternion b0 = gen::quaternion_with_modulus(rng, 0.4);
      s0 = {QMatrix::scalar(0.0), QMatrix::scalar(b0), QMatrix::scalar(1.0), QMatrix::scalar(d0), QMatrix::scalar(1.0), QMatrix()};
    }
    try {
      const Realization s = cascade(invert(bprod), s0);
      const KreinLangerResult kl = krein_langer_factor(s, mu, mu);
      if (kl.outside_dim != expected || kl.kappa_original.kappa != expected) ++kappa_wrong;
      if (kl.kappa_schur.kappa != 0) ++schur_not_positive;
      zero_err = std::max(zero_err, sphere_list_distance(kl.zero_spheres, want));
      recompose = std::max(recompose, rel_diff(krein_langer_compose(kl.blaschke_series, kl.schur_series), kl.original_series));
    } catch (const Error&) {
      ++errors;
    }
  }
  b.add_count("kappa_mismatches", kappa_wrong);
  b.add_count("schur_factor_negative_squares", schur_not_positive);
  b.add("zero_sphere_error", zero_err, 1e-6);
  b.add("recomposition_error", recompose, 1e-8);
  b.add_count("errors", errors);
  return b.take();
}

const std::map<std::string, std::function<Report(const VerifyConfig&)>>& registry() {
  static const std::map<std::string, std::function<Report(const VerifyConfig&)>> r{
      {"quat", suite_quat},   {"qmat", suite_qmat},       {"resolvent", suite_resolvent},
      {"projector", suite_projector}, {"split", suite_split}, {"sre", suite_sre},
      {"star", suite_star},   {"blaschke", suite_blaschke}, {"negsq", suite_negsq},
      {"realize", suite_realize}, {"klfactor", suite_klfactor}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"quat", "qmat", "resolvent", "projector", "split", "sre",
                                              "star", "blaschke", "negsq", "realize", "klfactor"};
  return names;
}

Report run_suite(const std::string& name, const VerifyConfig& config) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
  return it->second(config);
}

std::vector<Report> run_all(const VerifyConfig& config) {
  std::vector<Report> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, config));
  return out;
}

}  // namespace qslice
