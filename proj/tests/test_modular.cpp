#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "yb/harness.hpp"
#include "yb/modular_models.hpp"
#include "yb/suites.hpp"

using namespace yb;

namespace {
const Quasiperiods P = Quasiperiods::standard();
}

TEST_CASE("noncompact dilogarithm: integral and product paths agree") {
  QDilog g(P);
  for (int i = 0; i < 50; ++i) {
    cplx z{-1.0 + 2.0 * (i % 10) / 9.0, -0.5 + 1.0 * (i / 10) / 4.0};
    CHECK(std::abs(g.gamma_integral(z) - g.gamma_prod(z)) / std::abs(g.gamma_prod(z)) <
          1e-10);
  }
}

TEST_CASE("noncompact dilogarithm: difference equations and reflection") {
  QDilog g(P);
  for (int i = 0; i < 20; ++i) {
    cplx z{-0.8 + 0.11 * i, 0.03 * i - 0.3};
    CHECK(std::abs(g.gamma_prod(z + P.wp) / g.gamma_prod(z - P.wp) -
                   (1.0 + std::exp(-kI * kPi * z / P.w))) < 1e-10);
    CHECK(std::abs(g.gamma_prod(z + P.w) / g.gamma_prod(z - P.w) -
                   (1.0 + std::exp(-kI * kPi * z / P.wp))) < 1e-10);
    CHECK(std::abs(g.gamma_prod(z) * g.gamma_prod(-z) -
                   std::exp(kI * P.beta()) * std::exp(kI * kPi * z * z)) < 1e-10);
  }
}

TEST_CASE("noncompact dilogarithm: zeros at the shifted positive lattice") {
  QDilog g(P);
  for (int n = 0; n <= 1; ++n)
    for (int m = 0; m <= 1; ++m)
      CHECK(std::abs(g.gamma_prod(P.wpp() + 2.0 * static_cast<double>(n) * P.w +
                                  2.0 * static_cast<double>(m) * P.wp)) < 1e-6);
}

TEST_CASE("D-function: evenness, inversion, difference equations") {
  QDilog g(P);
  for (int i = 0; i < 10; ++i) {
    cplx a{0.17 + 0.05 * i, -0.21 + 0.02 * i}, z{-0.4 + 0.13 * i, 0.1 - 0.03 * i};
    CHECK(std::abs(g.dfun(a, z) - g.dfun(a, -z)) < 1e-10);
    CHECK(std::abs(g.dfun(a, z) * g.dfun(-a, z) - 1.0) < 1e-10);
    CHECK(std::abs(g.dfun(a, z - P.wp) / g.dfun(a, z + P.wp) -
                   std::cos(kPi / (2.0 * P.w) * (z - a)) /
                       std::cos(kPi / (2.0 * P.w) * (z + a))) < 1e-10);
    CHECK(std::abs(g.dfun(a, z - P.w) / g.dfun(a, z + P.w) -
                   std::cos(kPi / (2.0 * P.wp) * (z - a)) /
                       std::cos(kPi / (2.0 * P.wp) * (z + a))) < 1e-10);
  }
}

TEST_CASE("even-step gamma ratio ladder matches direct evaluation") {
  QDilog g(P);
  cplx y{0.23, -0.11};
  for (int n = -2; n <= 2; ++n)
    for (int m = -2; m <= 2; ++m) {
      cplx rhs = g.gamma_prod(y + 2.0 * static_cast<double>(n) * P.w +
                              2.0 * static_cast<double>(m) * P.wp) /
                 g.gamma_prod(y);
      CHECK(std::abs(gamma_ratio_even(P, y, n, m) - rhs) / std::abs(rhs) < 1e-10);
    }
}

TEST_CASE("gamma-free lattice values of the D-function") {
  QDilog g(P);
  cplx v{0.31, 0.07};
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      cplx l = static_cast<double>(n) * P.w + static_cast<double>(m) * P.wp;
      CHECK(std::abs(dfun_lattice_value(P, n, m, v) - g.dfun(l, v)) /
                std::abs(g.dfun(l, v)) <
            1e-10);
    }
  cplx a{0.4, -0.1};
  cplx c = 1.0 * P.w + 2.0 * P.wp - a;
  cplx delta = P.w, vv{0.12, -0.21};
  cplx rhs = g.dfun(a, vv) * g.dfun(c, vv - delta);
  CHECK(std::abs(dpair_value(P, a, c, delta, vv) - rhs) / std::abs(rhs) < 1e-10);
}

TEST_CASE("Fourier transform identity of the D-function (Im a < 0)") {
  QDilog g(P);
  using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
  cplx a{0.1, -0.25}, z{0.15, 0.05};
  auto f = [&](double t) { return std::exp(2.0 * kPi * kI * t * z) * g.dfun(a, t); };
  cplx integral = gk::integrate(f, -22.0, 22.0, 13, 1e-12);
  cplx rhs = g.dfun(-P.wpp() - a, z);
  CHECK(std::abs(g.afun(a) * integral - rhs) / std::abs(rhs) < 1e-6);
  CHECK(std::abs(g.afun(a) * g.afun(-a - P.wpp()) - 1.0) < 1e-10);
}

TEST_CASE("reduction closes on the finite-dimensional subspace at lattice spins") {
  cplx u{0.31, 0.12}, s{0.27, -0.08};
  for (auto [n, m] : {std::pair<int, int>{0, 1}, {1, 0}, {1, 1}}) {
    auto red = reduce_modular(P, u, n, m, s);
    CHECK(red.closure < 1e-8);
  }
}

TEST_CASE("reduction reproduces the printed modular L-operator (and its dual)") {
  cplx u{0.31, 0.12}, s{0.27, -0.08};
  {
    auto red = reduce_modular(P, u - P.w - P.wp / 2.0, 0, 1, s);
    LaxMod l = modular_lax(P, u, s);
    std::vector<ShiftOp> b{l.e[0][0], l.e[0][1], l.e[1][0], l.e[1][1]};
    CHECK(suites::shiftop_proj_residual(red.entries, b) < 1e-8);
  }
  {
    auto red = reduce_modular(P, u - P.wp - P.w / 2.0, 1, 0, s);
    LaxMod l = modular_lax(P, u, s, true);
    std::vector<ShiftOp> b{l.e[0][0], l.e[0][1], l.e[1][0], l.e[1][1]};
    CHECK(suites::shiftop_proj_residual(red.entries, b) < 1e-8);
  }
}

TEST_CASE("RLL: 4x4 trigonometric R intertwines two modular Lax operators") {
  cplx u{0.23, 0.05}, v{-0.11, 0.17}, s{0.19, -0.21};
  Matrix<cplx> r = r4_trig(P, u - v);
  auto l1u = suites::shift_kron_lax(P, modular_lax(P, u, s), true);
  auto l2v = suites::shift_kron_lax(P, modular_lax(P, v, s), false);
  auto lhs = suites::shift_scalmul(P, r, suites::shift_matmul(P, l1u, l2v), true);
  auto rhs = suites::shift_scalmul(P, r, suites::shift_matmul(P, l2v, l1u), false);
  double num = 0, den = 0;
  for (int e = 0; e < 16; ++e) {
    num = std::max(num, shiftop_distance(lhs[e], rhs[e]));
    den = std::max(den, lhs[e].max_abs());
  }
  CHECK(num / den < 1e-10);
}

TEST_CASE("finite reductions: Yang-Baxter in leg and braid form") {
  cplx u{0.21, 0.06}, v{-0.13, 0.11};
  auto m = [&](cplx w) { return reduce_modular_finite(P, w, 0, 1, 0, 1); };
  auto muv = m(u - v), mu = m(u), mv = m(v);
  CHECK(muv.closure < 1e-10);
  CHECK(ybe_leg_rel(muv.mat, mu.mat, mv.mat, {2, 2, 2}) < 1e-10);
  // braid form after composing with the flip
  Matrix<cplx> p = braid_permutation(2, 2, cplx{1.0});
  CHECK(ybe_braid_rel(p * muv.mat, p * mu.mat, p * mv.mat, {2, 2, 2}) < 1e-10);
  // mixed spins (0,1) x (1,1)
  auto r12 = reduce_modular_finite(P, u - v, 0, 1, 0, 1);
  auto r13 = reduce_modular_finite(P, u, 0, 1, 1, 1);
  auto r23 = reduce_modular_finite(P, v, 0, 1, 1, 1);
  CHECK(ybe_leg_rel(r12.mat, r13.mat, r23.mat, {2, 2, 4}) < 1e-10);
}

TEST_CASE("lowest finite reduction is projectively the 4x4 trigonometric R") {
  cplx u{0.19, 0.07};
  auto red = reduce_modular_finite(P, u, 0, 1, 0, 1);
  auto fit = proj_fit(red.mat, r4_trig(P, u));
  CHECK(fit.residual < 1e-10);
  // the (1,0) reduction is the same matrix with the quasi-periods swapped
  auto red2 = reduce_modular_finite(P, u, 1, 0, 1, 0);
  auto fit2 = proj_fit(red2.mat, r4_trig(Quasiperiods{P.wp, P.w}, u));
  CHECK(fit2.residual < 1e-10);
  // the (0,0) reduction on either factor is projectively the identity
  auto red0 = reduce_modular_finite(P, u, 0, 0, 0, 1);
  Matrix<cplx> id(red0.mat.rows, red0.mat.cols);
  for (int i = 0; i < id.rows; ++i) id(i, i) = 1.0;
  CHECK(proj_fit(red0.mat, id).residual < 1e-10);
}

TEST_CASE("modular star-triangle identity on lattice exponents") {
  for (auto [na, ma, nb, mb] :
       {std::array<int, 4>{0, 1, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 0}, {2, 1, 1, 1}})
    CHECK(star_triangle_shift(P, na, ma, nb, mb) < 1e-9);
}

TEST_CASE("shift intertwiner annihilates the finite-dimensional subspace") {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      ShiftOp d = shift_dop(P, n + 1, m + 1);
      for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= m; ++l) {
          MExpSum b = MExpSum::mono(P, 0, m - 2 * l, n - 2 * k);
          CHECK(d.apply(b).max_abs() / d.max_abs() < 1e-8);
        }
    }
}

TEST_CASE("modular fusion agrees with the reduction") {
  cplx u{0.17, 0.09}, s{0.23, -0.14};
  CHECK(fusion_reduction_agree(P, u, s, 0, 1) < 1e-7);
  CHECK(fusion_reduction_agree(P, u, s, 1, 0) < 1e-7);
}
