#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>

#include "doctest.h"
#include "yb/harness.hpp"
#include "yb/modular_models.hpp"
#include "yb/rational_models.hpp"
#include "yb/serialize.hpp"
#include "yb/trig_models.hpp"

using namespace yb;

TEST_CASE("JSON round-trip: multivariate polynomial entries") {
  auto b = bundle_poly("yang", {}, yang_r(rsym("u")), /*laurent=*/false);
  auto r = import_matrix_text(export_matrix(b));
  CHECK(r.family == "yang");
  CHECK(r.ring_kind == "multipoly");
  CHECK(b.same_entries(r));
}

TEST_CASE("JSON round-trip: Laurent entries") {
  auto b = bundle_poly("trig_lax", {"2"}, trig_lax(2, tsym("U")), /*laurent=*/true);
  auto r = import_matrix_text(export_matrix(b));
  CHECK(r.ring_kind == "laurent_q");
  CHECK(b.same_entries(r));
}

TEST_CASE("JSON round-trip: exact rational entries") {
  auto m = symmetric_projector(2, 3);
  auto b = bundle_rational("projector", {}, m);
  auto r = import_matrix_text(export_matrix(b));
  CHECK(b.same_entries(r));
}

TEST_CASE("JSON round-trip: complex entries") {
  Quasiperiods p = Quasiperiods::standard();
  auto b = bundle_complex("r4_trig", {}, r4_trig(p, cplx{0.21, 0.05}));
  auto r = import_matrix_text(export_matrix(b));
  CHECK(b.same_entries(r));
}

TEST_CASE("projective comparison accepts rescaled matrices and rejects others") {
  Poly u = rsym("u"), v = rsym("v");
  auto a = yang_r(u);
  auto b = a;
  for (auto& p : b.data) p = p * (u + rconst(3));  // polynomial rescaling
  CHECK(proj_equal(a, b));
  auto c = a;
  c(0, 0) = c(0, 0) + rconst(1);
  CHECK(!proj_equal(a, c));
}

TEST_CASE("numeric projective fit recovers the scalar") {
  Quasiperiods p = Quasiperiods::standard();
  auto a = r4_trig(p, cplx{0.3, 0.1});
  Matrix<cplx> b = a;
  cplx s{1.7, -0.4};
  for (auto& z : b.data) z *= s;
  auto fit = proj_fit(b, a);
  CHECK(std::abs(fit.scalar - s) < 1e-12);
  CHECK(fit.residual < 1e-12);
}

TEST_CASE("leg and braid Yang-Baxter checks agree through the flip") {
  // If R satisfies the leg form, P*R satisfies the braid form.
  Poly u = rsym("u"), v = rsym("v");
  auto p2 = braid_permutation(2, 2, rconst(1));
  CHECK(ybe_leg_residual(yang_r(u - v), yang_r(u), yang_r(v), std::vector<int>{2, 2, 2})
            .is_zero());
  CHECK(ybe_braid_residual(p2 * yang_r(u - v), p2 * yang_r(u), p2 * yang_r(v),
                           std::vector<int>{2, 2, 2})
            .is_zero());
}

TEST_CASE("report JSON carries per-case outcomes") {
  Report r;
  r.suite = "demo";
  CaseResult c;
  c.name = "example";
  c.pass = true;
  c.exact = false;
  c.residual = 1e-12;
  c.tolerance = 1e-8;
  r.add(c);
  std::string j = report_to_json(r);
  CHECK(j.find("\"demo\"") != std::string::npos);
  CHECK(j.find("\"example\"") != std::string::npos);
  CHECK(j.find("\"pass\": true") != std::string::npos);
}
