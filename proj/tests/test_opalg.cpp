#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "yb/diffop.hpp"
#include "yb/rational_models.hpp"

using namespace yb;

TEST_CASE("Weyl algebra: d z = z d + 1") {
  TablePtr t = rational_table();
  Poly z = rsym("z");
  DiffOp d = DiffOp::d_z(t);
  DiffOp lhs = d * DiffOp::from_poly(z);
  DiffOp rhs = DiffOp::from_poly(z) * d + DiffOp::from_poly(rconst(1));
  CHECK(lhs == rhs);
}

TEST_CASE("normal ordering: (z^2 d)^2 = z^4 d^2 + 2 z^3 d") {
  TablePtr t = rational_table();
  Poly z = rsym("z");
  DiffOp a = DiffOp::from_poly(z * z) * DiffOp::d_z(t);
  DiffOp rhs = DiffOp::from_poly(z.pow(4)) * DiffOp::d_z(t, 2) +
               DiffOp::from_poly(rconst(2) * z.pow(3)) * DiffOp::d_z(t);
  CHECK(a * a == rhs);
}

TEST_CASE("operator action on polynomials") {
  TablePtr t = rational_table();
  Poly z = rsym("z"), u = rsym("u");
  DiffOp op = DiffOp::from_poly(u) * DiffOp::d_z(t, 2) + DiffOp::from_poly(z);
  // op(z^3) = 6 u z + z^4
  CHECK(diffop_act(op, z.pow(3)) == rconst(6) * u * z + z.pow(4));
  // composition consistency: (A*B)(f) == A(B(f))
  DiffOp a = DiffOp::from_poly(z) * DiffOp::d_z(t);
  DiffOp b = DiffOp::d_z(t) * DiffOp::from_poly(z * z);
  Poly f = z.pow(4) + rconst(3) * z;
  CHECK(diffop_act(a * b, f) == diffop_act(a, diffop_act(b, f)));
}

TEST_CASE("star-triangle operator identity for integer exponents") {
  TablePtr t = rational_table();
  Poly z = rsym("z");
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      DiffOp lhs = DiffOp::d_z(t, a) * DiffOp::from_poly(z.pow(a + b)) * DiffOp::d_z(t, b);
      DiffOp rhs =
          DiffOp::from_poly(z.pow(b)) * DiffOp::d_z(t, a + b) * DiffOp::from_poly(z.pow(a));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("kernel annihilation: d^{n+1} (z-x)^n = 0") {
  Poly z = rsym("z"), x = rsym("x");
  for (int n = 0; n <= 6; ++n) {
    Poly h = (z - x).pow(n);
    for (int k = 0; k < n + 1; ++k) h = h.derivative("z");
    CHECK(h.is_zero());
    // one derivative fewer does not annihilate (n >= 1)
    if (n >= 1) {
      Poly g = (z - x).pow(n);
      for (int k = 0; k < n; ++k) g = g.derivative("z");
      CHECK(!g.is_zero());
    }
  }
}

TEST_CASE("restriction to polynomial degree <= n") {
  TablePtr t = rational_table();
  Poly z = rsym("z"), u = rsym("u");
  // u*d restricted to span{1, z}: maps 1 -> 0, z -> u
  DiffOp op = DiffOp::from_poly(u) * DiffOp::d_z(t);
  auto m = diffop_restrict(op, 1);
  CHECK(m(0, 0).is_zero());
  CHECK(m(0, 1) == u);
  CHECK(m(1, 0).is_zero());
  CHECK(m(1, 1).is_zero());
}
