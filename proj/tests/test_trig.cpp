#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "yb/harness.hpp"
#include "yb/rational_models.hpp"
#include "yb/trig_models.hpp"

using namespace yb;

TEST_CASE("quantum sl2 commutation on the finite module") {
  // cleared form: (q-q^-1)^2 (J+J- - J-J+) = (q-q^-1) * [2J3]-cleared
  for (int n = 1; n <= 3; ++n) {
    auto g = uq_gens(n);
    auto lhs = g.plus_c * g.minus_c - g.minus_c * g.plus_c;
    Matrix<Poly> rhs(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) rhs(k, k) = qint_cleared(2 * k - n) * qint_cleared(1);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("trigonometric R-matrix satisfies the leg-form Yang-Baxter equation") {
  Poly U = tsym("U"), V = tsym("V");
  CHECK(ybe_leg_residual(q_yang_r(U * mono_inverse(V)), q_yang_r(U), q_yang_r(V),
                         std::vector<int>{2, 2, 2})
            .is_zero());
}

TEST_CASE("RLL with the finite trigonometric Lax operator") {
  Poly U = tsym("U"), V = tsym("V");
  for (int n = 1; n <= 3; ++n)
    CHECK(rll_residual(q_yang_r(U * mono_inverse(V)), trig_lax(n, U), trig_lax(n, V),
                       std::vector<int>{2, 2, n + 1})
              .is_zero());
}

TEST_CASE("fused symbol string matches the closed-form entries") {
  Poly U = tsym("U");
  Poly a = tsym("la1") * tsym("mu1"), b = tsym("la2") * tsym("mu2");
  for (int n = 1; n <= 3; ++n) {
    Matrix<Poly> t = q_yang_symbol(U);
    for (int k = 1; k < n; ++k) t = t * q_yang_symbol(U * tsym("qh", -2 * k));
    // normalization [u][u-1]...[u-n+2] (n-1 factors); clearing counts match
    Poly rn = rn_cleared(n - 1, U);
    CHECK(t(0, 0) == rn * afun(n, U, b, a));
    CHECK(t(1, 1) == rn * afun(n, U, a, b));
    CHECK(t(0, 1) == rn * bfun(n, a, b) * tsym("la2") * tsym("mu1"));
    CHECK(t(1, 0) == rn * bfun(n, b, a) * tsym("la1") * tsym("mu2"));
  }
  CHECK(factorized_symbol_check());
}

TEST_CASE("fused matrix reproduces the finite trigonometric Lax operator") {
  TablePtr t = trig_table();
  Poly U = tsym("U");
  for (int n = 1; n <= 3; ++n) {
    auto f = fuse_q_yang(n);
    std::map<std::string, Poly> sh = {{"U", U * tsym("qh", n - 2)}};
    for (auto& p : f.data) p = p.subst(sh, t);
    CHECK(proj_equal(f, trig_lax(n, U)));
  }
}

TEST_CASE("q -> 1 degeneration reproduces the rational Lax operator") {
  TablePtr t = trig_table();
  Poly U = tsym("U");
  for (int n = 1; n <= 2; ++n)
    for (long w : {2L, 5L}) {
      auto lq = trig_lax(n, U);
      std::map<std::string, Poly> sub = {{"U", tsym("qh", 2 * static_cast<int>(w))}};
      auto lr = lax_rational(n, Poly::constant(rational_table(), ExactScalar(w)));
      for (int i = 0; i < lq.rows; ++i)
        for (int j = 0; j < lq.cols; ++j) {
          Poly lim = q_to_one(lq(i, j).subst(sub, t), 1);
          CHECK(lim.constant_value() == lr(i, j).constant_value());
        }
      auto rq = q_yang_r(U);
      auto rr = yang_r(Poly::constant(rational_table(), ExactScalar(w)));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          Poly lim = q_to_one(rq(i, j).subst(sub, t), 1);
          CHECK(lim.constant_value() == rr(i, j).constant_value());
        }
    }
}
