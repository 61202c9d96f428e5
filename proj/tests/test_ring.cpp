#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "yb/matrix.hpp"
#include "yb/rational_models.hpp"
#include "yb/trig_models.hpp"

using namespace yb;

namespace {

std::mt19937 rng(12345);

ExactScalar rand_scalar() {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return ExactScalar(num(rng), den(rng));
}

Poly rand_poly(const TablePtr& t, const std::vector<std::string>& syms) {
  std::uniform_int_distribution<int> nterms(1, 4), deg(0, 3);
  Poly p = Poly::constant(t, rand_scalar());
  for (int k = nterms(rng); k > 0; --k) {
    Poly m = Poly::constant(t, rand_scalar());
    for (const auto& s : syms)
      for (int d = deg(rng); d > 0; --d) m = m * Poly::symbol(t, s);
    p = p + m;
  }
  return p;
}

}  // namespace

TEST_CASE("exact scalar field axioms on random triples") {
  for (int k = 0; k < 100; ++k) {
    ExactScalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("exact scalar canonical text round-trip") {
  for (int k = 0; k < 100; ++k) {
    ExactScalar a = rand_scalar();
    CHECK(ExactScalar::parse(a.str()) == a);
  }
}

TEST_CASE("polynomial ring axioms on random triples") {
  TablePtr t = rational_table();
  std::vector<std::string> syms{"u", "z", "l"};
  for (int k = 0; k < 100; ++k) {
    Poly a = rand_poly(t, syms), b = rand_poly(t, syms), c = rand_poly(t, syms);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("polynomial canonical text round-trip") {
  TablePtr t = rational_table();
  std::vector<std::string> syms{"u", "z", "l"};
  for (int k = 0; k < 50; ++k) {
    Poly a = rand_poly(t, syms);
    CHECK(Poly::parse(a.str(), t) == a);
  }
  CHECK(Poly::parse(Poly().str(), t).is_zero());
}

TEST_CASE("laurent ring: inverses and round-trip") {
  Poly U = tsym("U"), q = tsym("qh");
  CHECK(U * mono_inverse(U) == tconst(1));
  CHECK(tsym("qh", 3) * tsym("qh", -3) == tconst(1));
  Poly p = U * q + tsym("z", -2) * tconst(7) - mono_inverse(U * q);
  CHECK(Poly::parse(p.str(), trig_table()) == p);
}

TEST_CASE("kronecker mixed-product identity") {
  TablePtr t = rational_table();
  std::vector<std::string> syms{"u", "z"};
  auto rand_mat = [&](int n) {
    Matrix<Poly> m(n, n);
    for (auto& p : m.data) p = rand_poly(t, syms);
    return m;
  };
  for (int k = 0; k < 5; ++k) {
    auto a = rand_mat(2), b = rand_mat(3), c = rand_mat(2), d = rand_mat(3);
    CHECK((kronecker(a, b) * kronecker(c, d) - kronecker(a * c, b * d)).is_zero());
  }
}

TEST_CASE("symmetric projector: idempotent and permutation-invariant") {
  for (int n = 2; n <= 3; ++n)
    for (int d = 2; d <= 3; ++d) {
      auto s = symmetric_projector(n, d);
      CHECK((s * s - s).is_zero());
      for (const auto& pi : all_permutations(n)) {
        auto p = tensor_permutation(pi, d);
        CHECK((s * p - s).is_zero());
        CHECK((p * s - s).is_zero());
      }
    }
}

TEST_CASE("braid permutation is an involution") {
  auto p = braid_permutation(3, 3, ExactScalar(1));
  Matrix<ExactScalar> id(9, 9);
  for (int i = 0; i < 9; ++i) id(i, i) = ExactScalar(1);
  CHECK((p * p - id).is_zero());
}

TEST_CASE("tensor permutations compose contravariantly") {
  // P(b) P(a) = P(b . a) with (b . a)[i] = b[a[i]]
  int d = 2;
  auto perms = all_permutations(3);
  for (const auto& a : perms)
    for (const auto& b : perms) {
      std::vector<int> ba(3);
      for (int i = 0; i < 3; ++i) ba[i] = b[a[i]];
      CHECK((tensor_permutation(b, d) * tensor_permutation(a, d) -
             tensor_permutation(ba, d))
                .is_zero());
    }
}
