#pragma once

// Rational (sl2 / SL(2,C)) building blocks:
//   * lowest-weight generators on polynomial modules,
//   * Lax operators (infinite-dimensional factorized form and its finite
//     restrictions),
//   * Yang's R-matrix,
//   * the general R-operator restricted to finite-dimensional invariant
//     subspaces (reduce_verma, reduce_sl2c),
//   * fusion of elementary R-matrices (tensor route and symbol route), and
//   * the first-order Lambda operator together with its n-step string.

#include <string>
#include <vector>

#include "yb/diffop.hpp"
#include "yb/matrix.hpp"
#include "yb/poly.hpp"
#include "yb/sandwich.hpp"

namespace yb {

// Shared symbol table for everything rational. "z"/"zb" are the holomorphic /
// antiholomorphic module variables, "z1"/"z1b" the first-space counterparts,
// "x","y" (and bars) generating-function parameters, "la*/mu*" fusion symbols.
inline TablePtr rational_table() {
  static TablePtr t = make_table({"u", "v", "l", "lb", "z", "zb", "z1", "z1b", "x", "xb",
                                  "y", "yb", "la1", "la2", "mu1", "mu2"});
  return t;
}

inline Poly rsym(const std::string& name) { return Poly::symbol(rational_table(), name); }
inline Poly rconst(const ExactScalar& c) { return Poly::constant(rational_table(), c); }
inline Poly rconst(long n) { return rconst(ExactScalar(n)); }
inline Poly rconst(long n, long d) { return rconst(ExactScalar(n, d)); }

inline Matrix<ExactScalar> to_scalar_matrix(const Matrix<Poly>& m) {
  Matrix<ExactScalar> r(m.rows, m.cols);
  r.row_factors = m.row_factors;
  r.col_factors = m.col_factors;
  for (size_t k = 0; k < m.data.size(); ++k) r.data[k] = m.data[k].constant_value();
  return r;
}

// Raising/lowering/Cartan generators on the (n+1)-dimensional module of
// polynomials of degree <= n in z:  S+ = z^2 d - n z, S- = -d, S3 = z d - n/2.
struct Sl2Gens {
  Matrix<ExactScalar> plus, minus, three;
};

inline DiffOp sl2_plus_op(const ExactScalar& two_s_half /*spin s*/) {
  TablePtr t = rational_table();
  Poly z = rsym("z");
  return DiffOp::from_poly(z * z, 1) - DiffOp::from_poly(z * (ExactScalar(2) * two_s_half));
}
inline DiffOp sl2_minus_op() {
  return -DiffOp::d_z(rational_table());
}
inline DiffOp sl2_three_op(const ExactScalar& s) {
  TablePtr t = rational_table();
  return DiffOp::from_poly(rsym("z"), 1) - DiffOp::from_poly(rconst(s));
}

inline Sl2Gens sl2_gens(int n) {
  ExactScalar s(n, 2);
  return {to_scalar_matrix(diffop_restrict(sl2_plus_op(s), n)),
          to_scalar_matrix(diffop_restrict(sl2_minus_op(), n)),
          to_scalar_matrix(diffop_restrict(sl2_three_op(s), n))};
}

// The 2x2 gl2-valued building block E^(s): entries as differential operators
// in z with spin s. Arranged so that lax(u) = u*1 + E, i.e.
//   E(0,0) = z d - s,        E(0,1) = -d,
//   E(1,0) = z^2 d - 2 s z,  E(1,1) = -z d + s.
inline Matrix<DiffOp> egl2_block(const Poly& s, bool barred) {
  TablePtr t = rational_table();
  const char* var = barred ? kBarVar : kHolVar;
  Poly z = Poly::symbol(t, var);
  DiffOp d = barred ? DiffOp::d_zb(t) : DiffOp::d_z(t);
  DiffOp zd = DiffOp::from_poly(z, barred ? 0 : 1, barred ? 1 : 0);
  Matrix<DiffOp> e(2, 2);
  e(0, 0) = zd - DiffOp::from_poly(s);
  e(0, 1) = -d;
  e(1, 0) = DiffOp::from_poly(z * z, barred ? 0 : 1, barred ? 1 : 0) -
            DiffOp::from_poly(ExactScalar(2) * s * z);
  e(1, 1) = -zd + DiffOp::from_poly(s);
  return e;
}

// Holomorphic and antiholomorphic generator blocks of the principal series
// module with discrete labels (n, nb): spins s = n/2, sb = nb/2, restricted
// to the (n+1)(nb+1)-dimensional subspace.
struct Sl2cGens {
  Matrix<ExactScalar> e[2][2];   // holomorphic E^(s)
  Matrix<ExactScalar> eb[2][2];  // antiholomorphic E^(sb)
};

inline Sl2cGens sl2c_gens(int n, int nb) {
  Sl2cGens g;
  Matrix<DiffOp> e = egl2_block(rconst(n, 2), false);
  Matrix<DiffOp> eb = egl2_block(rconst(nb, 2), true);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      g.e[i][j] = to_scalar_matrix(diffop_restrict2(e(i, j), n, nb));
      g.eb[i][j] = to_scalar_matrix(diffop_restrict2(eb(i, j), n, nb));
    }
  return g;
}

// Infinite-dimensional Lax operator L(w) = w*1 + E^(ell) acting on functions
// of z, as a 2x2 matrix of differential operators.
inline Matrix<DiffOp> lax_verma(const Poly& w, const Poly& ell) {
  Matrix<DiffOp> l = egl2_block(ell, false);
  l(0, 0) += DiffOp::from_poly(w);
  l(1, 1) += DiffOp::from_poly(w);
  return l;
}

// Finite-dimensional Lax matrix for spin n/2 on C^2 (x) C^{n+1}, auxiliary
// index major. Entries are polynomials in the entries of w.
inline Matrix<Poly> lax_rational(int n, const Poly& w) {
  Matrix<DiffOp> l = lax_verma(w, rconst(n, 2));
  Matrix<Poly> blocks[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) blocks[i][j] = diffop_restrict(l(i, j), n);
  int d = n + 1;
  Matrix<Poly> m(2 * d, 2 * d);
  m.row_factors = {2, d};
  m.col_factors = {2, d};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(i * d + r, j * d + c) = blocks[i][j](r, c);
  return m;
}

// Yang's rational R-matrix on C^2 (x) C^2:  R(w) = w*1 + P.
inline Matrix<Poly> yang_r(const Poly& w) {
  TablePtr t = w.tab ? w.tab : rational_table();
  Poly one = Poly::constant(t, ExactScalar(1));
  Matrix<Poly> p = braid_permutation(2, 2, one);
  p.row_factors = {2, 2};
  Matrix<Poly> r = Matrix<Poly>::identity(4, one).scaled(w) + p;
  r.row_factors = {2, 2};
  r.col_factors = {2, 2};
  return r;
}

// ---------------------------------------------------------------------------
// Reduction of the general R-operator to finite-dimensional subspaces.
// ---------------------------------------------------------------------------

// The raw sandwich operator F(u, l; z, z1, x) with n derivatives: the image of
// the degree-n generating function of the first space under the R-operator,
// with the second space still infinite-dimensional (formal weight l).
inline DiffOp reduce_verma_raw(int n) {
  TablePtr t = rational_table();
  std::vector<LinBase> bases = {
      {-rsym("x"), rconst(1)},   // z - x
      {rsym("z1"), rconst(-1)},  // z1 - z
  };
  mpq_class n2(n, 2);
  AffineExp pre0(n2);
  pre0.lin["u"] = -1;
  pre0.lin["l"] = 1;
  AffineExp pre1(n2 + 1);
  pre1.lin["u"] = 1;
  pre1.lin["l"] = 1;
  AffineExp suf0(n2);
  suf0.lin["u"] = 1;
  suf0.lin["l"] = -1;
  AffineExp suf1(n2 - 1);
  suf1.lin["u"] = -1;
  suf1.lin["l"] = -1;
  return power_sandwich_1d(t, kHolVar, bases, {pre0, pre1}, n, {suf0, suf1});
}

// R-operator with a spin-n/2 finite first space and a lowest-weight (formal
// weight l) second space: an (n+1) x (n+1) matrix of differential operators
// in z. First-space basis: z1^r <-> row r; columns likewise.
inline Matrix<DiffOp> reduce_verma(int n) {
  DiffOp raw = reduce_verma_raw(n);
  Matrix<DiffOp> m(n + 1, n + 1);
  for (auto& [ord, p] : raw.terms) {
    for (int a = 0; a <= n; ++a) {
      Poly pa = p.coeff_of("x", n - a);
      if (pa.is_zero()) continue;
      ExactScalar fac = ExactScalar((n - a) % 2 ? -1 : 1) / binomial(n, a);
      for (int r = 0; r <= n; ++r) {
        Poly q = pa.coeff_of("z1", r) * fac;
        if (!q.is_zero()) m(r, a).add_term(ord.first, ord.second, q);
      }
    }
  }
  return m;
}

namespace detail {
// Sandwich for one chirality of the doubly finite reduction: first space
// label n (z1/x variables), second space label m (z/y variables).
inline DiffOp reduce_finite_raw(int n, int m, bool barred) {
  TablePtr t = rational_table();
  const char* var = barred ? kBarVar : kHolVar;
  auto nm = [&](const char* base) { return std::string(base) + (barred ? "b" : ""); };
  std::vector<LinBase> bases = {
      {-Poly::symbol(t, nm("x")), rconst(1)},   // z - x
      {Poly::symbol(t, nm("z1")), rconst(-1)},  // z1 - z
      {-Poly::symbol(t, nm("y")), rconst(1)},   // z - y
  };
  mpq_class n2(n, 2), m2(m, 2);
  AffineExp pre0(n2 + m2);
  pre0.lin["u"] = -1;
  AffineExp pre1(n2 + m2 + 1);
  pre1.lin["u"] = 1;
  AffineExp pre2(0);
  AffineExp suf0(n2 - m2);
  suf0.lin["u"] = 1;
  AffineExp suf1(n2 - m2 - 1);
  suf1.lin["u"] = -1;
  AffineExp suf2{mpq_class(m)};
  return power_sandwich_1d(t, var, bases, {pre0, pre1, pre2}, n, {suf0, suf1, suf2});
}
}  // namespace detail

// R-operator between two finite-dimensional SL(2,C) spaces with discrete
// labels (n, nb) and (m, mb). Rows/columns are indexed first-space major:
//   ((a1*(nb+1)+a1b)*(m+1)+a2)*(mb+1)+a2b,
// with a1 the z1-degree, a2 the z-degree. Entries are polynomials in u.
inline Matrix<Poly> reduce_sl2c(int n, int nb, int m, int mb) {
  DiffOp hol = detail::reduce_finite_raw(n, m, false);
  DiffOp bar = detail::reduce_finite_raw(nb, mb, true);
  DiffOp prod = hol * bar;
  auto it = prod.terms.find({0, 0});
  Poly f = (it == prod.terms.end()) ? Poly() : it->second;
  int dim = (n + 1) * (nb + 1) * (m + 1) * (mb + 1);
  Matrix<Poly> mat(dim, dim);
  mat.row_factors = {(n + 1) * (nb + 1), (m + 1) * (mb + 1)};
  mat.col_factors = mat.row_factors;
  if (f.is_zero()) return mat;
  TablePtr t = rational_table();
  int iz = t->index("z"), izb = t->index("zb"), iz1 = t->index("z1"), iz1b = t->index("z1b");
  int ix = t->index("x"), ixb = t->index("xb"), iy = t->index("y"), iyb = t->index("yb");
  auto colfac = [](int total, int a) {
    return ExactScalar((total - a) % 2 ? -1 : 1) / binomial(total, a);
  };
  for (auto& [e, c] : f.terms) {
    int r1 = e[iz1], r1b = e[iz1b], r2 = e[iz], r2b = e[izb];
    int a1 = n - e[ix], a1b = nb - e[ixb], a2 = m - e[iy], a2b = mb - e[iyb];
    if (a1 < 0 || a1b < 0 || a2 < 0 || a2b < 0)
      throw std::domain_error("reduce_sl2c: generating parameter degree too high");
    int row = ((r1 * (nb + 1) + r1b) * (m + 1) + r2) * (mb + 1) + r2b;
    int col = ((a1 * (nb + 1) + a1b) * (m + 1) + a2) * (mb + 1) + a2b;
    ExactScalar fac = colfac(n, a1) * colfac(nb, a1b) * colfac(m, a2) * colfac(mb, a2b);
    Expo e2(t->size(), 0);
    e2[t->index("u")] = e[t->index("u")];
    Poly mono(t);
    mono.terms.emplace(std::move(e2), c * fac);
    mat(row, col) += mono;
  }
  return mat;
}

// ---------------------------------------------------------------------------
// Fusion.
// ---------------------------------------------------------------------------

// Yang R-matrix symbol in the fusion variables: a 2x2 matrix over polynomials
// in la1, la2, mu1, mu2:
//   [ (w+1) la1 mu1 + w la2 mu2 ,        la2 mu1          ]
//   [        la1 mu2            , w la1 mu1 + (w+1) la2 mu2 ].
inline Matrix<Poly> yang_symbol(const Poly& w) {
  Poly l1 = rsym("la1"), l2 = rsym("la2"), m1 = rsym("mu1"), m2 = rsym("mu2");
  Poly one = rconst(1);
  Matrix<Poly> r(2, 2);
  r(0, 0) = (w + one) * l1 * m1 + w * l2 * m2;
  r(0, 1) = l2 * m1;
  r(1, 0) = l1 * m2;
  r(1, 1) = w * l1 * m1 + (w + one) * l2 * m2;
  return r;
}

// Fused Yang R-matrix on C^2 (x) C^{n+1} via the symbol route: multiply n
// symbol matrices at spectral parameters u, u-1, ..., u-n+1 and read the
// result off in the symmetric bases la1^r la2^{n-r} / mu1^k mu2^{n-k}.
inline Matrix<Poly> fuse_yang_symbol(int n) {
  Poly u = rsym("u");
  Matrix<Poly> t = yang_symbol(u);
  for (int k = 1; k < n; ++k) t = t * yang_symbol(u - rconst(k));
  int d = n + 1;
  Matrix<Poly> m(2 * d, 2 * d);
  m.row_factors = {2, d};
  m.col_factors = {2, d};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r <= n; ++r)
        for (int k = 0; k <= n; ++k) {
          Poly c = t(i, j)
                       .coeff_of("la1", r)
                       .coeff_of("la2", n - r)
                       .coeff_of("mu1", k)
                       .coeff_of("mu2", n - k);
          ExactScalar fac = ExactScalar((r + k) % 2 ? -1 : 1) * factorial(k) *
                            factorial(n - k) / factorial(n);
          m(i * d + r, j * d + k) = c * fac;
        }
  return m;
}

// Fused Yang R-matrix via the independent tensor route: multiply elementary
// R-matrices R_{k,aux}(u-k) on (C^2)^{(x)n} (x) C^2_aux, check invariance of
// the symmetric subspace, and restrict using the dictionary z^k <-> the
// normalized symmetric tensor with k lowered legs (basis e1 = -z, e2 = 1).
inline Matrix<Poly> fuse_yang(int n) {
  TablePtr t = rational_table();
  Poly u = rsym("u");
  Poly one = rconst(1);
  std::vector<int> dims(n + 1, 2);  // n quantum legs then the auxiliary leg
  int dim = 1 << (n + 1);
  Matrix<Poly> f = Matrix<Poly>::identity(dim, one);
  for (int k = n - 1; k >= 0; --k)
    f = f * embed_pair(yang_r(u - rconst(k)), k, n, dims);
  // Invariance of (symmetric) (x) aux:
  Matrix<Poly> s =
      kronecker(convert_scalar_matrix<Poly>(symmetric_projector(n, 2), t),
                Matrix<Poly>::identity(2, one));
  if (!((s * f * s - f * s).is_zero()))
    throw std::domain_error("fuse_yang: product does not preserve the symmetric subspace");
  int d = n + 1;
  Matrix<Poly> m(2 * d, 2 * d);
  m.row_factors = {2, d};
  m.col_factors = {2, d};
  // words: leg bits, bit 0 <-> e1 = -z, bit 1 <-> e2 = 1.
  auto zeros = [&](int w) {
    int c = 0;
    for (int k = 0; k < n; ++k)
      if (!((w >> k) & 1)) ++c;
    return c;
  };
  for (int beta = 0; beta < 2; ++beta)
    for (int k = 0; k <= n; ++k) {
      ExactScalar cf = ExactScalar(k % 2 ? -1 : 1) / binomial(n, k);
      for (int w = 0; w < (1 << n); ++w) {
        if (zeros(w) != k) continue;
        int col = w * 2 + beta;
        for (int alpha = 0; alpha < 2; ++alpha)
          for (int v = 0; v < (1 << n); ++v) {
            const Poly& entry = f(v * 2 + alpha, col);
            if (entry.is_zero()) continue;
            int r = zeros(v);
            ExactScalar rf = ExactScalar(r % 2 ? -1 : 1);
            m(alpha * d + r, beta * d + k) += entry * (cf * rf);
          }
      }
    }
  return m;
}

// ---------------------------------------------------------------------------
// The Lambda operator and its string.
// ---------------------------------------------------------------------------

// Lambda(w) = la_i L(w)^j_i mu_j, the full contraction of the Lax operator
// with a pair of auxiliary spinors. Expanded it reads
//   -(la1+la2 z)(mu2-mu1 z) d + (w+l) la2 (mu2-mu1 z) + (w-l) mu1 (la1+la2 z).
inline DiffOp lambda_op(const Poly& w, const Poly& ell) {
  Matrix<DiffOp> lax = lax_verma(w, ell);
  Poly la[2] = {rsym("la1"), rsym("la2")};
  Poly mu[2] = {rsym("mu1"), rsym("mu2")};
  DiffOp r(rational_table());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r += lax(i, j).scaled_poly(la[i] * mu[j]);
  return r;
}

// Lambda(u) Lambda(u-1) ... Lambda(u-n+1) with formal weight l.
inline DiffOp lambda_string(int n) {
  Poly u = rsym("u"), l = rsym("l");
  DiffOp s = DiffOp::identity(rational_table());
  for (int k = 0; k < n; ++k) s = s * lambda_op(u - rconst(k), l);
  return s;
}

// Closed form of the same string:
//   (-1)^n (la1+la2 z)^{u+l+1} (mu2-mu1 z)^{-u+l+n} d^n
//          (la1+la2 z)^{-u-l+n-1} (mu2-mu1 z)^{u-l}.
inline DiffOp lambda_string_closed(int n) {
  TablePtr t = rational_table();
  std::vector<LinBase> bases = {
      {rsym("la1"), rsym("la2")},   // la1 + la2 z
      {rsym("mu2"), -rsym("mu1")},  // mu2 - mu1 z
  };
  AffineExp pre0(1);
  pre0.lin["u"] = 1;
  pre0.lin["l"] = 1;
  AffineExp pre1{mpq_class(n)};
  pre1.lin["u"] = -1;
  pre1.lin["l"] = 1;
  AffineExp suf0{mpq_class(n - 1)};
  suf0.lin["u"] = -1;
  suf0.lin["l"] = -1;
  AffineExp suf1(0);
  suf1.lin["u"] = 1;
  suf1.lin["l"] = -1;
  DiffOp s = power_sandwich_1d(t, kHolVar, bases, {pre0, pre1}, n, {suf0, suf1});
  return (n % 2) ? -s : s;
}

// Contract the mu-dependence of the fused string against the degree-n
// generating function of the first space: mu1^k mu2^{n-k} |-> n! x^{n-k},
// la1 |-> -z1, la2 |-> 1. The result is directly comparable (projectively,
// after the spectral shift u -> u + n/2) with reduce_verma_raw(n).
inline DiffOp lambda_string_paired(int n) {
  TablePtr t = rational_table();
  DiffOp s = lambda_string(n);
  std::map<std::string, Poly> repl = {{"la1", -rsym("z1")}, {"la2", rconst(1)}};
  DiffOp out(t);
  Poly x = rsym("x");
  ExactScalar nf = factorial(n);
  for (auto& [ord, p] : s.terms) {
    for (int k = 0; k <= n; ++k) {
      Poly c = p.coeff_of("mu1", k).coeff_of("mu2", n - k);
      if (c.is_zero()) continue;
      out.add_term(ord.first, ord.second, c.subst(repl, t) * x.pow(n - k) * nf);
    }
  }
  return out;
}

}  // namespace yb
