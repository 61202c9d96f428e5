#pragma once

// Trigonometric (U_q(sl2)) building blocks over an exact Laurent ring.
//
// Conventions: the ring generator "qh" is a square root of the deformation
// parameter (q = qh^2), so that half-integer shifts of spins and spectral
// parameters stay inside the Laurent ring. "U" and "V" are exponentials of
// the spectral parameters, U = q^u, V = q^v. A q-number [u+m]_q appears in
// *cleared* form, i.e. multiplied by (q - q^-1):
//   (q - q^-1) [u+m]_q = U qh^{2m} - U^{-1} qh^{-2m}.
// Every matrix in this header carries a definite clearing count, stated in
// its comment, so products can be compared exactly.

#include <map>
#include <string>
#include <vector>

#include "yb/matrix.hpp"
#include "yb/poly.hpp"

namespace yb {

inline TablePtr trig_table() {
  static TablePtr t = make_table({"qh", "U", "V", "z", "z1", "z2", "la1", "la2", "mu1", "mu2"},
                                 {true, true, true, true, false, false, false, false, false,
                                  false});
  return t;
}

inline Poly tsym(const std::string& name, int power = 1) {
  return Poly::symbol(trig_table(), name, power);
}
inline Poly tconst(long n) { return Poly::constant(trig_table(), ExactScalar(n)); }

// Inverse of a one-term monomial in invertible symbols.
inline Poly mono_inverse(const Poly& p) {
  if (p.terms.size() != 1) throw std::invalid_argument("mono_inverse: not a monomial");
  Poly r(p.tab);
  Expo e = p.terms.begin()->first;
  for (auto& x : e) x = -x;
  r.terms.emplace(std::move(e), ExactScalar(1) / p.terms.begin()->second);
  return r;
}

// Cleared q-number (q - q^-1)[u + ts/2]_q for S = q^u: S qh^ts - S^-1 qh^-ts.
inline Poly qnum_cleared(const Poly& s, int ts) {
  Poly qh = tsym("qh");
  return s * tsym("qh", ts) - mono_inverse(s) * tsym("qh", -ts);
}

// Cleared integer q-number (q - q^-1)[k]_q = qh^{2k} - qh^{-2k}.
inline Poly qint_cleared(int k) {
  if (k == 0) return Poly(trig_table());
  return tsym("qh", 2 * k) - tsym("qh", -2 * k);
}

// U_q(sl2) generators on polynomials of degree <= n in z:
//   J- z^k = -[k]_q z^{k-1},  J+ z^k = [k-n]_q z^{k+1},  J3 z^k = (k-n/2) z^k.
// plus_c/minus_c are cleared once; three is a plain rational matrix.
struct TrigGens {
  Matrix<Poly> plus_c, minus_c;
  Matrix<ExactScalar> three;
};

inline TrigGens uq_gens(int n) {
  int d = n + 1;
  TrigGens g{Matrix<Poly>(d, d), Matrix<Poly>(d, d), Matrix<ExactScalar>(d, d)};
  for (int k = 0; k <= n; ++k) {
    if (k > 0) g.minus_c(k - 1, k) = -qint_cleared(k);
    if (k < n) g.plus_c(k + 1, k) = qint_cleared(k - n);
    g.three(k, k) = ExactScalar(2 * k - n, 2);
  }
  return g;
}

// Trigonometric Lax matrix for spin n/2 on C^2 (x) C^{n+1} (auxiliary index
// major), cleared once:
//   [ [u+J3]_q   J-    ]
//   [   J+     [u-J3]_q ]  with U = q^u.
inline Matrix<Poly> trig_lax(int n, const Poly& umono) {
  TrigGens g = uq_gens(n);
  int d = n + 1;
  Matrix<Poly> m(2 * d, 2 * d);
  m.row_factors = {2, d};
  m.col_factors = {2, d};
  for (int k = 0; k <= n; ++k) {
    m(k, k) = qnum_cleared(umono, 2 * k - n);          // [u + k - n/2]_q
    m(d + k, d + k) = qnum_cleared(umono, n - 2 * k);  // [u - k + n/2]_q
  }
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      m(r, d + c) = g.minus_c(r, c);
      m(d + r, c) = g.plus_c(r, c);
    }
  return m;
}

// q-deformed Yang R-matrix on C^2 (x) C^2 with S = q^u, cleared once:
//   diag/offdiag pattern [[u+1],0,0,0; 0,[u],1,0; 0,1,[u],0; 0,0,0,[u+1]].
inline Matrix<Poly> q_yang_r(const Poly& smono) {
  Matrix<Poly> r(4, 4);
  r.row_factors = {2, 2};
  r.col_factors = {2, 2};
  r(0, 0) = qnum_cleared(smono, 2);
  r(3, 3) = qnum_cleared(smono, 2);
  r(1, 1) = qnum_cleared(smono, 0);
  r(2, 2) = qnum_cleared(smono, 0);
  r(1, 2) = qint_cleared(1);
  r(2, 1) = qint_cleared(1);
  return r;
}

// Symbol of the q-Yang R-matrix with S = q^u, cleared once:
//   [ [u+1] la1 mu1 + [u] la2 mu2 ,          la2 mu1          ]
//   [         la1 mu2             , [u] la1 mu1 + [u+1] la2 mu2 ].
inline Matrix<Poly> q_yang_symbol(const Poly& smono) {
  Poly l1 = tsym("la1"), l2 = tsym("la2"), m1 = tsym("mu1"), m2 = tsym("mu2");
  Matrix<Poly> r(2, 2);
  r(0, 0) = qnum_cleared(smono, 2) * l1 * m1 + qnum_cleared(smono, 0) * l2 * m2;
  r(0, 1) = qint_cleared(1) * l2 * m1;
  r(1, 0) = qint_cleared(1) * l1 * m2;
  r(1, 1) = qnum_cleared(smono, 0) * l1 * m1 + qnum_cleared(smono, 2) * l2 * m2;
  return r;
}

// Fused q-Yang R-matrix on C^2 (x) C^{n+1} via the symbol string
// <la|R(u)|mu> ... <la|R(u-n+1)|mu> with U = q^u the top argument; cleared n
// times. Row r / column k carry the monomials la1^r la2^{n-r} / mu1^k
// mu2^{n-k} with the symmetric-basis dictionary weights.
inline Matrix<Poly> fuse_q_yang(int n) {
  Poly u = tsym("U");
  Matrix<Poly> t = q_yang_symbol(u);
  for (int k = 1; k < n; ++k) t = t * q_yang_symbol(u * tsym("qh", -2 * k));
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

// Closed forms for the entries of the fused symbol, cleared once:
//   A(u|a,b) = sum_k C(n,k) [u+1+k-n]_q a^{n-k} b^k,
//   B(a,b)   = sum_k C(n,k) [k]_q a^{k-1} b^{n-k}.
inline Poly afun(int n, const Poly& umono, const Poly& a, const Poly& b) {
  Poly r(trig_table());
  for (int k = 0; k <= n; ++k)
    r += qnum_cleared(umono, 2 * (1 + k - n)) * a.pow(n - k) * b.pow(k) * binomial(n, k);
  return r;
}
inline Poly bfun(int n, const Poly& a, const Poly& b) {
  Poly r(trig_table());
  for (int k = 1; k <= n; ++k)
    r += qint_cleared(k) * a.pow(k - 1) * b.pow(n - k) * binomial(n, k);
  return r;
}

// Cleared normalization r_n(u) = [u]_q [u-1]_q ... [u-n+1]_q (cleared n times).
inline Poly rn_cleared(int n, const Poly& umono) {
  Poly r = Poly::constant(trig_table(), ExactScalar(1));
  for (int k = 0; k < n; ++k) r *= qnum_cleared(umono, -2 * k);
  return r;
}

// ---------------------------------------------------------------------------
// Factorized symbol checks.
// ---------------------------------------------------------------------------

// Scale each monomial by qh^{2*sign*deg}, deg the exponent of var: the action
// of q^{sign * var d_var}.
inline Poly apply_qscaling(const Poly& p, const std::string& var, int sign) {
  if (!p.tab) return p;
  int i = p.tab->index(var);
  Poly r(p.tab);
  for (auto& [e, c] : p.terms) {
    Poly mono(p.tab);
    mono.terms.emplace(e, c);
    r += mono * Poly::symbol(p.tab, "qh", 2 * sign * e[i]);
  }
  return r;
}

// Verifies the factorized form of the spin-1/2 symbol and the two-string
// cancellation of adjacent matrix factors. Exact; returns true iff all hold.
inline bool factorized_symbol_check() {
  TablePtr t = trig_table();
  Poly u = tsym("U"), z = tsym("z"), zinv = tsym("z", -1);
  Poly m1 = tsym("mu1"), m2 = tsym("mu2");
  auto amat = [&](const Poly& s) {  // [[1,1],[z q^{-u-1}, z q^{u+1}]]
    Matrix<Poly> a(2, 2);
    a(0, 0) = a(0, 1) = tconst(1);
    a(1, 0) = z * mono_inverse(s) * tsym("qh", -2);
    a(1, 1) = z * s * tsym("qh", 2);
    return a;
  };
  auto bmat = [&](const Poly& s) {  // [[q^u, -z^-1],[-q^-u, z^-1]]
    Matrix<Poly> b(2, 2);
    b(0, 0) = s;
    b(0, 1) = -zinv;
    b(1, 0) = -mono_inverse(s);
    b(1, 1) = zinv;
    return b;
  };
  // ---- middle cancellation: B(u) A(u-1) = (q-q^-1)[u]_q * 1 ----
  {
    Matrix<Poly> p = bmat(u) * amat(u * tsym("qh", -2));
    Matrix<Poly> expect = Matrix<Poly>::identity(2, qnum_cleared(u, 0));
    if (!(p == expect)) return false;
  }
  // ---- spin 1/2: A(u) q^{+-z1 d1} B(u) (mu2 - mu1 z1) |_{z1=z} ----
  {
    Poly f0 = m2 - m1 * tsym("z1");
    std::map<std::string, Poly> sub1 = {{"z1", z}};
    Matrix<Poly> lhs(2, 2);
    Matrix<Poly> a = amat(u), b = bmat(u);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Poly s(t);
        for (int k = 0; k < 2; ++k)
          s += a(i, k) * apply_qscaling(b(k, j) * f0, "z1", k == 0 ? 1 : -1);
        lhs(i, j) = s.subst(sub1, t);
      }
    // display form, cleared once, times the extra clearing of the 1/(q-q^-1):
    Matrix<Poly> rhs(2, 2);
    Poly fz = m2 - m1 * z;
    auto qop = [&](const Poly& s, int csign, int ts, const Poly& f) {
      // (q-q^-1)[s-argument + csign*(z d) + ts/2]_q applied to f
      Poly r(t);
      for (auto& [e, c] : f.terms) {
        int k = e[t->index("z")];
        Poly mono(t);
        mono.terms.emplace(e, c);
        r += mono * qnum_cleared(s, 2 * csign * k + ts);
      }
      return r;
    };
    rhs(0, 0) = qop(u, 1, 0, fz);                       // [u + z d]_q
    rhs(1, 1) = qop(u, -1, 2, fz);                      // [u + 1 - z d]_q
    Poly one = tconst(1);
    rhs(0, 1) = -zinv * qop(one, 1, 0, fz);             // -(1/z)[z d]_q
    rhs(1, 0) = z * qop(one, 1, -2, fz);                // z [z d - 1]_q
    // Both sides are cleared once: the chain by the omitted 1/(q-q^-1), the
    // display by using cleared q-numbers.
    if (!(lhs == rhs)) return false;
  }
  // ---- two-string collapse ----
  {
    Poly f0 = (m2 - m1 * tsym("z1")) * (m2 - m1 * tsym("z2"));
    Poly u1 = u * tsym("qh", -2);  // q^{u-1}
    std::map<std::string, Poly> subz = {{"z1", z}, {"z2", z}};
    Matrix<Poly> a0 = amat(u), b0 = bmat(u), a1 = amat(u1), b1 = bmat(u1);
    // honest product: A(u) D(z1) B(u) A(u-1) D(z2) B(u-1) f0, then z1=z2=z
    auto apply_chain = [&](int i, int j) {
      // sum over internal indices of A0(i,k) D1_k B0(k,l) A1(l,p) D2_p B1(p,j)
      Poly s(t);
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          for (int p = 0; p < 2; ++p) {
            if (a0(i, k).is_zero() || b0(k, l).is_zero() || a1(l, p).is_zero() ||
                b1(p, j).is_zero())
              continue;
            Poly g = b1(p, j) * f0;
            g = apply_qscaling(g, "z2", p == 0 ? 1 : -1);
            g = a1(l, p) * g;
            g = b0(k, l) * g;
            g = apply_qscaling(g, "z1", k == 0 ? 1 : -1);
            g = a0(i, k) * g;
            s += g;
          }
      return s.subst(subz, t);
    };
    // collapsed form: (q-q^-1)[u]_q A(u) D(z1+z2) B(u-1) f0
    auto collapsed = [&](int i, int j) {
      Poly s(t);
      for (int k = 0; k < 2; ++k) {
        if (a0(i, k).is_zero() || b1(k, j).is_zero()) continue;
        Poly g = b1(k, j) * f0;
        g = apply_qscaling(g, "z1", k == 0 ? 1 : -1);
        g = apply_qscaling(g, "z2", k == 0 ? 1 : -1);
        s += a0(i, k) * g;
      }
      return (s * qnum_cleared(u, 0)).subst(subz, t);
    };
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (!(apply_chain(i, j) == collapsed(i, j))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// q -> 1 degeneration.
// ---------------------------------------------------------------------------

// Exact qh -> 1 limit of p / (qh^2 - qh^-2)^k. Spectral exponentials must
// have been substituted (U -> qh^{2w}, integer w) beforehand. Since
// (qh^2 - qh^-2) has a simple zero at qh = 1 with derivative 4, the limit is
// p^(k)(1) / (k! 4^k), valid iff p has a k-fold zero at qh = 1 (checked;
// throws otherwise). Works for half-integer q-number arguments, where p is
// not Laurent-divisible by the cleared bracket but the limit still exists.
inline Poly q_to_one(const Poly& p, int clearings) {
  TablePtr t = p.tab;
  if (!t) return p;
  int iq = t->index("qh");
  // coefficient of each qh exponent (a Poly in the remaining symbols)
  std::map<long, Poly> coef;
  for (auto& [e, c] : p.terms) {
    Expo e2 = e;
    long k = e2[iq];
    e2[iq] = 0;
    Poly mono(t);
    mono.terms.emplace(std::move(e2), c);
    coef[k] += mono;
  }
  auto deriv_at_one = [&](int j) {
    Poly s(t);
    for (auto& [e, c] : coef) {
      ExactScalar ff(1);
      for (int i = 0; i < j; ++i) ff *= ExactScalar(e - i);
      if (!ff.is_zero()) s += c * ff;
    }
    return s;
  };
  for (int j = 0; j < clearings; ++j)
    if (!deriv_at_one(j).is_zero())
      throw std::domain_error("q_to_one: zero at qh=1 has order below the clearing count");
  ExactScalar denom = factorial(clearings);
  for (int j = 0; j < clearings; ++j) denom *= ExactScalar(4);
  return deriv_at_one(clearings) / denom;
}

}  // namespace yb
