#pragma once

// Model builders for the modular-double sector. Everything here is gamma-free:
// products of D-functions whose parameters sum to even lattice points are
// expanded through the first-order difference equations into finite
// exponential sums, so reductions, Lax operators, star-triangle and fusion
// all live in the exact MExpSum / ShiftOp algebra with numeric coefficients.

#include <vector>

#include "yb/expsum.hpp"
#include "yb/matrix.hpp"

namespace yb {

// D_{n w + m w'}(x_{vx} - x_{vy} + offset) as a finite exponential sum
// (pass vy = -1 for a single-variable argument).
inline MExpSum dlattice_expsum(const Quasiperiods& p, int n, int m, int vx, int vy,
                               cplx offset = 0.0) {
  auto var_pow = [&](int j, int k, cplx phase_freq) {
    MExpSum s = MExpSum::mono(p, vx, j, k);
    if (vy >= 0) s = s * MExpSum::mono(p, vy, -j, -k);
    return s.scaled(std::exp(kI * kPi * offset * phase_freq));
  };
  MExpSum out = MExpSum::constant(p, 1.0);
  double sm = (m % 2 == 0) ? 1.0 : -1.0;
  double sn = (n % 2 == 0) ? 1.0 : -1.0;
  auto qt_pow = [&](double e) { return std::exp(kI * kPi * (p.w / p.wp) * e); };
  auto q_pow = [&](double e) { return std::exp(kI * kPi * (p.wp / p.w) * e); };
  for (int k = 0; k < n; ++k) {
    MExpSum f = var_pow(0, 1, 1.0 / (2.0 * p.wp)).scaled(qt_pow((n - 1) / 2.0 - k)) +
                var_pow(0, -1, -1.0 / (2.0 * p.wp)).scaled(sm * qt_pow(-(n - 1) / 2.0 + k));
    out = out * f;
  }
  for (int l = 0; l < m; ++l) {
    MExpSum f = var_pow(1, 0, 1.0 / (2.0 * p.w)).scaled(q_pow((m - 1) / 2.0 - l)) +
                var_pow(-1, 0, -1.0 / (2.0 * p.w)).scaled(sn * q_pow(-(m - 1) / 2.0 + l));
    out = out * f;
  }
  return out;
}

// D_{n w + m w'}(p-hat) as a finite-difference operator in x_0.
inline ShiftOp shift_dop(const Quasiperiods& p, int n, int m) {
  ShiftOp out = ShiftOp::identity(p);
  double sm = (m % 2 == 0) ? 1.0 : -1.0;
  double sn = (n % 2 == 0) ? 1.0 : -1.0;
  auto qt_pow = [&](double e) { return std::exp(kI * kPi * (p.w / p.wp) * e); };
  auto q_pow = [&](double e) { return std::exp(kI * kPi * (p.wp / p.w) * e); };
  for (int k = 0; k < n; ++k)
    out = out * (ShiftOp::shift(p, -1, 0, qt_pow((n - 1) / 2.0 - k)) +
                 ShiftOp::shift(p, 1, 0, sm * qt_pow(-(n - 1) / 2.0 + k)));
  for (int l = 0; l < m; ++l)
    out = out * (ShiftOp::shift(p, 0, -1, q_pow((m - 1) / 2.0 - l)) +
                 ShiftOp::shift(p, 0, 1, sn * q_pow(-(m - 1) / 2.0 + l)));
  return out;
}

namespace detail {

// gamma(y + 2N w + 2M w') / gamma(y) expanded as an exponential sum, where
// y = y0 + sum_t sign_t * x_{var_t}. Requires N, M >= 0.
inline MExpSum gamma_ratio_expsum(const Quasiperiods& p, cplx y0,
                                  const std::vector<std::pair<int, int>>& terms, int N,
                                  int M) {
  if (N < 0 || M < 0)
    throw std::domain_error("gamma_ratio_expsum: negative ladder direction");
  MExpSum out = MExpSum::constant(p, 1.0);
  cplx acc = 0.0;
  auto xfactor = [&](bool tilde) {
    // exp(-i pi y / w) (or / w') restricted to the variable part.
    MExpSum s = MExpSum::constant(p, 1.0);
    for (auto& [v, sg] : terms)
      s = s * (tilde ? MExpSum::mono(p, v, 0, -2 * sg) : MExpSum::mono(p, v, -2 * sg, 0));
    return s;
  };
  for (int j = 0; j < M; ++j) {
    cplx c0 = std::exp(-kI * kPi * (y0 + acc + p.wp) / p.w);
    out = out * (MExpSum::constant(p, 1.0) + xfactor(false).scaled(c0));
    acc += 2.0 * p.wp;
  }
  for (int j = 0; j < N; ++j) {
    cplx c0 = std::exp(-kI * kPi * (y0 + acc + p.w) / p.wp);
    out = out * (MExpSum::constant(p, 1.0) + xfactor(true).scaled(c0));
    acc += 2.0 * p.w;
  }
  return out;
}

// D_A(w) * D_C(w - delta) for w = x_{vi} - x_{vj}, delta = a w + b w', where
// A + C is the lattice point n0 w + m0 w' with n0 + a, m0 + b even.
inline MExpSum dpair_expsum(const Quasiperiods& p, cplx A, cplx C, int a, int b, int vi,
                            int vj) {
  auto [n0, m0] = lattice_decompose(p, A + C);
  if ((n0 + a) % 2 || (m0 + b) % 2 || n0 - a < -1e9)
    throw std::domain_error("dpair_expsum: parity mismatch");
  if (n0 + a < 0 || m0 + b < 0 || n0 - a < 0 || m0 - b < 0)
    throw std::domain_error("dpair_expsum: ladder would run negative");
  cplx dval = static_cast<double>(a) * p.w + static_cast<double>(b) * p.wp;
  // e^{-2 pi i (A + C) w} = Xt_w^{n0} X_w^{m0}; the remaining constant phase:
  MExpSum pref = MExpSum::mono(p, vi, m0, n0) * MExpSum::mono(p, vj, -m0, -n0);
  pref = pref.scaled(std::exp(2.0 * kPi * kI * C * dval));
  std::vector<std::pair<int, int>> terms{{vi, 1}, {vj, -1}};
  MExpSum g1 = gamma_ratio_expsum(p, -dval - C, terms, (n0 + a) / 2, (m0 + b) / 2);
  MExpSum g2 = gamma_ratio_expsum(p, -A, terms, (n0 - a) / 2, (m0 - b) / 2);
  return pref * g1 * g2;
}

struct RepBasis {
  int n, m;
  int dim() const { return (n + 1) * (m + 1); }
  // (j, k) = (m - 2l, n - 2kk) -> index kk * (m + 1) + l, or -1 if outside.
  int index(int j, int k) const {
    int l2 = m - j, k2 = n - k;
    if (l2 < 0 || k2 < 0 || l2 % 2 || k2 % 2) return -1;
    int l = l2 / 2, kk = k2 / 2;
    if (l > m || kk > n) return -1;
    return kk * (m + 1) + l;
  }
};

// Expansion coefficients of the generating function: D_L(x - y) =
// sum_f c_f * chi_f(x) chi_f(y)^{-1}; returns c indexed by the basis order.
inline std::vector<cplx> gen_coeffs(const Quasiperiods& p, int n, int m) {
  MExpSum g = dlattice_expsum(p, n, m, 0, 1);
  RepBasis rb{n, m};
  std::vector<cplx> c(rb.dim());
  for (auto& [f, v] : g.c) {
    int idx = rb.index(f[0], f[1]);
    if (idx < 0 || f[2] != -f[0] || f[3] != -f[1])
      throw std::runtime_error("gen_coeffs: generating function is not diagonal");
    c[idx] = v;
  }
  return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lax operator of the modular double (2x2 matrix of shift operators in x_0)
// and its modular dual (w <-> w').

struct LaxMod {
  ShiftOp e[2][2];
};

inline LaxMod modular_lax(const Quasiperiods& p, cplx u, cplx s, bool dual = false) {
  // Shifts: K = e^{-i pi p/(2w)} moves x by +w'; the dual K by +w.
  auto T = [&](int dir) {  // dir = +1: the K-shift, -1: inverse
    return dual ? ShiftOp::shift(p, dir, 0) : ShiftOp::shift(p, 0, dir);
  };
  cplx W = dual ? p.wp : p.w;
  cplx eu = std::exp(kI * kPi * u / W), eiu = 1.0 / eu;
  cplx es = std::exp(kI * kPi * (s + p.wpp()) / (2.0 * W)), eis = 1.0 / es;
  MExpSum x2 = dual ? MExpSum::mono(p, 0, 0, 2) : MExpSum::mono(p, 0, 2, 0);
  MExpSum xm2 = dual ? MExpSum::mono(p, 0, 0, -2) : MExpSum::mono(p, 0, -2, 0);
  LaxMod L;
  L.e[0][0] = T(1).scaled(eu) - T(-1).scaled(eiu);
  L.e[1][1] = T(-1).scaled(eu) - T(1).scaled(eiu);
  L.e[0][1] = ShiftOp::mult(xm2) * (T(-1).scaled(es) - T(1).scaled(eis));
  L.e[1][0] = ShiftOp::mult(x2) * (T(1).scaled(es) - T(-1).scaled(eis));
  return L;
}

// The 4x4 trigonometric R-matrix intertwining two Lax operators.
inline Matrix<cplx> r4_trig(const Quasiperiods& p, cplx u) {
  cplx arg = kPi / p.w * (u + p.wp / 2.0);
  cplx al = std::sin(arg) / (2.0 * std::sin(kPi * p.wp / (2.0 * p.w)));
  cplx be = std::cos(arg) / (2.0 * std::cos(kPi * p.wp / (2.0 * p.w)));
  Matrix<cplx> r(4, 4);
  r.row_factors = r.col_factors = {2, 2};
  r(0, 0) = r(3, 3) = al + be;
  r(1, 1) = r(2, 2) = al - be;
  r(1, 2) = r(2, 1) = 1.0;
  return r;
}

// ---------------------------------------------------------------------------
// Reduction of the general R-operator.

// Core of the reduced operator (the projective normalization is dropped):
//   sum_delta g_delta D_A(x_{12}) D_C(x_{12}-delta) D_B(x_{23}) D_E(x_{23}+delta) T_delta
// acting on x_2 = x_0; x_1 = x_1(a-side), x_3 = x_2(y-side) in MExpSum slots.
namespace detail {
inline ShiftOp reduce_core(const Quasiperiods& p, cplx u, cplx s1, cplx s2, int n1,
                           int m1) {
  cplx A = u - s1 / 2.0 - s2 / 2.0;
  cplx B = -u - s1 / 2.0 - s2 / 2.0 - p.wpp();
  cplx C = -u - s1 / 2.0 + s2 / 2.0 - p.wpp();
  cplx E = u - s1 / 2.0 + s2 / 2.0;
  ShiftOp dop = shift_dop(p, n1, m1);
  ShiftOp out(p);
  for (auto& [d, g] : dop.t) {
    cplx gv = g.c.empty() ? cplx{} : g.c.begin()->second;
    MExpSum coeff = dpair_expsum(p, A, C, d.first, d.second, 1, 0) *
                    dpair_expsum(p, B, E, -d.first, -d.second, 0, 2);
    ShiftOp term(p);
    term.t[d] = coeff.scaled(gv);
    out += term;
  }
  return out;
}
}  // namespace detail

// Reduction with the first space finite-dimensional (spin s1 at the lattice
// point (n, m)) and the second generic: a dim x dim matrix of
// finite-difference operators in the quantum variable x_0.
struct ReducedOneSpace {
  int dim = 0;
  std::vector<ShiftOp> entries;  // row-major
  double closure = 0;            // leakage outside the representation space
  ShiftOp& operator()(int i, int j) { return entries[i * dim + j]; }
  const ShiftOp& operator()(int i, int j) const { return entries[i * dim + j]; }
};

inline ReducedOneSpace reduce_modular(const Quasiperiods& p, cplx u, int n, int m,
                                      cplx s) {
  cplx s0 = -p.wpp() - static_cast<double>(n) * p.w - static_cast<double>(m) * p.wp;
  ShiftOp core = detail::reduce_core(p, u, s0, s, n, m);
  detail::RepBasis rb{n, m};
  auto cg = detail::gen_coeffs(p, n, m);
  ReducedOneSpace out;
  out.dim = rb.dim();
  out.entries.assign(static_cast<size_t>(out.dim) * out.dim, ShiftOp(p));
  for (auto& [d, f] : core.t) {
    for (auto& [key, v] : f.c) {
      int row = rb.index(key[2], key[3]);     // x_1 frequency
      int col = rb.index(-key[4], -key[5]);   // dual x_3 frequency
      if (row < 0 || col < 0) {
        out.closure = std::max(out.closure, std::abs(v));
        continue;
      }
      FreqKey k0{};
      k0[0] = key[0];
      k0[1] = key[1];
      out(row, col).t[d].p = p;
      out(row, col).t[d].c[k0] += v / cg[col];
    }
  }
  for (auto& e : out.entries) e.prune(1e-14);
  return out;
}

// Reduction with both spaces finite-dimensional: a plain numeric matrix on
// C^{d1} (x) C^{d2}, acting as the braided R (it maps the tensor basis
// e_{row1} (x) e_{row2} with the first slot read from x_1, second from x_2).
struct ReducedTwoSpace {
  Matrix<cplx> mat;
  double closure = 0;
};

inline ReducedTwoSpace reduce_modular_finite(const Quasiperiods& p, cplx u, int n1,
                                             int m1, int n2, int m2) {
  cplx s1 = -p.wpp() - static_cast<double>(n1) * p.w - static_cast<double>(m1) * p.wp;
  cplx s2 = -p.wpp() - static_cast<double>(n2) * p.w - static_cast<double>(m2) * p.wp;
  cplx A = u - s1 / 2.0 - s2 / 2.0;
  cplx B = -u - s1 / 2.0 - s2 / 2.0 - p.wpp();
  cplx C = -u - s1 / 2.0 + s2 / 2.0 - p.wpp();
  cplx E = u - s1 / 2.0 + s2 / 2.0;
  // Variables: 0 = x_2, 1 = x_1, 2 = x_3 (dual of space 1), 3 = x_4 (dual of 2).
  ShiftOp dop = shift_dop(p, n1, m1);
  MExpSum total(p);
  for (auto& [d, g] : dop.t) {
    cplx gv = g.c.empty() ? cplx{} : g.c.begin()->second;
    cplx dval = static_cast<double>(d.first) * p.w + static_cast<double>(d.second) * p.wp;
    MExpSum term = detail::dpair_expsum(p, A, C, d.first, d.second, 1, 0) *
                   detail::dpair_expsum(p, B, E, -d.first, -d.second, 0, 2) *
                   dlattice_expsum(p, n2, m2, 0, 3, dval);
    total += term.scaled(gv);
  }
  detail::RepBasis r1{n1, m1}, r2{n2, m2};
  auto c1 = detail::gen_coeffs(p, n1, m1);
  auto c2 = detail::gen_coeffs(p, n2, m2);
  ReducedTwoSpace out;
  out.mat = Matrix<cplx>(r1.dim() * r2.dim(), r1.dim() * r2.dim());
  out.mat.row_factors = out.mat.col_factors = {r1.dim(), r2.dim()};
  for (auto& [key, v] : total.c) {
    int f1 = r1.index(key[2], key[3]);
    int f2 = r2.index(key[0], key[1]);
    int g1 = r1.index(-key[4], -key[5]);
    int g2 = r2.index(-key[6], -key[7]);
    if (f1 < 0 || f2 < 0 || g1 < 0 || g2 < 0) {
      out.closure = std::max(out.closure, std::abs(v));
      continue;
    }
    out.mat(f1 * r2.dim() + f2, g1 * r2.dim() + g2) += v / (c1[g1] * c2[g2]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Star-triangle in operator form, on the nonnegative lattice:
// returns the largest coefficient deviation between the two sides.
inline double star_triangle_shift(const Quasiperiods& p, int na, int ma, int nb,
                                  int mb) {
  ShiftOp Da = shift_dop(p, na, ma), Db = shift_dop(p, nb, mb);
  ShiftOp Dab = shift_dop(p, na + nb, ma + mb);
  ShiftOp Xa = ShiftOp::mult(dlattice_expsum(p, na, ma, 0, -1));
  ShiftOp Xb = ShiftOp::mult(dlattice_expsum(p, nb, mb, 0, -1));
  ShiftOp Xab = ShiftOp::mult(dlattice_expsum(p, na + nb, ma + mb, 0, -1));
  return shiftop_distance(Da * Xab * Db, Xb * Dab * Xa);
}

// ---------------------------------------------------------------------------
// Fusion: strings of Lax symbols contracted with auxiliary spinors.

// A symbol is a polynomial in the spinors mu, mu~ whose coefficients are
// finite-difference operators: degrees (mu1, mu2, mu~1, mu~2).
using MuKey = std::array<int, 4>;
using SymbolOp = std::map<MuKey, ShiftOp>;

inline SymbolOp symbol_mul(const SymbolOp& a, const SymbolOp& b) {
  SymbolOp r;
  for (auto& [ka, sa] : a)
    for (auto& [kb, sb] : b) {
      MuKey k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]};
      ShiftOp prod = sa * sb;
      auto it = r.find(k);
      if (it == r.end())
        r.emplace(k, std::move(prod));
      else
        it->second += prod;
    }
  return r;
}

// Lambda(u) = lambda_i L(u|s)^j_i mu_j with lambda = lambda(a) carried by the
// variable slot 1 (dual = the tilded symbol).
inline SymbolOp lambda_symbol(const Quasiperiods& p, cplx u, cplx s, bool dual) {
  LaxMod L = modular_lax(p, u, s, dual);
  MExpSum lam[2] = {dual ? MExpSum::mono(p, 1, 0, 1) : MExpSum::mono(p, 1, 1, 0),
                    (dual ? MExpSum::mono(p, 1, 0, -1) : MExpSum::mono(p, 1, -1, 0))
                        .scaled(-1.0)};
  SymbolOp out;
  for (int j = 0; j < 2; ++j) {
    MuKey k{};
    k[(dual ? 2 : 0) + j] = 1;
    ShiftOp sum(p);
    for (int i = 0; i < 2; ++i) sum += ShiftOp::mult(lam[i]) * L.e[i][j];
    out.emplace(k, std::move(sum));
  }
  return out;
}

// The fused R-operator for the representation point (n, m): the string
// Lambda(u) ... Lambda(u-(m-1)w') Lambda~(u-(m-1)w'-w) ... Lambda~(...-n w),
// paired against the generating function D_{n w + m w'}(b - y) carried by the
// spinor polynomial (variable slot 2 holds y).
inline ShiftOp fuse_modular(const Quasiperiods& p, cplx u, cplx s, int n, int m) {
  SymbolOp prod{{MuKey{}, ShiftOp::identity(p)}};
  for (int j = 0; j < m; ++j)
    prod = symbol_mul(prod, lambda_symbol(p, u - static_cast<double>(j) * p.wp, s, false));
  // The tilded chain continues stepping by w from the last argument; when the
  // untilded chain is empty it simply starts at u.
  cplx head = (m >= 1) ? u - static_cast<double>(m - 1) * p.wp - p.w : u;
  for (int j = 0; j < n; ++j)
    prod = symbol_mul(prod, lambda_symbol(p, head - static_cast<double>(j) * p.w, s, true));
  // Psi(mu, mu~) = D_{n w + m w'}(b - y) in spinor form.
  std::map<MuKey, MExpSum> psi{{MuKey{}, MExpSum::constant(p, 1.0)}};
  auto qt_pow = [&](double e) { return std::exp(kI * kPi * (p.w / p.wp) * e); };
  auto q_pow = [&](double e) { return std::exp(kI * kPi * (p.wp / p.w) * e); };
  double sm = (m % 2 == 0) ? 1.0 : -1.0;
  double sn = (n % 2 == 0) ? 1.0 : -1.0;
  auto psi_mul = [&](int slot_base, const MExpSum& c1, const MExpSum& c2) {
    std::map<MuKey, MExpSum> next;
    for (auto& [k, v] : psi) {
      MuKey ka = k, kb = k;
      ka[slot_base] += 1;
      kb[slot_base + 1] += 1;
      next[ka] += v * c1;
      next[kb] += v * c2;
    }
    psi = std::move(next);
  };
  for (int k = 0; k < n; ++k)
    psi_mul(2, MExpSum::mono(p, 2, 0, -1, qt_pow((n - 1) / 2.0 - k)),
            MExpSum::mono(p, 2, 0, 1, -sm * qt_pow(-(n - 1) / 2.0 + k)));
  for (int l = 0; l < m; ++l)
    psi_mul(0, MExpSum::mono(p, 2, -1, 0, q_pow((m - 1) / 2.0 - l)),
            MExpSum::mono(p, 2, 1, 0, -sn * q_pow(-(m - 1) / 2.0 + l)));
  // Differentiation pairing: mu^alpha against psi_alpha picks alpha!.
  auto fact = [](int a) { double f = 1; for (int i = 2; i <= a; ++i) f *= i; return f; };
  ShiftOp out(p);
  for (auto& [k, S] : prod) {
    auto it = psi.find(k);
    if (it == psi.end()) continue;
    double scale = fact(k[0]) * fact(k[1]) * fact(k[2]) * fact(k[3]);
    out += (S * ShiftOp::mult(it->second)).scaled(scale);
  }
  return out.prune(1e-13);
}

// Compare the fusion route with the reduction route: the fused operator at
// the shifted spectral point must equal i^{n+m} n! m! times the reduced core.
inline double fusion_reduction_agree(const Quasiperiods& p, cplx u, cplx s, int n,
                                     int m) {
  cplx u_f = u + static_cast<double>(n) * p.w / 2.0 + static_cast<double>(m) * p.wp / 2.0;
  ShiftOp fus = fuse_modular(p, u_f, s, n, m);
  cplx s0 = -p.wpp() - static_cast<double>(n) * p.w - static_cast<double>(m) * p.wp;
  ShiftOp red = detail::reduce_core(p, u, s0, s, n, m);
  auto fact = [](int a) { double f = 1; for (int i = 2; i <= a; ++i) f *= i; return f; };
  cplx scale = std::pow(-kI, n + m) * fact(n) * fact(m);
  double sc = std::max(fus.max_abs(), 1e-300);
  return shiftop_distance(fus, red.scaled(scale)) / sc;
}

}  // namespace yb
