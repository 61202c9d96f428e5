#pragma once

// Exact (up to floating-point coefficient arithmetic) algebra of finite
// exponential sums on the quasiperiod lattice, in up to four variables
//   x_0, ..., x_3,
// together with finite-difference operators shifting the distinguished
// variable x_0 by lattice vectors a*w + b*w'.
//
// A term is indexed by an integer frequency pair (j, k) per variable and
// stands for  prod_v exp( i pi x_v ( j_v / (2w) + k_v / (2w') ) ).

#include <array>
#include <complex>
#include <map>
#include <stdexcept>

#include "yb/modular.hpp"

namespace yb {

inline constexpr int kMExpVars = 4;
using FreqKey = std::array<int, 2 * kMExpVars>;  // [j0, k0, j1, k1, ...]

class MExpSum {
 public:
  Quasiperiods p;
  std::map<FreqKey, cplx> c;

  MExpSum() : p(Quasiperiods::standard()) {}
  explicit MExpSum(Quasiperiods pp) : p(pp) {}

  static MExpSum constant(const Quasiperiods& pp, cplx v) {
    MExpSum s(pp);
    if (v != 0.0) s.c[FreqKey{}] = v;
    return s;
  }
  // coeff * X_var^j * Xt_var^k  with X = e^{i pi x/(2w)}, Xt = e^{i pi x/(2w')}.
  static MExpSum mono(const Quasiperiods& pp, int var, int j, int k, cplx coeff = 1.0) {
    MExpSum s(pp);
    FreqKey f{};
    f[2 * var] = j;
    f[2 * var + 1] = k;
    s.c[f] = coeff;
    return s;
  }

  bool empty() const { return c.empty(); }
  double max_abs() const {
    double m = 0;
    for (auto& [f, v] : c) m = std::max(m, std::abs(v));
    return m;
  }
  MExpSum& prune(double eps) {
    for (auto it = c.begin(); it != c.end();)
      it = (std::abs(it->second) <= eps) ? c.erase(it) : std::next(it);
    return *this;
  }

  MExpSum& operator+=(const MExpSum& o) {
    for (auto& [f, v] : o.c) c[f] += v;
    return *this;
  }
  friend MExpSum operator+(MExpSum a, const MExpSum& b) { return a += b; }
  friend MExpSum operator-(MExpSum a, const MExpSum& b) {
    for (auto& [f, v] : b.c) a.c[f] -= v;
    return a;
  }
  MExpSum scaled(cplx s) const {
    MExpSum r = *this;
    for (auto& [f, v] : r.c) v *= s;
    return r;
  }
  friend MExpSum operator*(const MExpSum& a, const MExpSum& b) {
    MExpSum r(a.p);
    for (auto& [fa, va] : a.c)
      for (auto& [fb, vb] : b.c) {
        FreqKey f;
        for (int i = 0; i < 2 * kMExpVars; ++i) f[i] = fa[i] + fb[i];
        r.c[f] += va * vb;
      }
    return r;
  }

  // Substitute x_var -> x_var + a*w + b*w'.
  MExpSum shifted(int var, int a, int b) const {
    MExpSum r(p);
    cplx d = static_cast<double>(a) * p.w + static_cast<double>(b) * p.wp;
    for (auto& [f, v] : c) {
      cplx freq = static_cast<double>(f[2 * var]) / (2.0 * p.w) +
                  static_cast<double>(f[2 * var + 1]) / (2.0 * p.wp);
      r.c[f] += v * std::exp(kI * kPi * d * freq);
    }
    return r;
  }

  cplx eval(const std::array<cplx, kMExpVars>& x) const {
    cplx s = 0;
    for (auto& [f, v] : c) {
      cplx e = 0;
      for (int var = 0; var < kMExpVars; ++var)
        e += x[var] * (static_cast<double>(f[2 * var]) / (2.0 * p.w) +
                       static_cast<double>(f[2 * var + 1]) / (2.0 * p.wp));
      s += v * std::exp(kI * kPi * e);
    }
    return s;
  }
};

// Largest coefficient deviation between two sums.
inline double expsum_distance(const MExpSum& a, const MExpSum& b) {
  double m = 0;
  for (auto& [f, v] : a.c) {
    auto it = b.c.find(f);
    m = std::max(m, std::abs(v - (it == b.c.end() ? cplx{} : it->second)));
  }
  for (auto& [f, v] : b.c)
    if (!a.c.count(f)) m = std::max(m, std::abs(v));
  return m;
}

// Finite-difference operator sum_delta  coeff_delta(x) * T_delta  acting on
// functions of x_0, with lattice shifts delta = a*w + b*w'.
class ShiftOp {
 public:
  Quasiperiods p;
  std::map<std::pair<int, int>, MExpSum> t;

  ShiftOp() : p(Quasiperiods::standard()) {}
  explicit ShiftOp(Quasiperiods pp) : p(pp) {}

  static ShiftOp identity(const Quasiperiods& pp) {
    ShiftOp s(pp);
    s.t[{0, 0}] = MExpSum::constant(pp, 1.0);
    return s;
  }
  static ShiftOp mult(const MExpSum& f) {
    ShiftOp s(f.p);
    s.t[{0, 0}] = f;
    return s;
  }
  static ShiftOp shift(const Quasiperiods& pp, int a, int b, cplx coeff = 1.0) {
    ShiftOp s(pp);
    s.t[{a, b}] = MExpSum::constant(pp, coeff);
    return s;
  }

  bool empty() const { return t.empty(); }
  double max_abs() const {
    double m = 0;
    for (auto& [d, f] : t) m = std::max(m, f.max_abs());
    return m;
  }
  ShiftOp& prune(double eps) {
    for (auto it = t.begin(); it != t.end();) {
      it->second.prune(eps);
      it = it->second.empty() ? t.erase(it) : std::next(it);
    }
    return *this;
  }

  ShiftOp& operator+=(const ShiftOp& o) {
    for (auto& [d, f] : o.t) {
      auto it = t.find(d);
      if (it == t.end())
        t.emplace(d, f);
      else
        it->second += f;
    }
    return *this;
  }
  friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
  friend ShiftOp operator-(const ShiftOp& a, const ShiftOp& b) {
    return a + b.scaled(-1.0);
  }
  ShiftOp scaled(cplx s) const {
    ShiftOp r = *this;
    for (auto& [d, f] : r.t) f = f.scaled(s);
    return r;
  }
  // Operator composition: (c1 T_d1)(c2 T_d2) = c1 * (c2 shifted by d1) T_{d1+d2}.
  friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
    ShiftOp r(a.p);
    for (auto& [da, fa] : a.t)
      for (auto& [db, fb] : b.t) {
        std::pair<int, int> d{da.first + db.first, da.second + db.second};
        MExpSum term = fa * fb.shifted(0, da.first, da.second);
        auto it = r.t.find(d);
        if (it == r.t.end())
          r.t.emplace(d, std::move(term));
        else
          it->second += term;
      }
    return r;
  }

  MExpSum apply(const MExpSum& f) const {
    MExpSum r(p);
    for (auto& [d, cf] : t) r += cf * f.shifted(0, d.first, d.second);
    return r;
  }

  // Apply to exp(c * x_0) at the point x (other variables as given).
  cplx apply_exp(cplx c, const std::array<cplx, kMExpVars>& x) const {
    cplx s = 0;
    for (auto& [d, cf] : t) {
      cplx delta = static_cast<double>(d.first) * p.w + static_cast<double>(d.second) * p.wp;
      s += cf.eval(x) * std::exp(c * (x[0] + delta));
    }
    return s;
  }
};

inline double shiftop_distance(const ShiftOp& a, const ShiftOp& b) {
  double m = 0;
  for (auto& [d, f] : a.t) {
    auto it = b.t.find(d);
    m = std::max(m, it == b.t.end() ? f.max_abs() : expsum_distance(f, it->second));
  }
  for (auto& [d, f] : b.t)
    if (!a.t.count(d)) m = std::max(m, f.max_abs());
  return m;
}

}  // namespace yb
