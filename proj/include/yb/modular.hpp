#pragma once

// Numerics for the modular-double sector: quasiperiods, the non-compact
// quantum dilogarithm gamma(z) (two independent evaluation paths: the
// contour integral and a convergent double product), the Faddeev-Volkov
// function D_a(z), and the gamma-ratio ladder used to evaluate products of
// D-functions whose parameters sum to an even lattice point without ever
// touching gamma itself.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace yb {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline const cplx kI{0.0, 1.0};

// Quasiperiods with Im w > 0, Im w' > 0 and the normalization w*w' = -1/4.
struct Quasiperiods {
  cplx w;
  cplx wp;

  cplx wpp() const { return w + wp; }
  cplx beta() const { return kPi / 12.0 * (w / wp + wp / w); }
  cplx q() const { return std::exp(kI * kPi * wp / w); }
  cplx qt() const { return std::exp(kI * kPi * w / wp); }

  static Quasiperiods standard() {
    Quasiperiods p;
    p.w = 0.5 * std::exp(kI * kPi / 3.0);
    p.wp = -1.0 / (4.0 * p.w);
    return p;
  }
};

// Decompose d = n*w + m*wp with integer n, m. Throws when d is off-lattice.
inline std::pair<int, int> lattice_decompose(const Quasiperiods& p, cplx d,
                                             double tol = 1e-9) {
  // Solve the 2x2 real system (Re, Im) for (a, b) in d = a*w + b*wp.
  double det = p.w.real() * p.wp.imag() - p.wp.real() * p.w.imag();
  double a = (d.real() * p.wp.imag() - p.wp.real() * d.imag()) / det;
  double b = (p.w.real() * d.imag() - d.real() * p.w.imag()) / det;
  int n = static_cast<int>(std::lround(a));
  int m = static_cast<int>(std::lround(b));
  cplx res = d - (static_cast<double>(n) * p.w + static_cast<double>(m) * p.wp);
  if (std::abs(res) > tol)
    throw std::domain_error("lattice_decompose: point is not on the (w, w') lattice");
  return {n, m};
}

// gamma(y + 2N*w + 2M*wp) / gamma(y): a finite product/quotient of factors
// (1 + exp(...)) obtained by iterating the first-order difference equations.
// Valid for any integers N, M (negative steps divide).
inline cplx gamma_ratio_even(const Quasiperiods& p, cplx y, int N, int M) {
  cplx val = 1.0;
  cplx yy = y;
  auto step_up = [&](const cplx& half, const cplx& other) {
    val *= 1.0 + std::exp(-kI * kPi * (yy + half) / other);
    yy += 2.0 * half;
  };
  auto step_down = [&](const cplx& half, const cplx& other) {
    yy -= 2.0 * half;
    val /= 1.0 + std::exp(-kI * kPi * (yy + half) / other);
  };
  for (int j = 0; j < std::abs(M); ++j) (M > 0) ? step_up(p.wp, p.w) : step_down(p.wp, p.w);
  for (int j = 0; j < std::abs(N); ++j) (N > 0) ? step_up(p.w, p.wp) : step_down(p.w, p.wp);
  return val;
}

// The non-compact quantum dilogarithm.
class QDilog {
 public:
  explicit QDilog(Quasiperiods p = Quasiperiods::standard()) : p_(p) {
    // Normalization of the product path: gamma(0)^2 = e^{i beta} by the
    // reflection formula; the sign ambiguity is fixed once against the
    // integral path at z = 0.
    cplx g0_int = gamma_integral(0.0);
    cplx g0 = std::exp(kI * p_.beta() / 2.0);
    sign_ = (std::abs(g0 - g0_int) <= std::abs(g0 + g0_int)) ? 1.0 : -1.0;
  }

  const Quasiperiods& periods() const { return p_; }

  // Contour-integral path: exp(-1/4 \int dt/t e^{itz} / (sin wt sin w't)),
  // the contour passing above t = 0 (semicircle of radius r, plus two real
  // tails). Requires |Im z| < Im w + Im w'.
  cplx gamma_integral(cplx z, double r = 0.1, double tmax = 60.0) const {
    double margin = p_.w.imag() + p_.wp.imag() - std::abs(z.imag());
    if (margin < 0.05)
      throw std::domain_error("gamma_integral: |Im z| too close to Im w + Im w'");
    auto f = [&](cplx t) -> cplx {
      return std::exp(kI * t * z) / (t * std::sin(p_.w * t) * std::sin(p_.wp * t));
    };
    using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
    // Semicircle t = r e^{i th}, th from pi to 0: dt/t = i dth (downward th).
    auto arc = [&](double th) -> cplx { return f(r * std::exp(kI * th)) * r * std::exp(kI * th); };
    cplx semi = -kI * gk::integrate([&](double th) { return arc(th); }, 0.0, kPi,
                                    10, 1e-13);
    // \int_{-tmax}^{-r} f(t) dt = \int_{r}^{tmax} f(-t) dt after t -> -t.
    cplx tails = gk::integrate([&](double t) { return f(t); }, r, tmax, 12, 1e-13) +
                 gk::integrate([&](double t) { return f(-t); }, r, tmax, 12, 1e-13);
    return std::exp(-0.25 * (semi + tails));
  }

  // Product path: gamma(z) = c e^{i pi z^2} B(z) / A(z) with
  //   A(z) = prod_{k>=0} (1 + e^{ i pi (z + (2k+1) w') / w }),
  //   B(z) = prod_{k>=0} (1 + e^{ i pi (z - (2k+1) w ) / w' }),
  // both absolutely convergent for Im(w'/w) > 0, Im(w/w') < 0; the constant
  // is fixed by gamma(0) = sign * e^{i beta / 2}.
  cplx gamma_prod(cplx z) const {
    // The products develop huge (eventually cancelling) leading factors on
    // one half of the plane; evaluate there through the reflection formula.
    double la = -kPi * ((z + p_.wp) / p_.w).imag();
    double lb = -kPi * ((z - p_.w) / p_.wp).imag();
    if (la + lb > 40.0)
      return std::exp(kI * p_.beta() + kI * kPi * z * z) / gamma_prod(-z);
    cplx g0 = sign_ * std::exp(kI * p_.beta() / 2.0);
    cplx c = g0 * prodA(0.0) / prodB(0.0);
    return c * std::exp(kI * kPi * z * z) * prodB(z) / prodA(z);
  }

  cplx operator()(cplx z) const { return gamma_prod(z); }

  // D_a(z) = e^{-2 pi i a z} gamma(z + a) / gamma(z - a).
  cplx dfun(cplx a, cplx z) const {
    return std::exp(-2.0 * kPi * kI * a * z) * gamma_prod(z + a) / gamma_prod(z - a);
  }

  // Fourier normalization A(a) = e^{ (i pi / 2)(2a + w'')^2 + i beta / 2 } / gamma(2a + w'').
  cplx afun(cplx a) const {
    cplx s = 2.0 * a + p_.wpp();
    return std::exp(kI * kPi / 2.0 * s * s + kI * p_.beta() / 2.0) / gamma_prod(s);
  }

 private:
  cplx prodA(cplx z) const {
    cplx val = 1.0;
    for (int k = 0; k < 400; ++k) {
      cplx f = std::exp(kI * kPi * (z + (2.0 * k + 1.0) * p_.wp) / p_.w);
      val *= 1.0 + f;
      if (std::abs(f) < 1e-18) return val;
    }
    throw std::runtime_error("QDilog: product A did not converge");
  }
  cplx prodB(cplx z) const {
    cplx val = 1.0;
    for (int k = 0; k < 400; ++k) {
      cplx f = std::exp(kI * kPi * (z - (2.0 * k + 1.0) * p_.w) / p_.wp);
      val *= 1.0 + f;
      if (std::abs(f) < 1e-18) return val;
    }
    throw std::runtime_error("QDilog: product B did not converge");
  }

  Quasiperiods p_;
  double sign_ = 1.0;
};

// D_A(v) for a lattice parameter A = n*w + m*wp, n, m >= 0: gamma-free.
inline cplx dfun_lattice_value(const Quasiperiods& p, int n, int m, cplx v) {
  cplx L = static_cast<double>(n) * p.w + static_cast<double>(m) * p.wp;
  return std::exp(-2.0 * kPi * kI * L * v) * gamma_ratio_even(p, v - L, n, m);
}

// D_A(v) * D_C(v - delta) where A + C + delta and A + C - delta are both
// even lattice points (the situation arising in the finite-dimensional
// reduction): entirely gamma-free.
inline cplx dpair_value(const Quasiperiods& p, cplx A, cplx C, cplx delta, cplx v) {
  auto [N1, M1] = lattice_decompose(p, A + C + delta);
  auto [N2, M2] = lattice_decompose(p, A + C - delta);
  if (N1 % 2 || M1 % 2 || N2 % 2 || M2 % 2)
    throw std::domain_error("dpair_value: parameter sums are not even lattice points");
  cplx pref = std::exp(-2.0 * kPi * kI * (A * v + C * (v - delta)));
  return pref * gamma_ratio_even(p, v - delta - C, N1 / 2, M1 / 2) *
         gamma_ratio_even(p, v - A, N2 / 2, M2 / 2);
}

}  // namespace yb
