#pragma once

// Verification engines shared by the test suites and the CLI: projective
// comparison (exact and numeric), Yang-Baxter checks in leg and braid form,
// RLL checks, and a small deterministic report structure.

#include <chrono>
#include <complex>
#include <string>
#include <vector>

#include "yb/matrix.hpp"
#include "yb/poly.hpp"

namespace yb {

// ---------------------------------------------------------------------------
// Reports.

struct CaseResult {
  std::string name;
  bool pass = false;
  bool exact = false;     // true when the residual is an exact ring zero
  double residual = 0.0;  // numeric residual (0 for exact passes)
  double tolerance = 0.0; // 0 means "must be exactly zero"
  double seconds = 0.0;
  std::string note;
};

struct Report {
  std::string suite;
  unsigned seed = 0;
  std::vector<CaseResult> cases;

  void add(CaseResult c) { cases.push_back(std::move(c)); }
  bool all_pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

class CaseTimer {
 public:
  CaseTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------------
// Projective comparison.
//
// Exact rings: cross-multiplication A_i * B_j == A_j * B_i for all pairs with
// one fixed reference index — no division, and arbitrary polynomial scalar
// normalizations drop out. Numeric: least-squares scalar fit.

inline bool proj_equal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return false;
  int ref = -1;
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero() != b[k].is_zero()) return false;
    if (!a[k].is_zero() && ref < 0) ref = static_cast<int>(k);
  }
  if (ref < 0) return true;  // both zero
  for (size_t k = 0; k < a.size(); ++k)
    if (!(a[k] * b[ref] == b[k] * a[ref])) return false;
  return true;
}

inline bool proj_equal(const Matrix<Poly>& a, const Matrix<Poly>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  return proj_equal(std::vector<Poly>(a.data.begin(), a.data.end()),
                    std::vector<Poly>(b.data.begin(), b.data.end()));
}

struct ProjFit {
  std::complex<double> scalar;
  double residual = 0.0;  // max |a - scalar*b| / max |a|
};

inline ProjFit proj_fit(const std::vector<std::complex<double>>& a,
                        const std::vector<std::complex<double>>& b) {
  std::complex<double> num = 0.0, den = 0.0;
  for (size_t k = 0; k < a.size() && k < b.size(); ++k) {
    num += std::conj(b[k]) * a[k];
    den += std::conj(b[k]) * b[k];
  }
  ProjFit f;
  f.scalar = (std::abs(den) > 0) ? num / den : std::complex<double>{};
  double m = 0, scale = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    m = std::max(m, std::abs(a[k] - f.scalar * b[k]));
    scale = std::max(scale, std::abs(a[k]));
  }
  f.residual = (scale > 0) ? m / scale : m;
  return f;
}

inline ProjFit proj_fit(const Matrix<std::complex<double>>& a,
                        const Matrix<std::complex<double>>& b) {
  return proj_fit(a.data, b.data);
}

// ---------------------------------------------------------------------------
// Yang-Baxter checks. Leg form: R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v).
// Braid form (with swap-carrying operators B, e.g. B = P * R):
// B23(u-v) B12(u) B23(v) = B12(v) B23(u) B12(u-v).
// The three operators are passed already evaluated at (u-v, u, v).

template <class T>
Matrix<T> ybe_leg_residual(const Matrix<T>& r12, const Matrix<T>& r13, const Matrix<T>& r23,
                           const std::vector<int>& dims) {
  auto a = embed_pair(r12, 0, 1, dims) * embed_pair(r13, 0, 2, dims) *
           embed_pair(r23, 1, 2, dims);
  auto b = embed_pair(r23, 1, 2, dims) * embed_pair(r13, 0, 2, dims) *
           embed_pair(r12, 0, 1, dims);
  return a - b;
}

template <class T>
Matrix<T> ybe_braid_residual(const Matrix<T>& buv, const Matrix<T>& bu, const Matrix<T>& bv,
                             const std::vector<int>& dims) {
  auto a = embed_pair(buv, 1, 2, dims) * embed_pair(bu, 0, 1, dims) *
           embed_pair(bv, 1, 2, dims);
  auto b = embed_pair(bv, 0, 1, dims) * embed_pair(bu, 1, 2, dims) *
           embed_pair(buv, 0, 1, dims);
  return a - b;
}

inline double max_abs(const Matrix<std::complex<double>>& m) {
  double r = 0;
  for (const auto& x : m.data) r = std::max(r, std::abs(x));
  return r;
}

inline double ybe_leg_rel(const Matrix<std::complex<double>>& r12,
                          const Matrix<std::complex<double>>& r13,
                          const Matrix<std::complex<double>>& r23,
                          const std::vector<int>& dims) {
  auto a = embed_pair(r12, 0, 1, dims) * embed_pair(r13, 0, 2, dims) *
           embed_pair(r23, 1, 2, dims);
  auto b = embed_pair(r23, 1, 2, dims) * embed_pair(r13, 0, 2, dims) *
           embed_pair(r12, 0, 1, dims);
  double s = max_abs(a);
  return (s > 0) ? max_abs(a - b) / s : max_abs(a - b);
}

inline double ybe_braid_rel(const Matrix<std::complex<double>>& buv,
                            const Matrix<std::complex<double>>& bu,
                            const Matrix<std::complex<double>>& bv,
                            const std::vector<int>& dims) {
  auto a = embed_pair(buv, 1, 2, dims) * embed_pair(bu, 0, 1, dims) *
           embed_pair(bv, 1, 2, dims);
  auto b = embed_pair(bv, 0, 1, dims) * embed_pair(bu, 1, 2, dims) *
           embed_pair(buv, 0, 1, dims);
  double s = max_abs(a);
  return (s > 0) ? max_abs(a - b) / s : max_abs(a - b);
}

// ---------------------------------------------------------------------------
// RLL: R12(u-v) L1(u) L2(v) = L2(v) L1(u) R12(u-v), with the two L's sharing
// the quantum space (leg 2 of dims). Works for any ring T where the scalar
// R-matrix is given in the same ring.

template <class T>
Matrix<T> rll_residual(const Matrix<T>& r, const Matrix<T>& l1, const Matrix<T>& l2,
                       const std::vector<int>& dims) {
  auto re = embed_pair(r, 0, 1, dims);
  auto a1 = embed_pair(l1, 0, 2, dims);
  auto a2 = embed_pair(l2, 1, 2, dims);
  return re * a1 * a2 - a2 * a1 * re;
}

}  // namespace yb
