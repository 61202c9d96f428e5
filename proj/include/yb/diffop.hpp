#pragma once

// Normal-ordered differential operators sum_{k,kb} p_{k,kb}(...) d_z^k d_zb^kb
// with Poly coefficients. The two derivative slots serve the holomorphic and
// antiholomorphic variables; ordinary sl2 work uses only the first slot.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "yb/matrix.hpp"
#include "yb/poly.hpp"

namespace yb {

inline constexpr const char* kHolVar = "z";
inline constexpr const char* kBarVar = "zb";

class DiffOp {
 public:
  TablePtr tab;  // null for the zero operator
  std::map<std::pair<int, int>, Poly> terms;  // (k, kb) -> coefficient

  DiffOp() = default;
  explicit DiffOp(TablePtr t) : tab(std::move(t)) {}

  static DiffOp from_poly(const Poly& p, int k = 0, int kb = 0) {
    DiffOp d(p.tab);
    if (!p.is_zero()) d.terms.emplace(std::make_pair(k, kb), p);
    return d;
  }
  static DiffOp identity(const TablePtr& t) {
    return from_poly(Poly::constant(t, ExactScalar(1)));
  }
  static DiffOp d_z(const TablePtr& t, int k = 1) {
    return from_poly(Poly::constant(t, ExactScalar(1)), k, 0);
  }
  static DiffOp d_zb(const TablePtr& t, int kb = 1) {
    return from_poly(Poly::constant(t, ExactScalar(1)), 0, kb);
  }

  bool is_zero() const { return terms.empty(); }
  int max_order() const {
    int m = 0;
    for (auto& [k, p] : terms) m = std::max(m, k.first);
    return m;
  }

  void add_term(int k, int kb, const Poly& p) {
    if (p.is_zero()) return;
    if (!tab) tab = p.tab;
    auto it = terms.find({k, kb});
    if (it == terms.end()) {
      terms.emplace(std::make_pair(k, kb), p);
    } else {
      it->second += p;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  DiffOp operator-() const {
    DiffOp r(tab);
    for (auto& [k, p] : terms) r.terms.emplace(k, -p);
    return r;
  }
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    DiffOp r = a;
    if (!r.tab) r.tab = b.tab;
    for (auto& [k, p] : b.terms) r.add_term(k.first, k.second, p);
    return r;
  }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);  // composition
  friend DiffOp operator*(const DiffOp& a, const ExactScalar& s) {
    DiffOp r(a.tab);
    if (s.is_zero()) return r;
    for (auto& [k, p] : a.terms) r.terms.emplace(k, p * s);
    return r;
  }
  friend DiffOp operator*(const ExactScalar& s, const DiffOp& a) { return a * s; }
  DiffOp scaled_poly(const Poly& q) const {  // left multiplication by q(z, zb, ...)
    DiffOp r(tab ? tab : q.tab);
    for (auto& [k, p] : terms) r.add_term(k.first, k.second, q * p);
    return r;
  }
  DiffOp& operator+=(const DiffOp& o) { return *this = *this + o; }

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return (a - b).is_zero(); }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  std::string str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, p] : terms) {
      if (!first) os << "  +  ";
      first = false;
      os << "(" << p.str() << ")";
      if (k.first) os << "*D" << kHolVar << "^" << k.first;
      if (k.second) os << "*D" << kBarVar << "^" << k.second;
    }
    return os.str();
  }
};

inline Poly diffop_act(const DiffOp& a, const Poly& f) {
  Poly r(a.tab ? a.tab : f.tab);
  for (auto& [k, p] : a.terms) {
    Poly g = f;
    for (int j = 0; j < k.first; ++j) g = g.derivative(kHolVar);
    for (int j = 0; j < k.second; ++j) g = g.derivative(kBarVar);
    r += p * g;
  }
  return r;
}

inline DiffOp diffop_compose(const DiffOp& a, const DiffOp& b) {
  DiffOp r(a.tab ? a.tab : b.tab);
  for (auto& [ka, pa] : a.terms) {
    int k = ka.first, kb = ka.second;
    for (auto& [kq, q] : b.terms) {
      // d^k db^kb (q ...) = sum_j sum_jb C(k,j)C(kb,jb) (d^j db^jb q) d^{k-j} db^{kb-jb}
      Poly dq = q;
      for (int j = 0; j <= k; ++j) {
        Poly dqb = dq;
        for (int jb = 0; jb <= kb; ++jb) {
          Poly c = pa * dqb * (binomial(k, j) * binomial(kb, jb));
          r.add_term(k - j + kq.first, kb - jb + kq.second, c);
          dqb = dqb.derivative(kBarVar);
          if (dqb.is_zero()) break;
        }
        dq = dq.derivative(kHolVar);
        if (dq.is_zero()) break;
      }
    }
  }
  return r;
}

inline DiffOp operator*(const DiffOp& a, const DiffOp& b) { return diffop_compose(a, b); }

// Restriction to span{1, z, ..., z^n}; throws (naming the offending basis
// vector) if the image escapes the span.
inline Matrix<Poly> diffop_restrict(const DiffOp& a, int n) {
  Matrix<Poly> m(n + 1, n + 1);
  for (auto& [k, p] : a.terms)
    if (k.second != 0) throw std::invalid_argument("diffop_restrict: operator involves d_zb");
  TablePtr t = a.tab;
  if (!t) return m;  // zero operator
  for (int j = 0; j <= n; ++j) {
    Poly zj = t ? Poly::symbol(t, kHolVar, 1).pow(j) : Poly(ExactScalar(1));
    Poly img = diffop_act(a, zj);
    if (img.degree(kHolVar) > n)
      throw std::domain_error("diffop_restrict: image of z^" + std::to_string(j) +
                              " has degree " + std::to_string(img.degree(kHolVar)) +
                              " > " + std::to_string(n));
    for (int i = 0; i <= n; ++i) m(i, j) = img.coeff_of(kHolVar, i);
  }
  return m;
}

// Bivariate restriction to span{z^k zb^kb : k <= n, kb <= nb}, basis index
// k*(nb+1)+kb (holomorphic index major).
inline Matrix<Poly> diffop_restrict2(const DiffOp& a, int n, int nb) {
  int dim = (n + 1) * (nb + 1);
  Matrix<Poly> m(dim, dim);
  m.row_factors = {n + 1, nb + 1};
  m.col_factors = {n + 1, nb + 1};
  TablePtr t = a.tab;
  if (!t) return m;  // zero operator
  for (int j = 0; j <= n; ++j)
    for (int jb = 0; jb <= nb; ++jb) {
      Poly f = Poly::symbol(t, kHolVar, 1).pow(j) * Poly::symbol(t, kBarVar, 1).pow(jb);
      Poly img = diffop_act(a, f);
      if (img.degree(kHolVar) > n || img.degree(kBarVar) > nb)
        throw std::domain_error("diffop_restrict2: image of z^" + std::to_string(j) + "*zb^" +
                                std::to_string(jb) + " escapes the span");
      for (int i = 0; i <= n; ++i)
        for (int ib = 0; ib <= nb; ++ib)
          m(i * (nb + 1) + ib, j * (nb + 1) + jb) =
              img.coeff_of(kHolVar, i).coeff_of(kBarVar, ib);
    }
  return m;
}

}  // namespace yb
