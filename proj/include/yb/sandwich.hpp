#pragma once

// The affine-exponent power-term engine. It evaluates "sandwiches"
//   prod_i w_i^{alpha_i}  .  d^n  .  prod_i w_i^{beta_i}
// where every base w_i is linear in the differentiation variable,
// w_i = A_i + B_i * var, and the exponents alpha_i, beta_i are affine forms
// in formal parameters (u, l, ...). The n derivatives are pushed through the
// suffix by iterated Leibniz; after attaching the prefix every surviving
// exponent must be a nonnegative integer (the discrete-spin telescoping),
// and the result is expanded into an ordinary normal-ordered DiffOp.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yb/diffop.hpp"
#include "yb/poly.hpp"

namespace yb {

// c0 + sum_sym c_sym * sym with rational coefficients.
struct AffineExp {
  mpq_class cst;
  std::map<std::string, mpq_class> lin;

  AffineExp() : cst(0) {}
  explicit AffineExp(const mpq_class& c) : cst(c) {}
  AffineExp(const mpq_class& c, std::map<std::string, mpq_class> l)
      : cst(c), lin(std::move(l)) {
    prune();
  }

  void prune() {
    for (auto it = lin.begin(); it != lin.end();) {
      if (it->second == 0)
        it = lin.erase(it);
      else
        ++it;
    }
  }
  AffineExp& operator+=(const AffineExp& o) {
    cst += o.cst;
    for (auto& [s, c] : o.lin) lin[s] += c;
    prune();
    return *this;
  }
  friend AffineExp operator+(AffineExp a, const AffineExp& b) { return a += b; }
  AffineExp operator-() const {
    AffineExp r;
    r.cst = -cst;
    for (auto& [s, c] : lin) r.lin[s] = -c;
    return r;
  }
  friend AffineExp operator-(AffineExp a, const AffineExp& b) { return a + (-b); }
  AffineExp shifted(long d) const {
    AffineExp r = *this;
    r.cst += d;
    return r;
  }
  bool is_integer() const {
    return lin.empty() && cst.get_den() == 1;
  }
  long integer_value() const {
    if (!is_integer()) throw std::domain_error("AffineExp: not an integer: " + str());
    return cst.get_num().get_si();
  }
  Poly to_poly(const TablePtr& t) const {
    Poly p = Poly::constant(t, ExactScalar(cst));
    for (auto& [s, c] : lin) p += Poly::symbol(t, s, 1, ExactScalar(c));
    return p;
  }
  std::string str() const {
    std::ostringstream os;
    os << cst.get_str();
    for (auto& [s, c] : lin) os << " + " << c.get_str() << "*" << s;
    return os.str();
  }
};

// A base linear in the differentiation variable: A + B*var (d/dvar -> B).
struct LinBase {
  Poly A;
  Poly B;
  Poly value(const TablePtr& t, const std::string& var) const {
    return A + B * Poly::symbol(t, var, 1);
  }
};

struct NormalizationToken {
  std::string tag;
  friend NormalizationToken operator*(const NormalizationToken& a,
                                      const NormalizationToken& b) {
    return {a.tag.empty() ? b.tag : (b.tag.empty() ? a.tag : a.tag + "*" + b.tag)};
  }
};

// Gamma(num)/Gamma(den): an exact rational function when num-den is an
// integer, a formal token otherwise.
struct GammaRatio {
  bool is_token = false;
  Poly numerator;    // product form
  Poly denominator;  // 1 unless the difference was negative
  NormalizationToken token;
};

inline GammaRatio gamma_ratio(const AffineExp& a_num, const AffineExp& a_den,
                              const TablePtr& t) {
  GammaRatio g;
  AffineExp diff = a_num - a_den;
  if (!diff.is_integer()) {
    g.is_token = true;
    g.token = {"Gamma(" + a_num.str() + ")/Gamma(" + a_den.str() + ")"};
    return g;
  }
  long k = diff.integer_value();
  Poly one = Poly::constant(t, ExactScalar(1));
  g.numerator = one;
  g.denominator = one;
  if (k >= 0) {
    for (long j = 0; j < k; ++j) g.numerator *= a_den.shifted(j).to_poly(t);
  } else {
    for (long j = 0; j < -k; ++j) g.denominator *= a_num.shifted(j).to_poly(t);
  }
  return g;
}

namespace detail {
struct PTerm {
  Poly coeff;
  std::vector<AffineExp> exps;  // parallel to the base list
  int dorder = 0;               // trailing derivative order
};
}  // namespace detail

// Core sandwich: returns the normal-ordered DiffOp (derivatives in `var`,
// which must be kHolVar or kBarVar). `prefix[i]`/`suffix[i]` are exponents
// for bases[i]; either may be zero. Throws when a combined exponent fails to
// be a nonnegative integer, reporting the affine form.
inline DiffOp power_sandwich_1d(const TablePtr& t, const std::string& var,
                                const std::vector<LinBase>& bases,
                                const std::vector<AffineExp>& prefix, int n,
                                const std::vector<AffineExp>& suffix) {
  if (prefix.size() != bases.size() || suffix.size() != bases.size())
    throw std::invalid_argument("power_sandwich: exponent list size mismatch");
  std::vector<detail::PTerm> cur;
  cur.push_back({Poly::constant(t, ExactScalar(1)), suffix, 0});
  for (int step = 0; step < n; ++step) {
    std::vector<detail::PTerm> next;
    for (auto& term : cur) {
      // d/dvar hitting the coefficient polynomial:
      Poly dc = term.coeff.derivative(var);
      if (!dc.is_zero()) next.push_back({dc, term.exps, term.dorder});
      // ... hitting each power factor:
      for (size_t i = 0; i < bases.size(); ++i) {
        if (term.exps[i].is_integer() && term.exps[i].integer_value() == 0) continue;
        Poly c = term.coeff * term.exps[i].to_poly(t) * bases[i].B;
        if (c.is_zero()) continue;
        detail::PTerm nt{c, term.exps, term.dorder};
        nt.exps[i] = nt.exps[i].shifted(-1);
        next.push_back(std::move(nt));
      }
      // ... passing through to the trailing derivative:
      next.push_back({term.coeff, term.exps, term.dorder + 1});
    }
    // merge terms with identical exponent/dorder signatures
    std::vector<detail::PTerm> merged;
    for (auto& nt : next) {
      bool found = false;
      for (auto& m : merged) {
        if (m.dorder != nt.dorder) continue;
        bool same = true;
        for (size_t i = 0; i < bases.size(); ++i) {
          AffineExp d = m.exps[i] - nt.exps[i];
          if (!(d.is_integer() && d.integer_value() == 0)) {
            same = false;
            break;
          }
        }
        if (!same) continue;
        m.coeff += nt.coeff;
        found = true;
        break;
      }
      if (!found) merged.push_back(std::move(nt));
    }
    cur.clear();
    for (auto& m : merged)
      if (!m.coeff.is_zero()) cur.push_back(std::move(m));
  }
  // Attach prefix exponents, assert integrality, expand.
  DiffOp out(t);
  for (auto& term : cur) {
    Poly c = term.coeff;
    for (size_t i = 0; i < bases.size(); ++i) {
      AffineExp e = term.exps[i] + prefix[i];
      if (!e.is_integer() || e.integer_value() < 0)
        throw std::domain_error(
            "power_sandwich: non-integral or negative combined exponent for base " +
            std::to_string(i) + ": " + e.str() + " (wrong discrete spin?)");
      c *= bases[i].value(t, var).pow(e.integer_value());
    }
    out.add_term(var == kHolVar ? term.dorder : 0, var == kHolVar ? 0 : term.dorder, c);
  }
  return out;
}

}  // namespace yb
