#pragma once

// Exact multivariate polynomial over ExactScalar in named commuting symbols.
// One class serves both roles the project needs:
//   * ordinary polynomials (all exponents >= 0), and
//   * Laurent polynomials (symbols declared invertible, signed exponents).
// Terms are kept in graded-lexicographic order for bit-exact serialization.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yb/scalar.hpp"

namespace yb {

struct SymbolTable {
  std::vector<std::string> names;
  std::vector<bool> invertible;  // parallel to names

  explicit SymbolTable(std::vector<std::string> ns, std::vector<bool> inv = {})
      : names(std::move(ns)), invertible(std::move(inv)) {
    if (invertible.empty()) invertible.assign(names.size(), false);
    if (invertible.size() != names.size())
      throw std::invalid_argument("SymbolTable: invertible mask size mismatch");
  }

  int index(const std::string& n) const {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    throw std::invalid_argument("SymbolTable: unknown symbol " + n);
  }
  bool has(const std::string& n) const {
    for (auto& m : names)
      if (m == n) return true;
    return false;
  }
  size_t size() const { return names.size(); }
  bool operator==(const SymbolTable& o) const {
    return names == o.names && invertible == o.invertible;
  }
};

using TablePtr = std::shared_ptr<const SymbolTable>;

inline TablePtr make_table(std::vector<std::string> names, std::vector<bool> inv = {}) {
  return std::make_shared<const SymbolTable>(std::move(names), std::move(inv));
}

using Expo = std::vector<int32_t>;

// Graded-lexicographic "less": lower total degree first, ties broken
// lexicographically on the exponent vector.
struct GrlexLess {
  bool operator()(const Expo& a, const Expo& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class Poly {
 public:
  TablePtr tab;  // may be null for a pure constant (e.g. default zero)
  std::map<Expo, ExactScalar, GrlexLess> terms;

  Poly() = default;
  explicit Poly(TablePtr t) : tab(std::move(t)) {}
  Poly(TablePtr t, const ExactScalar& c) : tab(std::move(t)) {
    if (!c.is_zero()) terms.emplace(Expo(width()), c);
  }
  // Constant without a table.
  explicit Poly(const ExactScalar& c) {
    if (!c.is_zero()) terms.emplace(Expo{}, c);
  }

  static Poly constant(TablePtr t, const ExactScalar& c) { return Poly(std::move(t), c); }
  static Poly symbol(TablePtr t, const std::string& name, int power = 1,
                     const ExactScalar& c = ExactScalar(1)) {
    Poly p(t);
    if (c.is_zero()) return p;
    Expo e(t->size(), 0);
    int idx = t->index(name);
    if (power < 0 && !t->invertible[idx])
      throw std::invalid_argument("Poly: negative power of non-invertible symbol " + name);
    e[idx] = power;
    p.terms.emplace(std::move(e), c);
    return p;
  }

  size_t width() const { return tab ? tab->size() : 0; }
  bool is_zero() const { return terms.empty(); }

  bool is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    const Expo& e = terms.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
  }
  ExactScalar constant_value() const {
    if (terms.empty()) return ExactScalar(0);
    if (!is_constant()) throw std::domain_error("Poly: not a constant");
    return terms.begin()->second;
  }

  // Adopt the other operand's table when we have none (default zero), or
  // check compatibility.
  static TablePtr join(const Poly& a, const Poly& b) {
    if (!a.tab) return b.tab;
    if (!b.tab) return a.tab;
    if (a.tab == b.tab || *a.tab == *b.tab) return a.tab;
    throw std::invalid_argument("Poly: symbol table mismatch");
  }

  Poly promoted(const TablePtr& t) const {
    if (tab && (tab == t || (t && *tab == *t))) return *this;
    if (tab && t) throw std::invalid_argument("Poly: cannot promote across tables");
    if (!t) return *this;
    Poly r(t);
    for (auto& [e, c] : terms) {
      Expo e2(t->size(), 0);  // constant-only source: e is empty or all-zero
      (void)e;
      r.terms.emplace(std::move(e2), c);
    }
    return r;
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& [e, c] : r.terms) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    TablePtr t = join(a, b);
    Poly x = a.promoted(t), y = b.promoted(t);
    for (auto& [e, c] : y.terms) {
      auto it = x.terms.find(e);
      if (it == x.terms.end()) {
        x.terms.emplace(e, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) x.terms.erase(it);
      }
    }
    return x;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    TablePtr t = join(a, b);
    Poly x = a.promoted(t), y = b.promoted(t);
    Poly r(t);
    Expo e(t ? t->size() : 0);
    for (auto& [ea, ca] : x.terms) {
      for (auto& [eb, cb] : y.terms) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        ExactScalar c = ca * cb;
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
          if (!c.is_zero()) r.terms.emplace(e, c);
        } else {
          it->second += c;
          if (it->second.is_zero()) r.terms.erase(it);
        }
      }
    }
    return r;
  }

  friend Poly operator*(const Poly& a, const ExactScalar& s) {
    Poly r(a.tab);
    if (s.is_zero()) return r;
    r.terms = a.terms;
    for (auto& [e, c] : r.terms) c *= s;
    return r;
  }
  friend Poly operator*(const ExactScalar& s, const Poly& a) { return a * s; }
  friend Poly operator/(const Poly& a, const ExactScalar& s) {
    return a * (ExactScalar(1) / s);
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(long n) const {
    if (n < 0) throw std::invalid_argument("Poly: negative power");
    Poly r = tab ? constant(tab, ExactScalar(1)) : Poly(ExactScalar(1));
    Poly base = *this;
    while (n > 0) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  Poly derivative(const std::string& sym) const {
    if (!tab || !tab->has(sym)) return Poly();
    int i = tab->index(sym);
    Poly r(tab);
    for (auto& [e, c] : terms) {
      if (e[i] == 0) continue;
      Expo e2 = e;
      e2[i] -= 1;
      r.terms.emplace(std::move(e2), c * ExactScalar(e[i]));
    }
    return r;
  }

  long degree(const std::string& sym) const {
    if (!tab || terms.empty() || !tab->has(sym)) return 0;
    int i = tab->index(sym);
    long d = 0;
    for (auto& [e, c] : terms) d = std::max<long>(d, e[i]);
    return d;
  }
  long lowest_degree(const std::string& sym) const {
    if (!tab || terms.empty() || !tab->has(sym)) return 0;
    int i = tab->index(sym);
    long d = terms.begin()->first[i];
    for (auto& [e, c] : terms) d = std::min<long>(d, e[i]);
    return d;
  }

  // Coefficient of sym^k: the exponent of sym is removed (set to zero).
  Poly coeff_of(const std::string& sym, int k) const {
    if (!tab || !tab->has(sym)) return (k == 0) ? *this : Poly();
    int i = tab->index(sym);
    Poly r(tab);
    for (auto& [e, c] : terms) {
      if (e[i] != k) continue;
      Expo e2 = e;
      e2[i] = 0;
      r.terms.emplace(std::move(e2), c);
    }
    return r;
  }

  // Substitute each named symbol by a polynomial (over the target table);
  // unnamed symbols must exist in the target table and pass through.
  Poly subst(const std::map<std::string, Poly>& repl, const TablePtr& target) const {
    Poly r(target);
    if (!tab) {
      for (auto& [e, c] : terms) r += Poly::constant(target, c);
      return r;
    }
    for (auto& [e, c] : terms) {
      Poly term = Poly::constant(target, c);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = repl.find(tab->names[i]);
        Poly base;
        if (it != repl.end()) {
          base = it->second.promoted(target);
        } else {
          base = Poly::symbol(target, tab->names[i]);
        }
        if (e[i] >= 0) {
          term = term * base.pow(e[i]);
        } else {
          // Negative exponent: base must be a single invertible monomial.
          if (base.terms.size() != 1)
            throw std::invalid_argument("Poly::subst: negative power of non-monomial");
          Poly inv(target);
          Expo be = base.terms.begin()->first;
          for (auto& x : be) x = -x;
          inv.terms.emplace(std::move(be), ExactScalar(1) / base.terms.begin()->second);
          term = term * inv.pow(-e[i]);
        }
      }
      r += term;
    }
    return r;
  }

  std::complex<double> eval(const std::map<std::string, std::complex<double>>& vals) const {
    std::complex<double> r = 0;
    for (auto& [e, c] : terms) {
      std::complex<double> t = c.to_complex();
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = vals.find(tab->names[i]);
        if (it == vals.end())
          throw std::invalid_argument("Poly::eval: missing value for " + tab->names[i]);
        t *= std::pow(it->second, static_cast<double>(e[i]));
      }
      r += t;
    }
    return r;
  }

  // Canonical text form: terms in descending graded-lex order joined by
  // " + "; each term "coef*sym^e*..." with the coefficient always present.
  std::string str() const {
    if (terms.empty()) return "0/1";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << it->second.str();
      const Expo& e = it->first;
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) os << "*" << tab->names[i] << "^" << e[i];
    }
    return os.str();
  }

  static Poly parse(const std::string& s, const TablePtr& t) {
    Poly r(t);
    if (s == "0/1") return r;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t next = s.find(" + ", pos);
      std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
      pos = (next == std::string::npos) ? s.size() : next + 3;
      // Split the term on '*'; the coefficient may itself contain "*i".
      std::vector<std::string> tok;
      size_t p = 0;
      while (p <= term.size()) {
        size_t q = term.find('*', p);
        if (q == std::string::npos) {
          tok.push_back(term.substr(p));
          break;
        }
        tok.push_back(term.substr(p, q - p));
        p = q + 1;
      }
      size_t k = 1;
      std::string coef = tok[0];
      if (k < tok.size() && tok[k] == "i") {
        coef += "*i";
        ++k;
      }
      Poly mono = Poly::constant(t, ExactScalar::parse(coef));
      for (; k < tok.size(); ++k) {
        size_t caret = tok[k].find('^');
        if (caret == std::string::npos)
          throw std::invalid_argument("Poly::parse: bad monomial " + tok[k]);
        std::string name = tok[k].substr(0, caret);
        int e = std::stoi(tok[k].substr(caret + 1));
        mono = mono * Poly::symbol(t, name, e);
      }
      r += mono;
    }
    return r;
  }
};

}  // namespace yb
