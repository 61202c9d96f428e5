#pragma once

// Exact scalar: a Gaussian rational re + im*i with GMP-backed rational parts.
// The imaginary part is only ever nonzero in SL(2,C)-intermediate values and
// in modular bookkeeping; plain rational work never touches it.

#include <gmpxx.h>

#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace yb {

struct ExactScalar {
  mpq_class re;
  mpq_class im;

  ExactScalar() : re(0), im(0) {}
  ExactScalar(long n) : re(n), im(0) {}
  ExactScalar(long n, long d) : re(n, d), im(0) { re.canonicalize(); }
  explicit ExactScalar(const mpq_class& r) : re(r), im(0) {}
  ExactScalar(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}

  static ExactScalar i_unit() { return ExactScalar(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ExactScalar operator-() const { return ExactScalar(mpq_class(-re), mpq_class(-im)); }

  ExactScalar& operator+=(const ExactScalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  ExactScalar& operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
    mpq_class n = o.re * o.re + o.im * o.im;
    mpq_class r = (re * o.re + im * o.im) / n;
    mpq_class i = (im * o.re - re * o.im) / n;
    re = r;
    im = i;
    return *this;
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  // Canonical text form: "p/q" for rationals, "p/q+r/s*i" otherwise.
  std::string str() const {
    std::string s = re.get_num().get_str() + "/" + re.get_den().get_str();
    if (im != 0) {
      s += (im >= 0 ? "+" : "-");
      mpq_class a = abs(im);
      s += a.get_num().get_str() + "/" + a.get_den().get_str() + "*i";
    }
    return s;
  }

  static ExactScalar parse(const std::string& s) {
    // Accept "p", "p/q", "p/q+r/s*i", "p/q-r/s*i".
    auto star = s.find("*i");
    if (star == std::string::npos) {
      return ExactScalar(parse_rat(s), mpq_class(0));
    }
    // Find the sign separating the two parts: last '+' or '-' that is not at
    // position 0 (a leading sign belongs to the real part).
    std::string body = s.substr(0, star);
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
      if (body[k] == '+' || body[k] == '-') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) throw std::invalid_argument("ExactScalar: bad literal " + s);
    mpq_class r = parse_rat(body.substr(0, split));
    mpq_class i = parse_rat(body.substr(split + 1));
    if (body[split] == '-') i = -i;
    return ExactScalar(r, i);
  }

 private:
  static mpq_class parse_rat(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("ExactScalar: bad rational " + s);
    q.canonicalize();
    return q;
  }
};

inline ExactScalar binomial(long n, long k) {
  if (k < 0 || k > n) return ExactScalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return ExactScalar(mpq_class(r));
}

inline ExactScalar factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return ExactScalar(mpq_class(r));
}

}  // namespace yb
