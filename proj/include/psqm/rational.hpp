#pragma once
// Exact scalar arithmetic: rationals, quadratic surds a + b*sqrt(d), and
// complex numbers built from them.  All symbolic-layer identities are checked
// with zero tolerance, so every coefficient must live in an exact field.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace psqm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return static_cast<double>(r); }

// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
  // 53 bits of mantissa
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rat r(mant);
  if (exp > 0)
    r *= Rat(Int(1) << exp);
  else if (exp < 0)
    r /= Rat(Int(1) << (-exp));
  return r;
}

inline Int isqrt_exact(const Int& n, bool& ok) {
  if (n < 0) { ok = false; return 0; }
  Int r = boost::multiprecision::sqrt(n);
  ok = (r * r == n);
  return r;
}

// Quadratic surd: value = a + b * sqrt(d), with a, b, d rational and d >= 0.
// All surds mixed in one expression must share the same radicand d (or be
// purely rational).  Perfect-square radicands collapse to rationals.
struct Surd {
  Rat a{0};  // rational part
  Rat b{0};  // coefficient of sqrt(d)
  Rat d{0};  // radicand; 0 when the value is purely rational

  Surd() = default;
  Surd(const Rat& r) : a(r) {}          // NOLINT: implicit by design
  Surd(int n) : a(n) {}                 // NOLINT
  Surd(const Rat& a_, const Rat& b_, const Rat& d_) : a(a_), b(b_), d(d_) {
    normalize();
  }

  static Surd sqrt_of(const Rat& d_) { return Surd(Rat(0), Rat(1), d_); }

  void normalize() {
    if (d < 0) throw std::invalid_argument("Surd: negative radicand");
    if (b == 0 || d == 0) { b = 0; d = 0; return; }
    if (d == 1) { a += b; b = 0; d = 0; return; }
    // collapse perfect squares
    bool okn = false, okd = false;
    Int sn = isqrt_exact(numerator(d), okn);
    Int sd = isqrt_exact(denominator(d), okd);
    if (okn && okd) {
      a += b * Rat(sn, sd);
      b = 0;
      d = 0;
    }
  }

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  friend bool compatible(const Surd& x, const Surd& y) {
    return x.b == 0 || y.b == 0 || x.d == y.d;
  }
  static Rat common_d(const Surd& x, const Surd& y) {
    if (!compatible(x, y))
      throw std::invalid_argument("Surd: mixing distinct radicands");
    return x.b != 0 ? x.d : y.d;
  }

  Surd operator-() const {
    Surd r(*this);
    r.a = -r.a;
    r.b = -r.b;
    return r;
  }
  friend Surd operator+(const Surd& x, const Surd& y) {
    Rat dd = common_d(x, y);
    return Surd(x.a + y.a, x.b + y.b, dd);
  }
  friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }
  friend Surd operator*(const Surd& x, const Surd& y) {
    Rat dd = common_d(x, y);
    return Surd(x.a * y.a + x.b * y.b * dd, x.a * y.b + x.b * y.a, dd);
  }
  friend Surd operator/(const Surd& x, const Surd& y) {
    if (y.is_zero()) throw std::domain_error("Surd: division by zero");
    if (y.b == 0) return Surd(x.a / y.a, x.b / y.a, x.d);
    Rat dd = common_d(x, y);
    Rat nrm = y.a * y.a - y.b * y.b * dd;  // (a+b r)(a-b r)
    Surd conj(y.a, -y.b, dd);
    Surd num = x * conj;
    return Surd(num.a / nrm, num.b / nrm, dd);
  }
  Surd& operator+=(const Surd& y) { return *this = *this + y; }
  Surd& operator-=(const Surd& y) { return *this = *this - y; }
  Surd& operator*=(const Surd& y) { return *this = *this * y; }
  Surd& operator/=(const Surd& y) { return *this = *this / y; }

  friend bool operator==(const Surd& x, const Surd& y) {
    return (x - y).is_zero();
  }
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }

  int sign() const {
    if (b == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
    if (a == 0) return b > 0 ? 1 : -1;
    int sa = a > 0 ? 1 : -1;
    int sb = b > 0 ? 1 : -1;
    if (sa == sb) return sa;
    // compare a^2 against b^2 d; value sign follows the larger magnitude side
    Rat a2 = a * a, b2d = b * b * d;
    if (a2 == b2d) return 0;
    return a2 > b2d ? sa : sb;
  }
  friend bool operator<(const Surd& x, const Surd& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Surd& x, const Surd& y) { return y < x; }

  double to_d() const {
    double v = to_double(a);
    if (b != 0) v += to_double(b) * std::sqrt(to_double(d));
    return v;
  }

  std::string str() const {
    std::ostringstream os;
    if (b == 0) {
      os << a;
    } else {
      if (a != 0) os << a << (b > 0 ? "+" : "");
      if (b == 1)
        os << "sqrt(" << d << ")";
      else if (b == -1)
        os << "-sqrt(" << d << ")";
      else
        os << b << "*sqrt(" << d << ")";
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Surd& s) {
    return os << s.str();
  }
};

// Complex number over the surd field.
struct CScalar {
  Surd re, im;

  CScalar() = default;
  CScalar(const Surd& r) : re(r) {}              // NOLINT
  CScalar(const Rat& r) : re(r) {}               // NOLINT
  CScalar(int n) : re(n) {}                      // NOLINT
  CScalar(const Surd& r, const Surd& i) : re(r), im(i) {}

  static CScalar i() { return CScalar(Surd(0), Surd(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  CScalar conj() const { return CScalar(re, -im); }
  CScalar operator-() const { return CScalar(-re, -im); }

  friend CScalar operator+(const CScalar& x, const CScalar& y) {
    return CScalar(x.re + y.re, x.im + y.im);
  }
  friend CScalar operator-(const CScalar& x, const CScalar& y) {
    return CScalar(x.re - y.re, x.im - y.im);
  }
  friend CScalar operator*(const CScalar& x, const CScalar& y) {
    return CScalar(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
  }
  friend CScalar operator/(const CScalar& x, const CScalar& y) {
    Surd n = y.re * y.re + y.im * y.im;
    if (n.is_zero()) throw std::domain_error("CScalar: division by zero");
    CScalar num = x * y.conj();
    return CScalar(num.re / n, num.im / n);
  }
  CScalar& operator+=(const CScalar& y) { return *this = *this + y; }
  CScalar& operator-=(const CScalar& y) { return *this = *this - y; }
  CScalar& operator*=(const CScalar& y) { return *this = *this * y; }
  CScalar& operator/=(const CScalar& y) { return *this = *this / y; }

  friend bool operator==(const CScalar& x, const CScalar& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const CScalar& x, const CScalar& y) {
    return !(x == y);
  }

  std::complex<double> to_c() const { return {re.to_d(), im.to_d()}; }

  std::string str() const {
    if (im.is_zero()) return re.str();
    std::ostringstream os;
    if (!re.is_zero()) os << re.str() << (im.sign() >= 0 ? "+" : "");
    os << "(" << im.str() << ")i";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const CScalar& c) {
    return os << c.str();
  }
};

inline Rat rat_pow(const Rat& x, int n) {
  if (n < 0) return Rat(1) / rat_pow(x, -n);
  Rat r(1), b(x);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline CScalar cs_pow(const CScalar& x, int n) {
  if (n < 0) throw std::invalid_argument("cs_pow: negative exponent");
  CScalar r(1), b(x);
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

inline Rat factorial_rat(int n) {
  Rat r(1);
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Rat binomial_rat(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r(1);
  for (int j = 0; j < k; ++j) r = r * Rat(n - j) / Rat(j + 1);
  return r;
}

}  // namespace psqm
