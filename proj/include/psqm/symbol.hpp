#pragma once
// Commutative polynomial symbols a(q,p) over the 2d phase variables, and the
// noncommutativity parameters (hbar, theta).  Coefficients are exact scalars;
// a float-mode flag records that inputs originated from floating point so the
// eigen checks fall back to the 1e-12 relative tolerance.

#include "psqm/rational.hpp"

#include <json.hpp>

#include <map>
#include <vector>

namespace psqm {

// Index over 2d slots: [0,d) q powers, [d,2d) p powers.
using SIdx = std::vector<int>;

struct NCParams {
  Rat hbar{1};
  Rat theta{0};
  NCParams() = default;
  NCParams(const Rat& h, const Rat& th = Rat(0)) : hbar(h), theta(th) {
    if (hbar <= 0) throw std::invalid_argument("NCParams: hbar must be > 0");
  }
  static NCParams from_doubles(double h, double th) {
    return NCParams(rat_from_double(h), rat_from_double(th));
  }
};

class PolynomialSymbol {
 public:
  int dim = 1;           // spatial dimension d; 2d variables
  bool float_mode = false;
  std::map<SIdx, CScalar> terms;

  PolynomialSymbol() = default;
  explicit PolynomialSymbol(int d, bool fm = false) : dim(d), float_mode(fm) {}

  static PolynomialSymbol zero(int d) { return PolynomialSymbol(d); }
  static PolynomialSymbol constant(int d, const CScalar& c) {
    PolynomialSymbol s(d);
    s.add(SIdx(2 * d, 0), c);
    return s;
  }
  // var in [0, 2d): q_1..q_d then p_1..p_d
  static PolynomialSymbol variable(int d, int var, int pow = 1) {
    PolynomialSymbol s(d);
    SIdx m(2 * d, 0);
    m[var] = pow;
    s.add(m, CScalar(1));
    return s;
  }

  void add(const SIdx& m, const CScalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }
  int degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms) deg = std::max(deg, midx_total_s(m));
    return deg;
  }
  static int midx_total_s(const SIdx& m) {
    int s = 0;
    for (int v : m) s += v;
    return s;
  }

  PolynomialSymbol operator-() const {
    PolynomialSymbol r(dim, float_mode);
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
  }
  friend PolynomialSymbol operator+(const PolynomialSymbol& x,
                                    const PolynomialSymbol& y) {
    check_dims(x, y);
    PolynomialSymbol r = x;
    r.float_mode = x.float_mode || y.float_mode;
    for (const auto& [m, c] : y.terms) r.add(m, c);
    return r;
  }
  friend PolynomialSymbol operator-(const PolynomialSymbol& x,
                                    const PolynomialSymbol& y) {
    return x + (-y);
  }
  friend PolynomialSymbol operator*(const CScalar& c,
                                    const PolynomialSymbol& x) {
    PolynomialSymbol r(x.dim, x.float_mode);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : x.terms) r.terms.emplace(m, c * t);
    return r;
  }
  friend PolynomialSymbol operator*(const PolynomialSymbol& x,
                                    const PolynomialSymbol& y) {
    check_dims(x, y);
    PolynomialSymbol r(x.dim, x.float_mode || y.float_mode);
    for (const auto& [mx, cx] : x.terms)
      for (const auto& [my, cy] : y.terms) {
        SIdx m(mx.size());
        for (size_t k = 0; k < m.size(); ++k) m[k] = mx[k] + my[k];
        r.add(m, cx * cy);
      }
    return r;
  }
  PolynomialSymbol& operator+=(const PolynomialSymbol& y) {
    return *this = *this + y;
  }
  PolynomialSymbol& operator-=(const PolynomialSymbol& y) {
    return *this = *this - y;
  }

  friend bool operator==(const PolynomialSymbol& x, const PolynomialSymbol& y) {
    return x.dim == y.dim && (x - y).is_zero();
  }
  friend bool operator!=(const PolynomialSymbol& x, const PolynomialSymbol& y) {
    return !(x == y);
  }

  // partial derivative with respect to variable var
  PolynomialSymbol deriv(int var) const {
    PolynomialSymbol r(dim, float_mode);
    for (const auto& [m, c] : terms) {
      if (m[var] == 0) continue;
      SIdx m2 = m;
      m2[var] -= 1;
      r.add(m2, CScalar(m[var]) * c);
    }
    return r;
  }

  std::complex<double> eval(const std::vector<double>& u) const {
    std::complex<double> s = 0.0;
    for (const auto& [m, c] : terms) {
      double mono = 1.0;
      for (size_t v = 0; v < m.size(); ++v)
        for (int k = 0; k < m[v]; ++k) mono *= u[v];
      s += c.to_c() * mono;
    }
    return s;
  }

  bool all_real() const {
    for (const auto& [m, c] : terms)
      if (!c.is_real()) return false;
    return true;
  }

  PolynomialSymbol conjugated() const {
    PolynomialSymbol r(dim, float_mode);
    for (const auto& [m, c] : terms) r.terms.emplace(m, c.conj());
    return r;
  }

  static void check_dims(const PolynomialSymbol& x, const PolynomialSymbol& y) {
    if (x.dim != y.dim)
      throw std::invalid_argument("PolynomialSymbol: dimension mismatch");
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["dim"] = dim;
    j["float_mode"] = float_mode;
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& [m, c] : terms) {
      nlohmann::json t;
      t["index"] = m;
      t["re"] = surd_json_s(c.re);
      t["im"] = surd_json_s(c.im);
      ts.push_back(t);
    }
    j["terms"] = ts;
    return j;
  }

 private:
  static nlohmann::json surd_json_s(const Surd& s) {
    if (s.is_rational())
      return {numerator(s.a).str(), denominator(s.a).str()};
    return {numerator(s.a).str(),  denominator(s.a).str(),
            numerator(s.b).str(),  denominator(s.b).str(),
            numerator(s.d).str(),  denominator(s.d).str()};
  }
};

}  // namespace psqm
