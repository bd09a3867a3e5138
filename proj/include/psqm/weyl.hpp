#pragma once
// Exact noncommutative operator calculus.  A WeylOperator is a polynomial in
// the 2d phase-space coordinates (q_1..q_d, p_1..p_d) and the corresponding
// derivative symbols (dq_1..dq_d, dp_1..dp_d), stored in normal order:
// coordinates to the left of derivatives.  The only nontrivial rewrite is
// dx . x = x . dx + 1 for each conjugate pair.

#include "psqm/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace psqm {

// Multi-index over 4d slots: [0,d) coordinate q powers, [d,2d) coordinate p
// powers, [2d,3d) dq powers, [3d,4d) dp powers.
using MIdx = std::vector<int>;

inline int midx_total(const MIdx& m) {
  int s = 0;
  for (int v : m) s += v;
  return s;
}

class WeylOperator {
 public:
  int dim = 1;  // spatial dimension d; 4d index slots
  std::map<MIdx, CScalar> terms;

  WeylOperator() = default;
  explicit WeylOperator(int d) : dim(d) {}

  static WeylOperator zero(int d) { return WeylOperator(d); }
  static WeylOperator constant(int d, const CScalar& c) {
    WeylOperator w(d);
    w.add(MIdx(4 * d, 0), c);
    return w;
  }
  static WeylOperator identity(int d) { return constant(d, CScalar(1)); }
  // slot: 0 -> q_i, 1 -> p_i, 2 -> dq_i, 3 -> dp_i
  static WeylOperator monomial(int d, int slot, int i, const CScalar& c,
                               int pow = 1) {
    WeylOperator w(d);
    MIdx m(4 * d, 0);
    m[slot * d + i] = pow;
    w.add(m, c);
    return w;
  }
  static WeylOperator coord_q(int d, int i) { return monomial(d, 0, i, 1); }
  static WeylOperator coord_p(int d, int i) { return monomial(d, 1, i, 1); }
  static WeylOperator del_q(int d, int i) { return monomial(d, 2, i, 1); }
  static WeylOperator del_p(int d, int i) { return monomial(d, 3, i, 1); }

  void add(const MIdx& m, const CScalar& c) {
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
    for (const auto& [m, c] : terms) deg = std::max(deg, midx_total(m));
    return deg;
  }

  // True when the operator is c * identity; returns c through out.
  bool is_constant(CScalar& out) const {
    if (terms.empty()) {
      out = CScalar(0);
      return true;
    }
    if (terms.size() == 1 && midx_total(terms.begin()->first) == 0) {
      out = terms.begin()->second;
      return true;
    }
    return false;
  }

  WeylOperator operator-() const {
    WeylOperator r(dim);
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
  }
  friend WeylOperator operator+(const WeylOperator& x, const WeylOperator& y) {
    check_dims(x, y);
    WeylOperator r = x;
    for (const auto& [m, c] : y.terms) r.add(m, c);
    return r;
  }
  friend WeylOperator operator-(const WeylOperator& x, const WeylOperator& y) {
    return x + (-y);
  }
  friend WeylOperator operator*(const CScalar& c, const WeylOperator& x) {
    WeylOperator r(x.dim);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : x.terms) r.terms.emplace(m, c * t);
    return r;
  }
  WeylOperator& operator+=(const WeylOperator& y) { return *this = *this + y; }
  WeylOperator& operator-=(const WeylOperator& y) { return *this = *this - y; }

  friend bool operator==(const WeylOperator& x, const WeylOperator& y) {
    return x.dim == y.dim && (x - y).is_zero();
  }
  friend bool operator!=(const WeylOperator& x, const WeylOperator& y) {
    return !(x == y);
  }

  static void check_dims(const WeylOperator& x, const WeylOperator& y) {
    if (x.dim != y.dim)
      throw std::invalid_argument("WeylOperator: dimension mismatch");
  }

  std::string str() const;
  nlohmann::json to_json() const;
};

// Normal-ordered product.  For each variable v, moving dv^m past v^n uses
//   dv^m v^n = sum_k k! C(m,k) C(n,k) v^{n-k} dv^{m-k}.
inline WeylOperator compose(const WeylOperator& A, const WeylOperator& B) {
  WeylOperator::check_dims(A, B);
  const int d = A.dim;
  WeylOperator out(d);
  for (const auto& [ma, ca] : A.terms) {
    for (const auto& [mb, cb] : B.terms) {
      // Start from coefficient ca*cb; contract A's derivatives (slots 2,3)
      // against B's coordinates (slots 0,1), variable by variable.
      // Accumulate per-variable contraction choices via a running list of
      // (multi-index, coefficient) partial products.
      std::vector<std::pair<MIdx, CScalar>> acc;
      MIdx base(4 * d, 0);
      for (int s = 0; s < 4 * d; ++s) base[s] = ma[s] + mb[s];
      acc.emplace_back(base, ca * cb);
      for (int v = 0; v < 2 * d; ++v) {
        int m = ma[2 * d + v];  // A's derivative power for variable v
        int n = mb[v];          // B's coordinate power for variable v
        if (m == 0 || n == 0) continue;
        std::vector<std::pair<MIdx, CScalar>> next;
        int kmax = std::min(m, n);
        for (auto& [mi, co] : acc) {
          for (int k = 0; k <= kmax; ++k) {
            Rat f = factorial_rat(k) * binomial_rat(m, k) * binomial_rat(n, k);
            MIdx m2 = mi;
            m2[v] -= k;
            m2[2 * d + v] -= k;
            next.emplace_back(std::move(m2), co * CScalar(Surd(f)));
          }
        }
        acc = std::move(next);
      }
      for (auto& [mi, co] : acc) out.add(mi, co);
    }
  }
  return out;
}

inline WeylOperator commutator(const WeylOperator& A, const WeylOperator& B) {
  return compose(A, B) - compose(B, A);
}

inline std::string midx_var_name(int d, int slot_var) {
  int slot = slot_var / d, i = slot_var % d;
  std::string base = (slot % 2 == 0) ? "q" : "p";
  std::string v = (d == 1) ? base : base + std::to_string(i + 1);
  return (slot >= 2) ? "d/d" + v : v;
}

inline std::string WeylOperator::str() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) s += " + ";
    first = false;
    std::string mono;
    for (int sv = 0; sv < 4 * dim; ++sv) {
      for (int k = 0; k < m[sv]; ++k) {
        if (!mono.empty()) mono += " ";
        mono += midx_var_name(dim, sv);
      }
    }
    std::string cs = c.str();
    if (mono.empty())
      s += cs;
    else if (c == CScalar(1))
      s += mono;
    else
      s += "(" + cs + ") " + mono;
  }
  return s;
}

inline nlohmann::json surd_json(const Surd& s) {
  if (s.is_rational())
    return {numerator(s.a).str(), denominator(s.a).str()};
  return {numerator(s.a).str(), denominator(s.a).str(), numerator(s.b).str(),
          denominator(s.b).str(), numerator(s.d).str(), denominator(s.d).str()};
}

inline nlohmann::json WeylOperator::to_json() const {
  nlohmann::json j;
  j["dim"] = dim;
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& [m, c] : terms) {
    nlohmann::json t;
    t["index"] = m;
    t["re"] = surd_json(c.re);
    t["im"] = surd_json(c.im);
    ts.push_back(t);
  }
  j["terms"] = ts;
  return j;
}

}  // namespace psqm
