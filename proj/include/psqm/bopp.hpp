#pragma once
// Bopp shifts: turn a polynomial symbol a(q,p) into the differential operator
// a(q,p)* (left star multiplication).  Built from the expansion
//   a* = sum_{k} prod_j [(i c_j/2)^{k_j} / k_j!] (D_L^{k} a)(q,p) . D_R^{k}
// over the elementary bidifferential pairs of the product
//   exp{ (i hbar/2) sum_i (<dq_i dp_i> - <dp_i dq_i>)
//        + (i theta/2)(<dx dy> - <dy dx>) - (i theta/2)(<dpx dpy> - <dpy dpx>) }
// (left factor differentiates the symbol, right factor becomes a derivative
// acting on whatever the operator is applied to).  The expansion is finite for
// polynomial symbols and lands directly in normal order, which also resolves
// the operator-ordering of products like (xy)* as the symmetric (Weyl) one.
// With theta = 0 this is exactly the Moyal Bopp shift
//   q_i -> q_i + (i hbar/2) d/dp_i,  p_i -> p_i - (i hbar/2) d/dq_i.

#include "psqm/symbol.hpp"
#include "psqm/weyl.hpp"

#include <array>
#include <vector>

namespace psqm {

struct BidiffPair {
  Rat c;       // coefficient multiplying i/2 in the exponent
  int left;    // variable index differentiating the symbol (0..2d-1)
  int right;   // variable index of the outgoing derivative (0..2d-1)
};

inline std::vector<BidiffPair> star_pairs(int d, const NCParams& nc) {
  std::vector<BidiffPair> ps;
  for (int i = 0; i < d; ++i) {
    ps.push_back({nc.hbar, i, d + i});       // <dq_i dp_i>
    ps.push_back({-nc.hbar, d + i, i});      // -<dp_i dq_i>
  }
  if (nc.theta != 0) {
    if (d != 2)
      throw std::invalid_argument("star_pairs: theta != 0 requires d == 2");
    ps.push_back({nc.theta, 0, 1});    // +theta <dx dy>
    ps.push_back({-nc.theta, 1, 0});   // -theta <dy dx>
    ps.push_back({-nc.theta, 2, 3});   // -theta <dpx dpy>
    ps.push_back({nc.theta, 3, 2});    // +theta <dpy dpx>
  }
  return ps;
}

namespace detail {
inline void bopp_rec(const PolynomialSymbol& cur, const CScalar& coeff,
                     const std::vector<BidiffPair>& pairs, size_t j,
                     MIdx& dpow, WeylOperator& out) {
  if (j == pairs.size()) {
    const int d = cur.dim;
    for (const auto& [m, c] : cur.terms) {
      MIdx full(4 * d, 0);
      for (int v = 0; v < 2 * d; ++v) full[v] = m[v];
      for (int v = 0; v < 2 * d; ++v) full[2 * d + v] = dpow[v];
      out.add(full, coeff * c);
    }
    return;
  }
  const BidiffPair& pr = pairs[j];
  // (i c/2)^k / k! accumulated incrementally
  PolynomialSymbol da = cur;
  CScalar co = coeff;
  CScalar step = CScalar(Surd(0), Surd(pr.c / 2));  // i c/2
  int incs = 0;
  for (int k = 0; !da.is_zero(); ++k) {
    if (k > 0) {
      dpow[pr.right] += 1;
      ++incs;
    }
    bopp_rec(da, co, pairs, j + 1, dpow, out);
    da = da.deriv(pr.left);
    co = co * step / CScalar(k + 1);
  }
  dpow[pr.right] -= incs;
}
}  // namespace detail

inline WeylOperator bopp_operator(const PolynomialSymbol& a,
                                  const NCParams& nc) {
  const int d = a.dim;
  if (nc.theta != 0 && d != 2)
    throw std::invalid_argument("bopp_operator: theta != 0 requires d == 2");
  auto pairs = star_pairs(d, nc);
  WeylOperator out(d);
  MIdx dpow(2 * d, 0);
  detail::bopp_rec(a, CScalar(1), pairs, 0, dpow, out);
  return out;
}

// The 4x4 table of constant parts of [u_a*, u_b*] over (x, y, px, py)
// for d = 2.  Must match [q_i,p_j] = i hbar delta_ij, [q_i,q_j] = i theta_ij,
// [p_i,p_j] = -i theta_ij.
inline std::array<std::array<CScalar, 4>, 4> star_commutator_constants(
    const NCParams& nc) {
  const int d = 2;
  std::array<WeylOperator, 4> ops;
  for (int v = 0; v < 4; ++v)
    ops[v] = bopp_operator(PolynomialSymbol::variable(d, v), nc);
  std::array<std::array<CScalar, 4>, 4> table;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      WeylOperator c = commutator(ops[a], ops[b]);
      CScalar val;
      if (!c.is_constant(val))
        throw std::logic_error(
            "star_commutator_constants: non-constant commutator");
      table[a][b] = val;
    }
  return table;
}

}  // namespace psqm
