#pragma once
// Extended Galilei algebra in the phase-space (star) representation:
// generators, machine verification of the commutator table, terminating boost
// adjoint series, and Casimir checks.  Everything here is exact.

#include "psqm/weyl.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace psqm {

struct GeneratorSet {
  int dim = 3;
  Rat m{1}, t{0}, hbar{1};
  std::array<WeylOperator, 3> P, Q, K, L;
  std::array<WeylOperator, 3> Qbar, Pbar;  // multiplicative q*1, p*1
  WeylOperator H;
};

// Q_i = q_i + (i hbar/2) d/dp_i ; P_i = p_i - (i hbar/2) d/dq_i ;
// K_i = m Q_i - t P_i ; L_i = eps_ijk Q_j P_k ; H = P^2 / 2m.
inline GeneratorSet galilei_generators(const Rat& m, const Rat& t,
                                       const Rat& hbar) {
  if (m <= 0 || hbar <= 0)
    throw std::invalid_argument("galilei_generators: need m > 0 and hbar > 0");
  const int d = 3;
  GeneratorSet g;
  g.m = m;
  g.t = t;
  g.hbar = hbar;
  CScalar ih2 = CScalar(Surd(0), Surd(hbar / 2));  // i*hbar/2
  for (int i = 0; i < d; ++i) {
    g.Q[i] = WeylOperator::coord_q(d, i) + ih2 * WeylOperator::del_p(d, i);
    g.P[i] = WeylOperator::coord_p(d, i) - ih2 * WeylOperator::del_q(d, i);
    g.Qbar[i] = WeylOperator::coord_q(d, i);
    g.Pbar[i] = WeylOperator::coord_p(d, i);
    g.K[i] = CScalar(Surd(m)) * g.Q[i] - CScalar(Surd(t)) * g.P[i];
  }
  static const int eps[3][3][3] = {
      {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
      {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
      {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  for (int i = 0; i < d; ++i) {
    g.L[i] = WeylOperator::zero(d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (eps[i][j][k])
          g.L[i] += CScalar(eps[i][j][k]) * compose(g.Q[j], g.P[k]);
  }
  g.H = WeylOperator::zero(d);
  for (int i = 0; i < d; ++i) g.H += compose(g.P[i], g.P[i]);
  g.H = CScalar(Surd(Rat(1) / (2 * m))) * g.H;
  return g;
}

struct AlgebraCheck {
  std::string lhs, rhs;      // generator names
  std::string expected;      // human-readable expected commutator
  bool pass = false;
  WeylOperator computed;     // the computed commutator (for diagnostics)
};

struct AlgebraReport {
  std::vector<AlgebraCheck> checks;
  bool all_pass = true;
};

// Checks all 55 ordered-distinct + self pairs among {L1..L3,K1..K3,P1..P3,H}
// against the table: [L_i,L_j]=i hbar eps_ijk L_k, [L_i,K_j]=i hbar eps K_k,
// [L_i,P_j]=i hbar eps P_k, [K_i,P_j]=i hbar m delta_ij 1, [K_i,H]=i hbar P_i,
// all others zero.
inline AlgebraReport verify_galilei_algebra(const GeneratorSet& g) {
  const int d = 3;
  static const int eps[3][3][3] = {
      {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
      {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
      {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  CScalar ih = CScalar(Surd(0), Surd(g.hbar));

  struct Gen {
    std::string name;
    char kind;  // 'L','K','P','H'
    int i;
    const WeylOperator* op;
  };
  std::vector<Gen> gens;
  for (int i = 0; i < d; ++i)
    gens.push_back({"L" + std::to_string(i + 1), 'L', i, &g.L[i]});
  for (int i = 0; i < d; ++i)
    gens.push_back({"K" + std::to_string(i + 1), 'K', i, &g.K[i]});
  for (int i = 0; i < d; ++i)
    gens.push_back({"P" + std::to_string(i + 1), 'P', i, &g.P[i]});
  gens.push_back({"H", 'H', 0, &g.H});

  auto expected_comm = [&](const Gen& a, const Gen& b,
                           std::string& desc) -> WeylOperator {
    auto eps_combo = [&](char kind, int i, int j,
                         const std::array<WeylOperator, 3>& xs) {
      WeylOperator r = WeylOperator::zero(d);
      for (int k = 0; k < d; ++k)
        if (eps[i][j][k]) r += (CScalar(eps[i][j][k]) * ih) * xs[k];
      (void)kind;
      return r;
    };
    if (a.kind == 'L' && b.kind == 'L') {
      desc = "i hbar eps_ijk L_k";
      return eps_combo('L', a.i, b.i, g.L);
    }
    if (a.kind == 'L' && b.kind == 'K') {
      desc = "i hbar eps_ijk K_k";
      return eps_combo('K', a.i, b.i, g.K);
    }
    if (a.kind == 'K' && b.kind == 'L') {
      desc = "-i hbar eps_ijk K_k";
      return -eps_combo('K', a.i, b.i, g.K);
    }
    if (a.kind == 'L' && b.kind == 'P') {
      desc = "i hbar eps_ijk P_k";
      return eps_combo('P', a.i, b.i, g.P);
    }
    if (a.kind == 'P' && b.kind == 'L') {
      desc = "-i hbar eps_ijk P_k";
      return -eps_combo('P', a.i, b.i, g.P);
    }
    if (a.kind == 'K' && b.kind == 'P') {
      desc = a.i == b.i ? "i hbar m 1" : "0";
      if (a.i != b.i) return WeylOperator::zero(d);
      return WeylOperator::constant(d, ih * CScalar(Surd(g.m)));
    }
    if (a.kind == 'P' && b.kind == 'K') {
      desc = a.i == b.i ? "-i hbar m 1" : "0";
      if (a.i != b.i) return WeylOperator::zero(d);
      return WeylOperator::constant(d, -(ih * CScalar(Surd(g.m))));
    }
    if (a.kind == 'K' && b.kind == 'H') {
      desc = "i hbar P_i";
      return ih * g.P[a.i];
    }
    if (a.kind == 'H' && b.kind == 'K') {
      desc = "-i hbar P_i";
      return -(ih * g.P[b.i]);
    }
    desc = "0";
    return WeylOperator::zero(d);
  };

  AlgebraReport rep;
  for (size_t a = 0; a < gens.size(); ++a) {
    for (size_t b = a; b < gens.size(); ++b) {
      AlgebraCheck c;
      c.lhs = gens[a].name;
      c.rhs = gens[b].name;
      c.computed = commutator(*gens[a].op, *gens[b].op);
      WeylOperator want = expected_comm(gens[a], gens[b], c.expected);
      c.pass = (c.computed == want);
      rep.all_pass = rep.all_pass && c.pass;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

// exp(-i v.K/hbar) X exp(+i v.K/hbar) by the terminating adjoint series.
inline WeylOperator boost_adjoint(const GeneratorSet& g, const WeylOperator& X,
                                  const std::array<Rat, 3>& v,
                                  int order_cap = 8) {
  const int d = 3;
  WeylOperator Y = WeylOperator::zero(d);  // -i v.K / hbar
  for (int i = 0; i < d; ++i)
    Y += CScalar(Surd(0), Surd(-v[i] / g.hbar)) * g.K[i];
  WeylOperator result = X;
  WeylOperator nested = X;
  Rat fact(1);
  for (int n = 1; !nested.is_zero(); ++n) {
    if (n > order_cap)
      throw std::runtime_error(
          "boost_adjoint: series did not terminate within order cap");
    nested = commutator(Y, nested);
    fact *= n;
    result += CScalar(Surd(Rat(1) / fact)) * nested;
  }
  return result;
}

struct CasimirReport {
  WeylOperator I1;
  std::array<WeylOperator, 3> I2;
  bool I1_zero = false, I2_zero = false;
};

// I1 = H - P^2/2m ; I2 = L - (1/m) K x P.  Both vanish identically in the
// scalar representation.
inline CasimirReport casimir_check(const GeneratorSet& g) {
  const int d = 3;
  static const int eps[3][3][3] = {
      {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
      {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
      {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  CasimirReport rep;
  WeylOperator P2 = WeylOperator::zero(d);
  for (int i = 0; i < d; ++i) P2 += compose(g.P[i], g.P[i]);
  rep.I1 = g.H - CScalar(Surd(Rat(1) / (2 * g.m))) * P2;
  rep.I1_zero = rep.I1.is_zero();
  rep.I2_zero = true;
  for (int i = 0; i < d; ++i) {
    WeylOperator kxp = WeylOperator::zero(d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (eps[i][j][k])
          kxp += CScalar(eps[i][j][k]) * compose(g.K[j], g.P[k]);
    rep.I2[i] = g.L[i] - CScalar(Surd(Rat(1) / g.m)) * kxp;
    rep.I2_zero = rep.I2_zero && rep.I2[i].is_zero();
  }
  return rep;
}

}  // namespace psqm
