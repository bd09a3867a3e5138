#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psqm/weyl.hpp"

#include <random>

using namespace psqm;

namespace {

WeylOperator random_op(std::mt19937& rng, int d, int max_deg, int n_terms) {
  std::uniform_int_distribution<int> coin(0, 2), num(-3, 3);
  WeylOperator w(d);
  for (int t = 0; t < n_terms; ++t) {
    MIdx m(4 * d, 0);
    int deg = 0;
    while (deg < max_deg) {
      int slot = std::uniform_int_distribution<int>(0, 4 * d - 1)(rng);
      if (coin(rng) == 0) break;
      m[slot] += 1;
      ++deg;
    }
    int a = num(rng), b = num(rng);
    w.add(m, CScalar(Surd(Rat(a)), Surd(Rat(b))));
  }
  return w;
}

}  // namespace

TEST_CASE("compose rewrites dq q = q dq + 1") {
  int d = 1;
  auto q = WeylOperator::coord_q(d, 0);
  auto dq = WeylOperator::del_q(d, 0);
  auto r = compose(dq, q);
  auto want = compose(q, dq) + WeylOperator::identity(d);
  CHECK(r == want);
  // already normal ordered: q dq stays q dq
  CHECK(compose(q, dq).terms.size() == 1);
}

TEST_CASE("compose handles higher powers: dq^2 q^2 = q^2 dq^2 + 4 q dq + 2") {
  int d = 1;
  auto q2 = WeylOperator::monomial(d, 0, 0, CScalar(1), 2);
  auto dq2 = WeylOperator::monomial(d, 2, 0, CScalar(1), 2);
  auto r = compose(dq2, q2);
  WeylOperator want(d);
  {
    MIdx m(4, 0);
    m[0] = 2; m[2] = 2;
    want.add(m, CScalar(1));
    MIdx m2(4, 0);
    m2[0] = 1; m2[2] = 1;
    want.add(m2, CScalar(4));
    want.add(MIdx(4, 0), CScalar(2));
  }
  CHECK(r == want);
}

TEST_CASE("canonical Q,P commutator gives i hbar") {
  int d = 1;
  Rat hbar(1);
  CScalar ih2(Surd(0), Surd(hbar / 2));
  auto Q = WeylOperator::coord_q(d, 0) + ih2 * WeylOperator::del_p(d, 0);
  auto P = WeylOperator::coord_p(d, 0) - ih2 * WeylOperator::del_q(d, 0);
  auto c = commutator(Q, P);
  CHECK(c == WeylOperator::constant(d, CScalar(Surd(0), Surd(hbar))));
  // multiplicative coordinates commute
  auto qbar = WeylOperator::coord_q(d, 0);
  auto pbar = WeylOperator::coord_p(d, 0);
  CHECK(commutator(qbar, pbar).is_zero());
}

TEST_CASE("commutator antisymmetry on random operators") {
  std::mt19937 rng(12345);
  for (int rep = 0; rep < 20; ++rep) {
    int d = 1 + rep % 2;
    auto A = random_op(rng, d, 4, 4);
    auto B = random_op(rng, d, 4, 4);
    CHECK(commutator(A, B) == -commutator(B, A));
  }
}

TEST_CASE("Jacobi identity on random degree-3 triples") {
  std::mt19937 rng(777);
  for (int rep = 0; rep < 10; ++rep) {
    int d = 1;
    auto A = random_op(rng, d, 3, 3);
    auto B = random_op(rng, d, 3, 3);
    auto C = random_op(rng, d, 3, 3);
    auto j = commutator(A, commutator(B, C)) +
             commutator(B, commutator(C, A)) +
             commutator(C, commutator(A, B));
    CHECK(j.is_zero());
  }
}

TEST_CASE("compose is associative on random degree-3 triples") {
  std::mt19937 rng(4242);
  for (int rep = 0; rep < 10; ++rep) {
    int d = 1 + rep % 2;
    auto A = random_op(rng, d, 3, 3);
    auto B = random_op(rng, d, 3, 3);
    auto C = random_op(rng, d, 3, 3);
    CHECK(compose(compose(A, B), C) == compose(A, compose(B, C)));
  }
}

TEST_CASE("composition degree bound") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 10; ++rep) {
    auto A = random_op(rng, 1, 4, 3);
    auto B = random_op(rng, 1, 4, 3);
    auto C = compose(A, B);
    if (!A.is_zero() && !B.is_zero())
      CHECK(C.degree() <= A.degree() + B.degree());
  }
}

TEST_CASE("no zero-coefficient terms survive") {
  int d = 1;
  auto q = WeylOperator::coord_q(d, 0);
  auto r = q - q;
  CHECK(r.terms.empty());
  std::mt19937 rng(5);
  auto A = random_op(rng, 1, 3, 4);
  for (auto& [m, c] : compose(A, A).terms) CHECK(!c.is_zero());
}

TEST_CASE("dimension mismatch rejected") {
  auto a = WeylOperator::coord_q(1, 0);
  auto b = WeylOperator::coord_q(2, 0);
  CHECK_THROWS(compose(a, b));
}

TEST_CASE("pretty printer") {
  int d = 1;
  auto Q = WeylOperator::coord_q(d, 0) +
           CScalar(Surd(0), Surd(Rat(1, 2))) * WeylOperator::del_p(d, 0);
  auto s = Q.str();
  CHECK(s.find("q") != std::string::npos);
  CHECK(s.find("d/dp") != std::string::npos);
  CHECK(WeylOperator::zero(1).str() == "0");
}

TEST_CASE("json dump round structure") {
  int d = 2;
  auto Q = WeylOperator::coord_q(d, 1);
  auto j = Q.to_json();
  CHECK(j["dim"] == 2);
  CHECK(j["terms"].size() == 1);
  CHECK(j["terms"][0]["index"].size() == 8);
}
