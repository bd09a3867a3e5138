#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psqm/rational.hpp"

using namespace psqm;

TEST_CASE("rational basics") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(rat_pow(Rat(2), -2) == Rat(1, 4));
  CHECK(factorial_rat(5) == Rat(120));
  CHECK(binomial_rat(7, 3) == Rat(35));
  CHECK(binomial_rat(3, 5) == Rat(0));
}

TEST_CASE("exact double conversion") {
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(-0.375) == Rat(-3, 8));
  CHECK(rat_from_double(3.0) == Rat(3));
  CHECK(rat_from_double(0.0) == Rat(0));
  // every double is dyadic: round trip must be exact
  double x = 0.1;
  CHECK(to_double(rat_from_double(x)) == x);
}

TEST_CASE("surd arithmetic in Q(sqrt(2))") {
  Surd s2 = Surd::sqrt_of(Rat(2));
  Surd x = Surd(Rat(1)) + s2;            // 1 + sqrt2
  Surd y = Surd(Rat(3)) - s2;            // 3 - sqrt2
  Surd p = x * y;                        // 3 + 2 sqrt2 - 2 = 1 + 2 sqrt2
  CHECK(p == Surd(Rat(1), Rat(2), Rat(2)));
  CHECK(s2 * s2 == Surd(Rat(2)));
  CHECK((x / x) == Surd(Rat(1)));
  Surd inv = Surd(Rat(1)) / x;           // 1/(1+sqrt2) = sqrt2 - 1
  CHECK(inv == Surd(Rat(-1), Rat(1), Rat(2)));
}

TEST_CASE("perfect square radicands collapse") {
  Surd s = Surd(Rat(0), Rat(3), Rat(9, 4));  // 3*sqrt(9/4) = 9/2
  CHECK(s.is_rational());
  CHECK(s == Surd(Rat(9, 2)));
  Surd one = Surd(Rat(2), Rat(5), Rat(1));   // 2 + 5*sqrt(1) = 7
  CHECK(one == Surd(Rat(7)));
}

TEST_CASE("surd sign and ordering") {
  Surd s2 = Surd::sqrt_of(Rat(2));
  CHECK((s2 - Surd(Rat(1))).sign() == 1);      // sqrt2 > 1
  CHECK((s2 - Surd(Rat(2))).sign() == -1);     // sqrt2 < 2
  CHECK((Surd(Rat(3, 2)) - s2).sign() == 1);   // 3/2 > sqrt2
  CHECK(Surd(Rat(0)).sign() == 0);
  CHECK((-s2).sign() == -1);
  CHECK(Surd(Rat(1)) < s2);
}

TEST_CASE("mixing distinct radicands is rejected") {
  Surd s2 = Surd::sqrt_of(Rat(2));
  Surd s3 = Surd::sqrt_of(Rat(3));
  CHECK_THROWS(s2 + s3);
  // rational values mix with anything
  CHECK((Surd(Rat(2)) * s3) == Surd(Rat(0), Rat(2), Rat(3)));
}

TEST_CASE("complex scalar field ops") {
  CScalar i = CScalar::i();
  CHECK(i * i == CScalar(-1));
  CScalar z(Surd(Rat(1)), Surd(Rat(2)));  // 1 + 2i
  CHECK(z * z.conj() == CScalar(5));
  CHECK(z / z == CScalar(1));
  CHECK(cs_pow(i, 4) == CScalar(1));
  CHECK(cs_pow(z, 2) == CScalar(Surd(Rat(-3)), Surd(Rat(4))));
  auto c = z.to_c();
  CHECK(c.real() == 1.0);
  CHECK(c.imag() == 2.0);
}

TEST_CASE("surd to double") {
  Surd s = Surd(Rat(1), Rat(1), Rat(2));
  CHECK(s.to_d() == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
}
