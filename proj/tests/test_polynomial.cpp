#include <doctest.h>

#include "ricopoly/polynomial.hpp"

using namespace ricopoly;
using PolyR = Polynomial<Rational>;

TEST_CASE("rational parsing handles integers, fractions and decimals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1/4") == Rational(-1, 4));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-2.5e-2") == Rational(-1, 40));
  CHECK(parse_rational(" 5 / 24 ") == Rational(5, 24));
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("abc"), UsageError);
  CHECK(rational_string(Rational(-3, 7)) == "-3/7");
  CHECK(rational_string(Rational(6)) == "6");
}

TEST_CASE("degree bookkeeping and the zero polynomial") {
  PolyR z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.value_at(Rational(17)) == 0);

  PolyR trimmed(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
  CHECK(trimmed.degree() == 0);

  PolyR p(std::vector<Rational>{Rational(3, 4), Rational(-9, 4), Rational(1)});
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK(p.value_at(Rational(2)) == Rational(1, 4));
  CHECK(p.coeff(5) == 0);
}

TEST_CASE("arithmetic agrees with pointwise evaluation") {
  PolyR p(std::vector<Rational>{Rational(1), Rational(2), Rational(1)});
  PolyR q(std::vector<Rational>{Rational(-1, 3), Rational(1)});
  for (int num = -5; num <= 5; ++num) {
    const Rational z(num, 3);
    CHECK((p * q).value_at(z) == p.value_at(z) * q.value_at(z));
    CHECK((p + q).value_at(z) == p.value_at(z) + q.value_at(z));
    CHECK((p - q).value_at(z) == p.value_at(z) - q.value_at(z));
  }
}

TEST_CASE("derivative and reversal") {
  PolyR p(std::vector<Rational>{Rational(5), Rational(3), Rational(1)});
  CHECK(p.derivative() == PolyR(std::vector<Rational>{Rational(3), Rational(2)}));
  CHECK(p.reversed() == PolyR(std::vector<Rational>{Rational(1), Rational(3), Rational(5)}));
}

TEST_CASE("float equality uses the scaled coefficient bound") {
  Polynomial<double> p(std::vector<double>{1.0, 2.0});
  Polynomial<double> q(std::vector<double>{1.0 + 1e-12, 2.0});
  CHECK(poly_close(p, q, 1e-10));
  CHECK_FALSE(poly_close(p, Polynomial<double>(std::vector<double>{1.1, 2.0}), 1e-10));
}

TEST_CASE("matrix identities") {
  using M = Mat2<Rational>;
  const PolyR x = PolyR::x();
  M m{x, PolyR::one(), PolyR::constant(Rational(2)), x * x};
  CHECK(m.det() == x * (x * x) - PolyR::constant(Rational(2)));
  const M cof = m.cofactor();
  CHECK(cof.a == x * x);
  CHECK(cof.b == -PolyR::constant(Rational(2)));
  // m * adj(m) = det * I with adj = cofactor transpose
  const M adj{cof.a, cof.c, cof.b, cof.d};
  const M prod = m * adj;
  CHECK(prod.a == m.det());
  CHECK(prod.d == m.det());
  CHECK(prod.b.is_zero());
  CHECK(prod.c.is_zero());

  CHECK(proportional(m, Rational(7) * PolyR::one() * m));
  M other = m;
  other.b = other.b + PolyR::one();
  CHECK_FALSE(proportional(m, other));
}

TEST_CASE("coefficient serialization") {
  PolyR p(std::vector<Rational>{Rational(-1, 2), Rational(3)});
  const auto s = coeff_strings(p);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "-1/2");
  CHECK(s[1] == "3");
}
