#include "doctest.h"

#include "kn/cyclotomic.hpp"
#include "kn/error.hpp"
#include "kn/parse.hpp"
#include "kn/rational.hpp"
#include "support/random.hpp"

using kn::CycScalar;
using kn::Rational;

TEST_CASE("rational canonical form and overflow spill") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7).is_zero());
  CHECK_THROWS_AS(Rational(1, 0), kn::DivisionByZero);
  Rational big = Rational(std::int64_t(1) << 62);
  Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK((sq / big) == big);
  CHECK((sq / big).is_small());
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(kn::binomial(Rational(5, 2), 2) == Rational(15, 8));
  CHECK(kn::binomial(Rational(3), 5) == Rational(0));
  CHECK(kn::falling_factorial(Rational(3, 2), 2) == Rational(3, 4));
}

TEST_CASE("cyclotomic polynomials by recursive division") {
  auto phi = [](int n) {
    std::vector<std::string> out;
    for (const auto& c : kn::cyclotomic_polynomial(n)) out.push_back(c.to_string());
    return out;
  };
  CHECK(phi(1) == std::vector<std::string>{"-1", "1"});
  CHECK(phi(4) == std::vector<std::string>{"1", "0", "1"});
  CHECK(phi(3) == std::vector<std::string>{"1", "1", "1"});
  CHECK(phi(12) == std::vector<std::string>{"1", "0", "-1", "0", "1"});
  for (int n = 1; n <= 24; ++n)
    CHECK(static_cast<int>(kn::cyclotomic_polynomial(n).size()) - 1 == kn::euler_phi(n));
}

TEST_CASE("zeta powers") {
  CHECK(CycScalar::zeta(1, 5) == CycScalar(1));
  CHECK(CycScalar::zeta(2, 1) == CycScalar(-1));
  // zeta_4^3 = i * i * i computed by repeated multiplication.
  CycScalar i = CycScalar::imag_unit();
  CHECK(CycScalar::zeta(4, 3) == i * i * i);
  CHECK(CycScalar::zeta(4, 3) == -i);
  CHECK(CycScalar::zeta(4, 3).to_string() == "-i");
}

TEST_CASE("field operations") {
  CycScalar i = CycScalar::imag_unit();
  CHECK(i * i == CycScalar(-1));
  CHECK(CycScalar(2).inverse() == CycScalar(Rational(1, 2)));
  CHECK(CycScalar::zeta(3, 1) * CycScalar::zeta(3, 2) == CycScalar(1));
  CHECK((CycScalar::zeta(3, 1) * CycScalar::zeta(3, 2)).is_rational());
  CHECK_THROWS_AS(CycScalar().inverse(), kn::DivisionByZero);
  // Mixed orders meet in Q(zeta_12).
  CycScalar w = CycScalar::zeta(3, 1) + i;
  CHECK(w.order() == 12);
  CHECK(w - i == CycScalar::zeta(3, 1));
  // zeta_8^2 = i after reduction by a common embedding.
  CHECK(CycScalar::zeta(8, 2) == i);
  CHECK(CycScalar::zeta(6, 1) + CycScalar::zeta(6, 5) == CycScalar(1));
}

TEST_CASE("field axioms on random triples") {
  kn::testing::Gen g(11);
  const int orders[] = {1, 3, 4, 5, 8, 12, 24};
  for (int rep = 0; rep < 60; ++rep) {
    int n1 = orders[g.range(0, 6)], n2 = orders[g.range(0, 6)], n3 = orders[g.range(0, 6)];
    CycScalar a = g.scalar(n1), b = g.scalar(n2), c = g.scalar(n3);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CycScalar(1));
  }
}

TEST_CASE("embedding commutes with arithmetic") {
  kn::testing::Gen g(12);
  for (int rep = 0; rep < 40; ++rep) {
    int n = static_cast<int>(g.range(1, 8));
    int k = static_cast<int>(g.range(1, 3));
    CycScalar a = g.scalar(n), b = g.scalar(n);
    CHECK((a * b).embed(n * k) == a.embed(n * k) * b.embed(n * k));
    CHECK((a + b).embed(n * k) == a.embed(n * k) + b.embed(n * k));
    CHECK(a.embed(n * k) == a);
  }
}

TEST_CASE("scalar rendering round trip") {
  kn::testing::Gen g(13);
  for (int rep = 0; rep < 40; ++rep) {
    int n = static_cast<int>(g.range(1, 12));
    CycScalar a = g.scalar(n);
    CHECK(kn::parse_scalar(a.to_string()) == a);
  }
  CHECK(kn::parse_scalar("3/2 + 2*i").to_string() == "3/2 + 2*i");
  CHECK_THROWS_AS(kn::parse_scalar("t"), kn::ParseError);
}
