#include "doctest.h"

#include "kn/error.hpp"
#include "kn/superconf.hpp"
#include "support/random.hpp"

using kn::ConfElem;
using kn::CycScalar;
using kn::DRing;
using kn::NamedAtom;
using kn::Rational;
using kn::SCElem;
using kn::SuperconformalAlgebra;
using kn::Twist;

namespace {

const CycScalar I = CycScalar::imag_unit();

ConfElem rep(const SuperconformalAlgebra& alg, int dpow, kn::Mask mask, const Rational& q, const CycScalar& c = 1) {
  return ConfElem::atom(alg.n_vars(), alg.ring(), dpow, mask, alg.ring().index_of(q), c);
}

int psign(const SuperconformalAlgebra& alg, const NamedAtom& a, const NamedAtom& b) {
  return kn::atom_parity(alg.n_vars(), a) * kn::atom_parity(alg.n_vars(), b) ? -1 : 1;
}

}  // namespace

TEST_CASE("normal form reduces d^l with falling factorials") {
  SuperconformalAlgebra a1(1, Twist::id);
  CHECK(kn::normal_form(a1, rep(a1, 1, 0, 1)).rep == rep(a1, 0, 0, 0, -1));
  CHECK(kn::normal_form(a1, rep(a1, 1, 0, 0)).is_zero());
  CHECK(kn::normal_form(a1, rep(a1, 2, 0, 3)).rep == rep(a1, 0, 0, 1, 6));

  SuperconformalAlgebra w1(1, Twist::omega);
  CHECK(kn::normal_form(w1, rep(w1, 2, 1, Rational(3, 2))).rep == rep(w1, 0, 1, Rational(-1, 2), Rational(3, 4)));
  CHECK(kn::normal_form(w1, rep(w1, 1, 1, Rational(1, 2))).rep == rep(w1, 0, 1, Rational(-1, 2), Rational(-1, 2)));
}

TEST_CASE("normal form rejects elements outside the loop algebra") {
  SuperconformalAlgebra a1(1, Twist::id);
  CHECK_THROWS_AS(kn::normal_form(a1, rep(a1, 0, 1, Rational(1, 2))), kn::InvalidArgument);
  SuperconformalAlgebra w3(3, Twist::omega);
  CHECK_THROWS_AS(kn::normal_form(w3, rep(w3, 0, 1, Rational(1))), kn::InvalidArgument);
  CHECK_NOTHROW(kn::normal_form(w3, rep(w3, 0, 3, Rational(1))));
  ConfElem other = ConfElem::atom(1, DRing::laurent(1), 0, 0);
  CHECK_THROWS_AS(kn::normal_form(a1, other), kn::RingMismatch);
}

TEST_CASE("named atoms") {
  SuperconformalAlgebra a3(3, Twist::id), w3(3, Twist::omega);
  CHECK(kn::named(a3, kn::L(0)).rep == rep(a3, 0, 0, 1, -1));
  CHECK(kn::named(w3, kn::Psi(0)).rep == rep(w3, 0, 7, Rational(-1, 2), CycScalar(-2) * I));
  CHECK(kn::named(a3, kn::T(1, 2)).rep == rep(a3, 0, 6, 2, CycScalar(2) * I));
  // T^2 = 2i xi_3 xi_1 = -2i xi_1 xi_3
  CHECK(kn::named(a3, kn::T(2, 0)).rep == rep(a3, 0, 5, 0, CycScalar(-2) * I));
  CHECK(kn::named(a3, kn::G(2, Rational(1, 2))).rep == rep(a3, 0, 2, 1, 2));

  CHECK(kn::atom_exists(a3, kn::G(1, Rational(1, 2))));
  CHECK_FALSE(kn::atom_exists(a3, kn::G(1, 0)));
  CHECK(kn::atom_exists(w3, kn::G(1, 0)));
  CHECK_FALSE(kn::atom_exists(w3, kn::G(1, Rational(1, 2))));
  CHECK_FALSE(kn::atom_exists(a3, kn::L(Rational(1, 2))));
  CHECK_FALSE(kn::atom_exists(SuperconformalAlgebra(2, Twist::id), kn::Psi(Rational(1, 2))));
  CHECK_THROWS_AS(kn::named(a3, kn::G(1, 0)), kn::InvalidArgument);

  // omega_2 fixes xi_2 and negates xi_1 and xi_1 xi_2
  SuperconformalAlgebra w2(2, Twist::omega);
  CHECK(kn::atom_exists(w2, kn::G(1, 0)));
  CHECK(kn::atom_exists(w2, kn::G(2, Rational(1, 2))));
  CHECK(kn::atom_exists(w2, kn::T(0, Rational(1, 2))));
  CHECK_FALSE(kn::atom_exists(w2, kn::T(0, 0)));
}

TEST_CASE("atom names render") {
  CHECK(kn::G(1, Rational(1, 2)).to_string() == "G^1_{1/2}");
  CHECK(kn::T(0, -1).to_string() == "T_-1");
  CHECK(kn::T(3, 2).to_string() == "T^3_2");
  CHECK(kn::Psi(Rational(5, 2)).to_string() == "Psi_{5/2}");
  CHECK(kn::L(0).to_string() == "L_0");
}

TEST_CASE("decompose inverts named") {
  for (int n = 1; n <= 3; ++n)
    for (Twist tw : {Twist::id, Twist::omega}) {
      SuperconformalAlgebra alg(n, tw);
      for (const NamedAtom& a : kn::named_basis(alg, 2)) {
        auto e = kn::decompose(kn::named(alg, a));
        REQUIRE(e.size() == 1);
        CHECK(e[0].first == a);
        CHECK(e[0].second.is_one());
      }
    }
}

TEST_CASE("sample brackets") {
  SuperconformalAlgebra a3(3, Twist::id);
  auto br = [&](const NamedAtom& x, const NamedAtom& y) {
    return kn::render(kn::decompose(kn::bracket(kn::named(a3, x), kn::named(a3, y))));
  };
  CHECK(br(kn::L(1), kn::L(-1)) == "2*L_0");
  CHECK(br(kn::T(3, 0), kn::T(1, 0)) == "i*T^2_0");
  CHECK(br(kn::G(1, Rational(1, 2)), kn::G(1, Rational(-1, 2))) == "2*L_0");
  CHECK(br(kn::G(1, Rational(1, 2)), kn::G(2, Rational(-1, 2))) == "i*T^3_0");
  CHECK(br(kn::G(2, Rational(1, 2)), kn::Psi(Rational(-1, 2))) == "T^2_0");
  CHECK(br(kn::T(1, 1), kn::G(1, Rational(1, 2))) == "Psi_{3/2}");
  CHECK(br(kn::Psi(Rational(1, 2)), kn::Psi(Rational(-1, 2))) == "0");
}

TEST_CASE("bracket antisymmetry with parity on window 2") {
  for (int n = 1; n <= 3; ++n)
    for (Twist tw : {Twist::id, Twist::omega}) {
      SuperconformalAlgebra alg(n, tw);
      auto basis = kn::named_basis(alg, 2);
      for (const auto& x : basis)
        for (const auto& y : basis) {
          SCElem xy = kn::bracket(kn::named(alg, x), kn::named(alg, y));
          SCElem yx = kn::bracket(kn::named(alg, y), kn::named(alg, x));
          CHECK(xy == yx * CycScalar(-psign(alg, x, y)));
        }
    }
}

TEST_CASE("super Jacobi identity on window 1") {
  for (int n = 1; n <= 3; ++n)
    for (Twist tw : {Twist::id, Twist::omega}) {
      SuperconformalAlgebra alg(n, tw);
      auto basis = kn::named_basis(alg, 1);
      std::vector<SCElem> el;
      for (const auto& a : basis) el.push_back(kn::named(alg, a));
      std::size_t bad = 0;
      for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j) {
          SCElem xy = kn::bracket(el[i], el[j]);
          for (std::size_t k = 0; k < el.size(); ++k) {
            SCElem lhs = kn::bracket(el[i], kn::bracket(el[j], el[k]));
            SCElem rhs = kn::bracket(xy, el[k]) +
                         kn::bracket(el[j], kn::bracket(el[i], el[k])) * CycScalar(psign(alg, basis[i], basis[j]));
            if (!(lhs == rhs)) ++bad;
          }
        }
      INFO(alg.name());
      CHECK(bad == 0);
    }
}

TEST_CASE("bracket does not depend on the lift") {
  kn::testing::Gen gen(91);
  for (int n = 1; n <= 3; ++n)
    for (Twist tw : {Twist::id, Twist::omega}) {
      SuperconformalAlgebra alg(n, tw);
      auto basis = kn::named_basis(alg, 2);
      auto random_elem = [&] {
        SCElem x = kn::zero(alg);
        for (int k = 0; k < 3; ++k)
          x += kn::named(alg, basis[gen.range(0, static_cast<std::int64_t>(basis.size()) - 1)]) *
               CycScalar(gen.nonzero_rational());
        return x;
      };
      for (int trial = 0; trial < 25; ++trial) {
        SCElem x = random_elem(), y = random_elem();
        ConfElem z = random_elem().rep;
        for (int d = gen.range(0, 2); d > 0; --d) z = kn::dpart(z);
        ConfElem lifted = x.rep + kn::dhat(z);
        CHECK(kn::normal_form(alg, kn::dhat(z)).is_zero());
        CHECK(kn::normal_form(alg, lifted) == x);
        SCElem raw{alg.n_vars(), alg.twist(), lifted};
        CHECK(kn::bracket(raw, y) == kn::bracket(x, y));
        CHECK(kn::bracket(y, raw) == kn::bracket(y, x));
      }
    }
}

TEST_CASE("twist parsing") {
  CHECK(kn::parse_twist("id") == Twist::id);
  CHECK(kn::parse_twist("omega") == Twist::omega);
  CHECK_THROWS_AS(kn::parse_twist("sigma"), kn::InvalidArgument);
  CHECK_THROWS_AS(SuperconformalAlgebra(4, Twist::id), kn::InvalidArgument);
  CHECK(SuperconformalAlgebra(3, Twist::omega).name() == "Alg(K_3, omega)");
}
