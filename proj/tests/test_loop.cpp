#include "doctest.h"

#include "kn/error.hpp"
#include "kn/loop.hpp"

using kn::ConfElem;
using kn::ConformalAut;
using kn::CycScalar;
using kn::DRing;
using kn::GrassElem;
using kn::LoopAlgebra;
using kn::Rational;

namespace {

const DRing R = DRing::laurent(1);

GrassElem g(int n, kn::Mask m) { return GrassElem::monomial(n, m); }

ConfElem at(const LoopAlgebra& l, kn::Mask m, const Rational& q) {
  DRing s = l.loop_ring();
  return ConfElem::from_grass(g(l.n_vars, m), kn::DRingElem::t_power(s, q), s);
}

ConformalAut cyclic3() {
  return kn::phi_from_orthogonal(kn::OrthMatrix::signed_permutation({1, 2, 0}, {1, 1, 1}, R));
}

}  // namespace

TEST_CASE("identity at order 1 has one eigenspace") {
  LoopAlgebra l = kn::eigenspace_decompose(ConformalAut::identity(2, R), 1);
  REQUIRE(l.eigenbasis.size() == 1);
  CHECK(l.eigenbasis[0].size() == 4);
}

TEST_CASE("omega_3 splits into even and odd parts") {
  LoopAlgebra l = kn::eigenspace_decompose(kn::omega(3, R), 2);
  std::vector<GrassElem> even = {g(3, 0), g(3, 3), g(3, 5), g(3, 6)};
  std::vector<GrassElem> odd = {g(3, 1), g(3, 2), g(3, 4), g(3, 7)};
  CHECK(l.eigenbasis[0] == even);
  CHECK(l.eigenbasis[1] == odd);
}

TEST_CASE("diag(-1, 1) in K_2") {
  ConformalAut s = kn::phi_from_orthogonal(kn::OrthMatrix::diagonal({-1, 1}, R));
  LoopAlgebra l = kn::eigenspace_decompose(s, 2);
  CHECK(l.eigenbasis[0] == std::vector<GrassElem>{g(2, 0), g(2, 2)});
  CHECK(l.eigenbasis[1] == std::vector<GrassElem>{g(2, 1), g(2, 3)});
}

TEST_CASE("decomposition is equivariant") {
  for (auto [sigma, m] : {std::pair{kn::omega(3, R), 2}, std::pair{cyclic3(), 3}, std::pair{cyclic3(), 6},
                          std::pair{kn::omega(2, R), 4}}) {
    LoopAlgebra l = kn::eigenspace_decompose(sigma, m);
    REQUIRE(l.vectors.size() == 8u >> (3 - sigma.n_vars));
    for (std::size_t k = 0; k < l.vectors.size(); ++k) {
      ConfElem v = ConfElem::from_grass(l.vectors[k], kn::DRingElem(1), R);
      CHECK(kn::apply_aut(sigma, v) == v * CycScalar::zeta(m, l.residues[k]));
    }
  }
}

TEST_CASE("order-3 twist needs cube roots of unity") {
  LoopAlgebra l = kn::eigenspace_decompose(cyclic3(), 3);
  for (int i = 0; i < 3; ++i) CHECK(!l.eigenbasis[i].empty());
  bool irrational = false;
  for (const auto& v : l.vectors)
    for (const auto& [m, c] : v.terms()) irrational |= !c.is_rational();
  CHECK(irrational);
  CHECK(kn::closure_check(l, 1).passed());
  CHECK(kn::trivialization_check(l, 1).passed());
}

TEST_CASE("bad twists are rejected") {
  CHECK_THROWS_AS(kn::eigenspace_decompose(kn::omega(3, R), 1), kn::InvalidArgument);
  CHECK_THROWS_AS(kn::eigenspace_decompose(cyclic3(), 2), kn::InvalidArgument);
  CHECK_THROWS_AS(kn::eigenspace_decompose(kn::dual_number_counterexample().phi, 1), kn::InvalidArgument);
  CHECK_THROWS_AS(kn::eigenspace_decompose(kn::phi_from_orthogonal(kn::OrthMatrix::rotation(2, 0, 1, 1, R)), 1),
                  kn::InvalidArgument);
}

TEST_CASE("loop membership") {
  LoopAlgebra w = kn::eigenspace_decompose(kn::omega(3, R), 2);
  CHECK(kn::loop_contains(w, at(w, 1, Rational(1, 2))));
  CHECK_FALSE(kn::loop_contains(w, at(w, 1, Rational(1))));
  CHECK(kn::loop_contains(w, at(w, 3, Rational(-2))));
  CHECK_FALSE(kn::loop_contains(w, at(w, 3, Rational(-3, 2))));
  // mixed: even part at integer, odd part at half-integer
  CHECK(kn::loop_contains(w, at(w, 0, 1) + at(w, 7, Rational(3, 2))));
  CHECK_FALSE(kn::loop_contains(w, at(w, 0, 1) + at(w, 7, 1)));

  LoopAlgebra id = kn::eigenspace_decompose(ConformalAut::identity(3, R), 1);
  for (kn::Mask m = 0; m < 8; ++m) CHECK(kn::loop_contains(id, at(id, m, Rational(static_cast<int>(m) - 4))));
  CHECK_THROWS_AS(kn::loop_contains(id, ConfElem::atom(3, DRing::dual(), 0, 1)), kn::RingMismatch);
}

TEST_CASE("closure of the loop algebras") {
  LoopAlgebra w = kn::eigenspace_decompose(kn::omega(3, R), 2);
  kn::Report rep = kn::closure_check(w, 2);
  CHECK(rep.passed());
  CHECK(rep.find("products-in-loop")->cases > 1000);
  ConformalAut s = kn::phi_from_orthogonal(kn::OrthMatrix::diagonal({-1, 1}, R));
  CHECK(kn::closure_check(kn::eigenspace_decompose(s, 2), 2).passed());
}

TEST_CASE("corrupted generator set is caught") {
  LoopAlgebra w = kn::eigenspace_decompose(kn::omega(3, R), 2);
  kn::Report rep = kn::closure_check(w, 1, {at(w, 1, 0)});
  CHECK_FALSE(rep.passed());
  CHECK(rep.find("generators-in-loop")->violations == 1);
  CHECK(rep.find("products-in-loop")->violations > 0);
}

TEST_CASE("trivialization certificates") {
  LoopAlgebra w1 = kn::eigenspace_decompose(kn::omega(1, R), 2);
  kn::Report r1 = kn::trivialization_check(w1, 2);
  CHECK(r1.passed());
  CHECK(r1.find("spanning")->cases == 2 * 9);
  CHECK(kn::trivialization_check(kn::eigenspace_decompose(kn::omega(3, R), 2), 1).passed());
  kn::Report r3 = kn::trivialization_check(kn::eigenspace_decompose(ConformalAut::identity(3, R), 1), 1);
  CHECK(r3.passed());
  CHECK(r3.find("spanning")->cases == 8 * 3);
}

TEST_CASE("finite generation at window 2") {
  for (int n = 1; n <= 3; ++n) {
    kn::Report rep = kn::fin_check(kn::eigenspace_decompose(kn::omega(n, R), 2), 2);
    CHECK(rep.passed());
    CHECK(rep.find("finite-generation")->cases > 0);
  }
}
