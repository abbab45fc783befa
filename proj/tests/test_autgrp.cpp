#include "doctest.h"

#include "kn/autgrp.hpp"
#include "kn/exact_linalg.hpp"
#include "support/product_oracle.hpp"
#include "support/random.hpp"

using kn::ConfElem;
using kn::ConformalAut;
using kn::CycScalar;
using kn::DRing;
using kn::DRingElem;
using kn::OrthMatrix;
using kn::Rational;

namespace {

const DRing R = DRing::laurent(1);

ConfElem mono(int n, kn::Mask m, const DRingElem& r = DRingElem(1), int dpow = 0) {
  return ConfElem::from_grass(kn::GrassElem::monomial(n, m), r, R, dpow);
}

OrthMatrix rotation2() { return OrthMatrix::rotation(2, 0, 1, 1, R); }

}  // namespace

TEST_CASE("rotation entries satisfy a^2 + b^2 = 1") {
  DRingElem t = DRingElem::t_power(R, 1), ti = DRingElem::t_power(R, -1);
  DRingElem a = (t + ti) * CycScalar(Rational(1, 2));
  DRingElem b = (t - ti) * (CycScalar(2) * CycScalar::imag_unit()).inverse();
  CHECK(a * a + b * b == DRingElem(1));
  OrthMatrix rot = rotation2();
  CHECK(rot(0, 0) == a);
  CHECK(rot(1, 0) == b);
  CHECK(rot(0, 1) == -b);
}

TEST_CASE("non-orthogonal matrices and bad sizes are rejected") {
  kn::RingMatrix m(2, 2);
  m << DRingElem(1), DRingElem(1), DRingElem(0), DRingElem(1);
  CHECK_THROWS_AS(OrthMatrix(m, R), kn::InvalidArgument);
  CHECK_THROWS_AS(kn::phi_from_orthogonal(OrthMatrix::identity(4, R)), kn::InvalidArgument);
}

TEST_CASE("identity matrix gives the identity map") {
  for (int n = 1; n <= 3; ++n) {
    ConformalAut phi = kn::phi_from_orthogonal(OrthMatrix::identity(n, R));
    CHECK(phi == ConformalAut::identity(n, R));
    CHECK(phi.graded());
  }
}

TEST_CASE("diag(-1, 1) flips xi1 and xi1 xi2") {
  ConformalAut phi = kn::phi_from_orthogonal(OrthMatrix::diagonal({-1, 1}, R));
  CHECK(phi.images[0] == mono(2, 0));
  CHECK(phi.images[1] == -mono(2, 1));
  CHECK(phi.images[2] == mono(2, 2));
  CHECK(phi.images[3] == -mono(2, 3));
}

TEST_CASE("N=2 rotation: r is the (1,2) entry of 2 delta(A) A^T") {
  OrthMatrix a = rotation2();
  // oracle: entrywise product written out by hand
  DRingElem da = kn::derive(a(0, 0)), db = kn::derive(a(1, 0));
  DRingElem r = DRingElem(2) * (da * a(1, 0) + (-db) * a(1, 1));
  ConformalAut phi = kn::phi_from_orthogonal(a);
  CHECK(phi.images[0] == mono(2, 0) + mono(2, 3, r));
  CHECK_FALSE(r.is_zero());
  // a = (t + 1/t)/2, b = (t - 1/t)/2i gives r = 2(a' b - b' a) = 2i/t
  CHECK(r == DRingElem::t_power(R, -1, CycScalar(2) * CycScalar::imag_unit()));
  CHECK(kn::verify_automorphism(phi).passed());
}

TEST_CASE("apply_aut examples") {
  for (int n = 1; n <= 3; ++n) {
    kn::testing::Gen g(11 + n);
    ConfElem x = g.conf_elem(n, R);
    CHECK(kn::apply_aut(ConformalAut::identity(n, R), x) == x);
  }
  ConformalAut w3 = kn::omega(3, R);
  DRingElem t = DRingElem::t_power(R, 1);
  CHECK(kn::apply_aut(w3, mono(3, 7, t)) == -mono(3, 7, t));
  ConformalAut phi = kn::phi_from_orthogonal(rotation2());
  CHECK(kn::apply_aut(phi, mono(2, 1, DRingElem(1), 1)) == kn::dhat(phi.images[1]));
}

TEST_CASE("apply_aut is D-linear and commutes with d-hat") {
  kn::testing::Gen g(5);
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      ConformalAut phi = kn::phi_from_orthogonal(kn::random_orthogonal(n, R, rng));
      ConfElem x = g.conf_elem(n, R);
      DRingElem r = g.ring_elem(R);
      CHECK(kn::apply_aut(phi, x * r) == kn::apply_aut(phi, x) * r);
      CHECK(kn::apply_aut(phi, kn::dhat(x)) == kn::dhat(kn::apply_aut(phi, x)));
    }
}

TEST_CASE("omega_N verifies and has order two") {
  for (int n = 1; n <= 3; ++n) {
    ConformalAut w = kn::omega(n, R);
    kn::Report rep = kn::verify_automorphism(w);
    CHECK(rep.passed());
    CHECK(kn::compose_aut(w, w) == ConformalAut::identity(n, R));
  }
  ConformalAut w3 = kn::omega(3, R);
  for (kn::Mask m = 0; m < 8; ++m) CHECK(w3.images[m] == mono(3, m) * CycScalar(kn::parity(m) ? -1 : 1));
}

TEST_CASE("xi1 -> 2 xi1 is not an automorphism") {
  ConformalAut phi;
  phi.n_vars = 1;
  phi.ring = R;
  phi.images = {mono(1, 0), mono(1, 1) * CycScalar(2)};
  phi.label = "scale";
  kn::Report rep = kn::verify_automorphism(phi);
  CHECK_FALSE(rep.passed());
  const kn::CheckResult* br = rep.find("bracket-preservation");
  REQUIRE(br != nullptr);
  REQUIRE(br->violations == 1);
  CHECK(br->witnesses[0].find("a = x1 ⊗ 1, b = x1 ⊗ 1, n = 0") != std::string::npos);
  CHECK(rep.find("invertibility")->passed());
}

TEST_CASE("homomorphism, inverse and skew invariants on random words") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      OrthMatrix a = kn::random_orthogonal(n, R, rng);
      OrthMatrix b = kn::random_orthogonal(n, R, rng);
      ConformalAut pa = kn::phi_from_orthogonal(a), pb = kn::phi_from_orthogonal(b);
      CHECK(pa.graded());
      CHECK(kn::phi_from_orthogonal(a * b) == kn::compose_aut(pa, pb));
      CHECK(kn::compose_aut(pa, kn::phi_from_orthogonal(a.transpose())) == ConformalAut::identity(n, R));
      kn::RingMatrix s = a.derivative().lazyProduct(a.entries().transpose());
      CHECK(kn::exact_equal(kn::RingMatrix(s.transpose()), kn::RingMatrix(-s)));
      if (n == 3) {
        DRingElem det = a.det();
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) CHECK(kn::cofactor(a.entries(), i, j) == det * a(i, j));
      }
    }
}

TEST_CASE("random phi_A verify for N = 2, 3") {
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      ConformalAut phi = kn::phi_from_orthogonal(kn::random_orthogonal(n, R, rng));
      kn::Report rep = kn::verify_automorphism(phi);
      for (const auto& c : rep.checks) {
        INFO(c.name << (c.witnesses.empty() ? "" : ": " + c.witnesses[0]));
        CHECK(c.passed());
      }
    }
}

TEST_CASE("N=3 images satisfy phi(1)_(1) phi(xi_j) = -3/2 phi(xi_j) under the oracle product") {
  OrthMatrix a = OrthMatrix::rotation(3, 0, 1, 1, R) * OrthMatrix::rotation(3, 1, 2, 2, R);
  ConformalAut phi = kn::phi_from_orthogonal(a);
  for (int j = 0; j < 3; ++j) {
    const ConfElem& img = phi.images[kn::Mask(1) << j];
    CHECK(kn::testing::oracle_product(1, phi.images[0], img) == img * CycScalar(Rational(-3, 2)));
  }
  // the xi1xi2xi3 coefficient of phi(xi_j) is the j-th entry of det(A) A^T delta(A) in skew layout
  kn::RingMatrix s = a.entries().transpose().lazyProduct(a.derivative());
  DRingElem det = a.det();
  CHECK(phi.images[1].coeff(0, 7) == det * s(1, 2));
  CHECK(phi.images[2].coeff(0, 7) == det * s(2, 0));
  CHECK(phi.images[4].coeff(0, 7) == det * s(0, 1));
}

TEST_CASE("phi_A is injective on random pairs") {
  std::mt19937_64 rng(99);
  int distinct = 0;
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 2;
    OrthMatrix a = kn::random_orthogonal(n, R, rng), b = kn::random_orthogonal(n, R, rng);
    bool same_matrix = a == b;
    bool same_map = kn::phi_from_orthogonal(a) == kn::phi_from_orthogonal(b);
    CHECK(same_matrix == same_map);
    distinct += !same_matrix;
  }
  CHECK(distinct > 10);
}

TEST_CASE("graded inverse by elimination matches phi of the transpose") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 3; ++n) {
    OrthMatrix a = kn::random_orthogonal(n, R, rng);
    ConformalAut phi = kn::phi_from_orthogonal(a);
    auto inv = kn::invert_graded(phi);
    REQUIRE(inv.has_value());
    CHECK(inv->images == kn::phi_from_orthogonal(a.transpose()).images);
  }
}

TEST_CASE("dual-number shift is a non-graded automorphism") {
  kn::CounterexampleResult ce = kn::dual_number_counterexample();
  CHECK(ce.automorphism);
  CHECK_FALSE(ce.graded);
  DRing d = DRing::dual();
  ConfElem x1 = ConfElem::atom(1, d, 0, 1);
  ConfElem dx1tau = ConfElem::atom(1, d, 1, 1, 1);
  CHECK(ce.phi.images[1] == x1 + dx1tau);
  CHECK(ce.phi.images[0].max_dpow() == 1);
  // phi(d^l f (x) s) = d^l f (x) s + d^(l+1) f (x) tau s
  ConfElem y = ConfElem::atom(1, d, 2, 0, 0);
  CHECK(kn::apply_aut(ce.phi, y) == y + ConfElem::atom(1, d, 3, 0, 1));
}

TEST_CASE("the same shift with tau replaced by t fails over the Laurent ring") {
  ConformalAut phi = kn::derivative_shift(1, DRingElem::t_power(R, 1), R);
  kn::Report rep = kn::verify_automorphism(phi);
  CHECK_FALSE(rep.find("bracket-preservation")->passed());
  CHECK_FALSE(rep.find("invertibility")->passed());
}

TEST_CASE("N = 2 with r from 2 delta(A) A instead of 2 delta(A) A^T is not an automorphism") {
  OrthMatrix a = OrthMatrix::rotation(2, 0, 1, 1, R);
  kn::RingMatrix m = a.derivative().lazyProduct(a.entries());
  ConformalAut alt = kn::phi_from_orthogonal(a);
  alt.inverse_images.reset();
  alt.images[0] = mono(2, 0) + ConfElem::from_grass(kn::GrassElem::monomial(2, 3), m(0, 1) * CycScalar(2), R);
  CHECK(kn::verify_automorphism(kn::phi_from_orthogonal(a)).passed());
  CHECK_FALSE(kn::verify_automorphism(alt).find("bracket-preservation")->passed());
}
