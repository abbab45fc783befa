#include "doctest.h"

#include "kn/axioms.hpp"

using kn::AxiomOptions;
using kn::DRing;

TEST_CASE("axioms hold on small windows for every ring kind") {
  AxiomOptions opts;
  opts.dmax = 1;
  opts.exponents = {-1, 0, 1};
  for (int n = 1; n <= 2; ++n)
    for (DRing ring : {DRing::laurent(1), DRing::laurent(1, true), DRing::dual()}) {
      kn::Report rep = kn::check_axioms(n, ring, opts);
      for (const auto& c : rep.checks) {
        INFO(rep.title << " / " << c.name << (c.witnesses.empty() ? "" : ": " + c.witnesses[0]));
        CHECK(c.passed());
        CHECK(c.cases > 0);
      }
    }
}

TEST_CASE("fractional exponents") {
  AxiomOptions opts;
  opts.dmax = 1;
  opts.exponents = {kn::Rational(-1, 2), 0, kn::Rational(3, 2)};
  kn::Report rep = kn::check_axioms(2, DRing::laurent(2), opts);
  CHECK(rep.passed());
}

TEST_CASE("integer and generic Jacobi evaluators agree") {
  AxiomOptions opts;
  opts.dmax = 1;
  opts.exponents = {-1, 1};
  auto atoms = kn::axiom_atoms(2, DRing::laurent(1), opts);
  kn::CheckResult fast = kn::check_jacobi(atoms, true);
  kn::CheckResult slow = kn::check_jacobi(atoms, false);
  CHECK(fast.passed());
  CHECK(slow.passed());
  CHECK(fast.cases == slow.cases);
  CHECK(fast.details[0].second == "integer product tables");
}

TEST_CASE("a broken product is caught by the Jacobi check") {
  // An element mixing parities has no well-defined sign p(a, b), so the
  // identity must fail for it.
  auto a = kn::ConfElem::atom(1, DRing::laurent(1), 0, 0) + kn::ConfElem::atom(1, DRing::laurent(1), 0, 1);
  std::vector<kn::ConfElem> atoms = {a};
  kn::CheckResult r = kn::check_jacobi(atoms, true);
  CHECK(r.details[0].second == "generic");
  CHECK_FALSE(r.passed());
}
