#include "doctest.h"

#include <set>

#include "kn/tables.hpp"

using kn::CycScalar;
using kn::Expansion;
using kn::NamedAtom;
using kn::Rational;
using kn::SuperconformalAlgebra;
using kn::Symbol;
using kn::Twist;

namespace {

const CycScalar I = CycScalar::imag_unit();

// Hand-derived relations for N = 1, 2 (T = 2i xi_1 xi_2 (x) t^m, G^i = 2 xi_i (x) t^(a+1/2)).
Expansion golden(int n, const NamedAtom& x, const NamedAtom& y) {
  const Rational& m = x.sub;
  const Rational& k = y.sub;
  std::vector<std::pair<NamedAtom, CycScalar>> out;
  auto add = [&](const NamedAtom& a, const CycScalar& c) {
    if (!c.is_zero()) out.emplace_back(a, c);
  };
  Symbol s = x.symbol, t = y.symbol;
  if (s == Symbol::L && t == Symbol::L) add(kn::L(m + k), m - k);
  if (s == Symbol::L && t == Symbol::T) add(kn::T(0, m + k), -k);
  if (s == Symbol::L && t == Symbol::G) add(kn::G(y.index, m + k), Rational(1, 2) * m - k);
  if (s == Symbol::T && t == Symbol::G) {
    if (y.index == 1) add(kn::G(2, m + k), I);
    else add(kn::G(1, m + k), -I);
  }
  if (s == Symbol::G && t == Symbol::G) {
    if (x.index == y.index) add(kn::L(m + k), 2);
    else if (n == 2) add(kn::T(0, m + k), I * CycScalar(x.index == 1 ? m - k : k - m));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::set<std::string> families(const kn::BracketTable& t) {
  std::set<std::string> f;
  for (const auto& r : t.rows) f.insert(r.family);
  return f;
}

}  // namespace

TEST_CASE("N = 3 tables reproduce every relation family") {
  for (Twist tw : {Twist::id, Twist::omega}) {
    SuperconformalAlgebra alg(3, tw);
    kn::BracketTable t = kn::bracket_table(alg, 2);
    INFO(alg.name());
    CHECK(t.report.checks.size() == 10);
    CHECK(families(t).size() == 10);
    for (const auto& c : t.report.checks) {
      INFO(c.name << (c.witnesses.empty() ? "" : ": " + c.witnesses[0]));
      CHECK(c.cases > 0);
      CHECK(c.passed());
    }
    for (const auto& r : t.rows) CHECK(r.expected.has_value());
  }
}

TEST_CASE("N = 3 table subscripts follow the twist") {
  SuperconformalAlgebra a3(3, Twist::id), w3(3, Twist::omega);
  for (const auto& r : kn::bracket_table(a3, 2).rows) {
    if (r.x.symbol == Symbol::G || r.x.symbol == Symbol::Psi) {
      CHECK_FALSE(r.x.sub.is_integer());
      CHECK(r.x.sub < Rational(2));
    } else {
      CHECK(r.x.sub.is_integer());
    }
  }
  for (const auto& r : kn::bracket_table(w3, 2).rows) CHECK(r.x.sub.is_integer());
}

TEST_CASE("N = 1, 2 tables agree with the hand-derived relations") {
  for (int n = 1; n <= 2; ++n)
    for (Twist tw : {Twist::id, Twist::omega}) {
      SuperconformalAlgebra alg(n, tw);
      kn::BracketTable t = kn::bracket_table(alg, 3);
      INFO(alg.name());
      CHECK(t.report.passed());
      CHECK(families(t).size() == (n == 1 ? 3u : 6u));
      std::size_t bad = 0;
      for (const auto& r : t.rows) {
        CHECK_FALSE(r.expected.has_value());
        if (!(r.computed == golden(n, r.x, r.y))) {
          ++bad;
          MESSAGE("[" << r.x.to_string() << ", " << r.y.to_string() << "] = " << kn::render(r.computed)
                      << ", expected " << kn::render(golden(n, r.x, r.y)));
        }
      }
      CHECK(bad == 0);
    }
}

TEST_CASE("N = 2 sample relations") {
  SuperconformalAlgebra w2(2, Twist::omega);
  auto br = [&](const NamedAtom& x, const NamedAtom& y) {
    return kn::render(kn::decompose(kn::bracket(kn::named(w2, x), kn::named(w2, y))));
  };
  CHECK(br(kn::L(1), kn::T(0, Rational(-1, 2))) == "1/2*T_{1/2}");
  CHECK(br(kn::G(1, -1), kn::G(2, Rational(-1, 2))) == "-1/2*i*T_{-3/2}");
  CHECK(br(kn::G(1, 1), kn::G(1, -1)) == "2*L_0");
}

TEST_CASE("a wrong Psi normalization is caught") {
  SuperconformalAlgebra alg(3, Twist::id);
  kn::Normalization bad;
  bad.psi = CycScalar(-1) * I;
  kn::BracketTable t = kn::bracket_table(alg, 2, bad);
  CHECK_FALSE(t.report.passed());
  CHECK_FALSE(t.report.find("[G, Psi]")->passed());
  CHECK(t.report.find("[L, Psi]")->passed());
  CHECK(t.report.find("[L, L]")->passed());
  for (const auto& r : t.rows) {
    if (r.family != "[G, Psi]" || r.expected->empty()) continue;
    REQUIRE(r.computed.size() == r.expected->size());
    for (std::size_t k = 0; k < r.computed.size(); ++k)
      CHECK(r.computed[k].second * CycScalar(2) == (*r.expected)[k].second);
  }
}

TEST_CASE("epsilon") {
  CHECK(kn::epsilon(1, 2, 3) == 1);
  CHECK(kn::epsilon(2, 3, 1) == 1);
  CHECK(kn::epsilon(2, 1, 3) == -1);
  CHECK(kn::epsilon(1, 1, 3) == 0);
}
