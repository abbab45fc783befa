#include "support/product_oracle.hpp"

#include <map>

namespace kn::testing {

namespace {

// Element of C[d] (x) Lambda(N): d-power -> Grassmann part.
using Poly = std::map<int, GrassElem>;

void add(Poly& acc, int dp, const GrassElem& g, const CycScalar& c) {
  if (g.is_zero() || c.is_zero()) return;
  auto it = acc.find(dp);
  if (it == acc.end()) {
    acc.emplace(dp, g * c);
  } else {
    it->second += g * c;
  }
}

Poly bare(int n_vars, int k, Mask fm, Mask gm) {
  Poly out;
  GrassElem f = GrassElem::monomial(n_vars, fm), g = GrassElem::monomial(n_vars, gm);
  int df = degree(fm), dg = degree(gm);
  GrassElem fg = wedge(f, g);
  if (k == 0) {
    add(out, 1, fg, CycScalar(Rational(df, 2) - 1));
    GrassElem s(n_vars);
    for (int i = 1; i <= n_vars; ++i) s += wedge(partial(i, f), partial(i, g));
    add(out, 0, s, CycScalar(Rational(df % 2 ? -1 : 1, 2)));
  } else if (k == 1) {
    add(out, 0, fg, CycScalar(Rational(df + dg, 2) - 2));
  }
  return out;
}

// f_(k) (d^q g) by a_(k)(d b) = d(a_(k) b) + k a_(k-1) b.
Poly right(int n_vars, int k, Mask f, int q, Mask g) {
  if (k < 0) return {};
  if (q == 0) return bare(n_vars, k, f, g);
  Poly out;
  for (const auto& [dp, e] : right(n_vars, k, f, q - 1, g)) add(out, dp + 1, e, 1);
  if (k > 0)
    for (const auto& [dp, e] : right(n_vars, k - 1, f, q - 1, g)) add(out, dp, e, k);
  return out;
}

// (d^p f)_(k) (d^q g) by (d a)_(k) b = -k a_(k-1) b.
Poly left(int n_vars, int k, int p, Mask f, int q, Mask g) {
  if (p == 0) return right(n_vars, k, f, q, g);
  if (k == 0) return {};
  Poly out;
  for (const auto& [dp, e] : left(n_vars, k - 1, p - 1, f, q, g)) add(out, dp, e, -k);
  return out;
}

}  // namespace

ConfElem oracle_product(int n, const ConfElem& x, const ConfElem& y) {
  int nv = x.n_vars();
  const DRing& ring = x.ring();
  ConfElem out(nv, ring);
  for (const auto& a : x.terms())
    for (const auto& b : y.terms()) {
      DRingElem u = DRingElem::monomial(ring, a.mono(), a.c);
      DRingElem v = DRingElem::monomial(ring, b.mono(), b.c);
      DRingElem du = u;  // delta^j(u)
      Rational jfact = 1;
      int limit = 2 * (a.dpow() + b.dpow() + 2) + n;
      for (int j = 0; j <= limit; ++j) {
        if (j > 0) {
          du = derive(du, 1);
          jfact *= Rational(j);
        }
        if (du.is_zero()) break;
        DRingElem coef = du * v * CycScalar(jfact.inverse());
        Poly p = left(nv, n + j, a.dpow(), a.mask(), b.dpow(), b.mask());
        for (const auto& [dp, g] : p) out += ConfElem::from_grass(g, coef, ring, dp);
      }
    }
  return out;
}

}  // namespace kn::testing
