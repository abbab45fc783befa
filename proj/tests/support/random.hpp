#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kn/conformal.hpp"
#include "kn/cyclotomic.hpp"
#include "kn/diffring.hpp"
#include "kn/grassmann.hpp"

namespace kn::testing {

/// Seeded generator for property tests. Uses its own range reduction so
/// sequences do not depend on the standard library's distributions.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }
  bool coin() { return rng_() & 1; }

  Rational rational(int mag = 5) {
    std::int64_t n = range(-mag, mag);
    std::int64_t d = range(1, mag);
    return Rational(n, d);
  }
  Rational nonzero_rational(int mag = 5) {
    Rational r;
    while (r.is_zero()) r = rational(mag);
    return r;
  }

  CycScalar scalar(int order, int mag = 4) {
    std::vector<Rational> c(euler_phi(order));
    for (auto& x : c) x = rational(mag);
    return CycScalar::from_coeffs(order, c);
  }

  DRingElem ring_elem(const DRing& ring, int terms = 3, int span = 3) {
    DRingElem r = DRingElem::constant(ring, 0);
    int n = static_cast<int>(range(0, terms));
    for (int k = 0; k < n; ++k) {
      std::int64_t idx = ring.is_dual() ? range(0, 1) : range(-span * ring.denom, span * ring.denom);
      r += DRingElem::monomial(ring, idx, CycScalar(rational()));
    }
    return r;
  }

  ConfElem conf_elem(int n_vars, const DRing& ring, int terms = 3, int dmax = 2, int span = 2) {
    std::vector<ConfElem::Term> out;
    int n = static_cast<int>(range(1, terms));
    for (int k = 0; k < n; ++k) {
      int dp = static_cast<int>(range(0, dmax));
      Mask m = static_cast<Mask>(range(0, (1 << n_vars) - 1));
      std::int64_t idx = ring.is_dual() ? range(0, 1) : range(-span * ring.denom, span * ring.denom);
      CycScalar c = coin() ? CycScalar(nonzero_rational()) : scalar(4);
      out.push_back({ConfElem::make_key(dp, m, idx), c});
    }
    return ConfElem::from_terms(n_vars, ring, std::move(out));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kn::testing
