#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kn/report.hpp"
#include "kn/superconf.hpp"

namespace kn {

enum class Part { even, odd };
std::string to_string(Part p);
Part parse_part(const std::string& s);

struct Spectrum {
  std::string algebra;
  Part part = Part::even;
  int window = 0;
  std::vector<NamedAtom> atoms;
  /// Eigenvalue of ad L_0 on each atom, in the order of atoms.
  std::vector<Rational> eigenvalues;
  /// Atoms that were not eigenvectors (empty when the basis diagonalizes ad L_0).
  std::vector<NamedAtom> not_eigen;

  /// Sorted eigenvalues with multiplicities.
  std::vector<std::pair<Rational, int>> multiset() const;
};

/// ad L_0 on the named atoms of the given parity with |subscript| <= window.
Spectrum l0_spectrum(const SuperconformalAlgebra& alg, Part part, int window);

/// Every atom is an eigenvector with eigenvalue minus its subscript. For
/// N = 1, 3 even eigenvalues are integers and odd ones lie in 1/2 + Z (twist
/// id) or Z (twist omega); omega_2 mixes the cosets, so N = 2 has no coset check.
Report spectrum_report(const SuperconformalAlgebra& alg, const Spectrum& s);

/// w with [L_0, x] = w x, when x is a nonzero ad L_0 eigenvector.
std::optional<Rational> weight(const SuperconformalAlgebra& alg, const SCElem& x);

struct ProbeStep {
  int k = 0;
  SCElem value;
  std::optional<Rational> weight;
  bool nonzero = false;
};

/// (ad x)^k y for k = 1..steps. x must be an ad L_0 eigenvector in the span
/// of the L and T atoms.
std::vector<ProbeStep> rigidity_probe(const SuperconformalAlgebra& alg, const SCElem& x, const SCElem& y,
                                      int steps);

/// The two witness recipes for non-locally-finite x of weight n != 0:
/// x = a L_-n + sum b_i T^i_-n with y = L_-2n, where the L_-(k+2)n coefficient
/// of (ad x)^k y is k! a^k n^k; and x = sum b_i T^i_-n with y = L_-1, where
/// (ad x)^k y = n (n+1) ... (n+k-1) sum b_i T^i_-n-k. Also records the
/// alternative witness y = T^j_0 and an ad-nilpotent isotropic x.
Report rigidity_report(const SuperconformalAlgebra& alg, int steps);

/// g_0 = span{L_0, T^i_0}: [L_0, T^i_0] = 0, [T^i_0, T^j_0] = i eps_ijl T^l_0,
/// center computed by solving the centralizer system, and the adjoint
/// Casimir sum_i [T^i_0, [T^i_0, T^1_0]].
Report g0_structure(const SuperconformalAlgebra& alg);

/// Scalar c with sum_i [T^i_0, [T^i_0, T^1_0]] = c T^1_0.
std::optional<CycScalar> casimir_scalar(const SuperconformalAlgebra& alg);

/// B_i = c eps_ijl xi_j xi_l (cyclic) inside K_3: n >= 1 products vanish,
/// the 0-th products close, and B_i _(0) B_j = i eps_ijl B_l.
Report curr_so3_check(const CycScalar& c);

}  // namespace kn
