#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kn/conformal.hpp"
#include "kn/report.hpp"

namespace kn {

struct AxiomOptions {
  int dmax = 2;
  /// Ring exponents of the test atoms (ignored for the dual numbers, which
  /// use 1 and tau).
  std::vector<Rational> exponents = {-2, -1, 0, 1, 2};
  /// Use the integer product-table evaluator for the Jacobi identity.
  bool fast_jacobi = true;
  std::function<void(const std::string&)> progress;
};

/// Atoms d^l xi^mask (x) t^e with l <= dmax, every mask, e in the exponent set.
std::vector<ConfElem> axiom_atoms(int n_vars, const DRing& ring, const AxiomOptions& opts);

/// Ring elements used to test D-linearity and the d-hat Leibniz rule.
std::vector<DRingElem> axiom_ring_samples(const DRing& ring);

/// Checks every conformal superalgebra axiom on all pairs and triples of atoms:
/// finiteness of products, the two translation rules, the d-hat Leibniz
/// rule, ring sesquilinearity, skew-symmetry and the conformal Jacobi
/// identity. Each check enumerates every n (and m) at which any term is
/// nonzero.
Report check_axioms(int n_vars, const DRing& ring, const AxiomOptions& opts = {});

/// Conformal Jacobi identity on all triples drawn from atoms.
CheckResult check_jacobi(const std::vector<ConfElem>& atoms, bool fast,
                         const std::function<void(const std::string&)>& progress = {});

/// Parity sign p(a, b) = (-1)^(p(a) p(b)) for homogeneous a, b.
inline int parity_sign(const ConfElem& a, const ConfElem& b) {
  return (a.parity() == 1 && b.parity() == 1) ? -1 : 1;
}

}  // namespace kn
