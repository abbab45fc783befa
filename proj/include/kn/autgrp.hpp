#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kn/conformal.hpp"
#include "kn/eigen_traits.hpp"
#include "kn/report.hpp"

namespace kn {

using RingMatrix = MatrixX<DRingElem>;

/// Square matrix over a differential ring with A A^T = I, checked on
/// construction.
class OrthMatrix {
 public:
  OrthMatrix(RingMatrix entries, const DRing& ring);

  static OrthMatrix identity(int n, const DRing& ring);
  static OrthMatrix diagonal(const std::vector<int>& signs, const DRing& ring);
  /// Signed permutation: column j has sign signs[j] in row perm[j].
  static OrthMatrix signed_permutation(const std::vector<int>& perm, const std::vector<int>& signs,
                                       const DRing& ring);
  /// Rotation by a = (t^k + t^-k)/2, b = (t^k - t^-k)/(2i) in the (i, j) plane.
  static OrthMatrix rotation(int n, int i, int j, int k, const DRing& ring);

  int size() const { return static_cast<int>(a_.rows()); }
  const DRing& ring() const { return ring_; }
  const RingMatrix& entries() const { return a_; }
  const DRingElem& operator()(int i, int j) const { return a_(i, j); }

  OrthMatrix transpose() const;
  friend OrthMatrix operator*(const OrthMatrix& x, const OrthMatrix& y);
  friend bool operator==(const OrthMatrix& x, const OrthMatrix& y);

  DRingElem det() const;
  /// Entrywise delta(A).
  RingMatrix derivative() const;

  std::string to_string() const;

 private:
  RingMatrix a_;
  DRing ring_;
};

/// Ring automorphism data of K_N (x) D: the images of the 2^N Grassmann
/// monomials f (x) 1. The map extends D-linearly and commutes with d-hat.
struct ConformalAut {
  int n_vars = 0;
  DRing ring;
  std::vector<ConfElem> images;
  /// Images under the inverse map, when known in closed form.
  std::optional<std::vector<ConfElem>> inverse_images;
  std::string label;

  /// All images have d-degree 0.
  bool graded() const;
  static ConformalAut identity(int n_vars, const DRing& ring);
  friend bool operator==(const ConformalAut& a, const ConformalAut& b);
};

ConformalAut phi_from_orthogonal(const OrthMatrix& a);

/// omega_N = phi_A for A = diag(-1), diag(-1, 1), -I.
ConformalAut omega(int n_vars, const DRing& ring);
OrthMatrix omega_matrix(int n_vars, const DRing& ring);

ConfElem apply_aut(const ConformalAut& phi, const ConfElem& x);
/// phi o psi.
ConformalAut compose_aut(const ConformalAut& phi, const ConformalAut& psi);
/// phi^k for k >= 0.
ConformalAut power_aut(const ConformalAut& phi, int k);

/// Inverse of a graded map by unit-pivot elimination over D, if one exists.
std::optional<ConformalAut> invert_graded(const ConformalAut& phi);

/// Checks lambda-bracket preservation on all pairs of monomials (and on a
/// sample of atoms with derivatives and ring coefficients), parity, and
/// invertibility.
Report verify_automorphism(const ConformalAut& phi);

/// The d-shift f (x) 1 -> f (x) 1 + d f (x) c for a ring element c, with
/// candidate inverse f -> f - d f (x) c. It is an automorphism when c^2 = 0
/// and delta(c) = 0, e.g. c = tau in the dual numbers.
ConformalAut derivative_shift(int n_vars, const DRingElem& c, const DRing& ring);

struct CounterexampleResult {
  ConformalAut phi;
  Report report;
  bool automorphism = false;
  bool graded = true;
};
/// Non-graded automorphism of K_1 over the dual numbers.
CounterexampleResult dual_number_counterexample();

/// Random word in signed permutations and rotations.
OrthMatrix random_orthogonal(int n, const DRing& ring, std::mt19937_64& rng, int max_len = 3);

/// For each A (and B, when given): phi_A passes verify_automorphism and is
/// graded, phi_(AB) = phi_A o phi_B, phi_(A^T) is a two-sided inverse of
/// phi_A, and delta(A) A^T is skew-symmetric.
Report orthogonal_suite(const std::vector<std::pair<OrthMatrix, OrthMatrix>>& pairs);
/// count seeded random pairs in O_n(ring).
Report orthogonal_suite(int n, const DRing& ring, std::uint64_t seed, int count);

}  // namespace kn
