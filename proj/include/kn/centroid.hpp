#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kn/report.hpp"
#include "kn/superconf.hpp"

namespace kn {

/// The linear system for one t-shift k: chi(v (x) t^q) = sum_w X_(v,q),w w (x) t^(q+k)
/// over parity-matching eigenvectors w.
struct CentroidShift {
  Rational shift;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t solutions = 0;
  /// Every solution is c * id on the slice for a single scalar c.
  bool single_multiplier = true;
};

struct CentroidResult {
  int n_vars = 0;
  Twist twist = Twist::id;
  int window = 0;
  int margin = 0;
  std::vector<CentroidShift> shifts;
  std::size_t dimension = 0;
  Report report;
};

/// Even, C[d]-linear maps chi on the d-degree-0 slice of L(K_N, sigma) with
/// exponents in [-window, window] and t-shift at most margin, subject to
/// chi(a_(n) b) = a_(n) chi(b) for every pair of slice basis elements whose
/// products stay inside the window (window-interior equations). Solved
/// exactly per shift.
CentroidResult centroid_solve(int n_vars, Twist twist, int window, int margin = 1);

/// Checks chi(a_(n) b) = a_(n) chi(b) on the window-interior pairs for a
/// given map on slice basis elements, extended C[d]-linearly.
Report centroid_check_map(int n_vars, Twist twist, int window,
                          const std::function<ConfElem(const ConfElem&)>& chi);

/// The loop algebra the centroid system lives in.
LoopAlgebra centroid_loop(int n_vars, Twist twist);

}  // namespace kn
