#pragma once

#include <string>
#include <vector>

#include "kn/autgrp.hpp"
#include "kn/eigen_traits.hpp"
#include "kn/report.hpp"

namespace kn {

/// Twisted loop algebra L(K_N, sigma) for a graded sigma of declared order m,
/// held as the eigen-decomposition of sigma on the Grassmann slice plus coset
/// rules: an eigenvector of residue i pairs with exponents in i/m + Z.
struct LoopAlgebra {
  int n_vars = 0;
  int order = 1;
  ConformalAut twist;
  /// Eigenvectors of sigma on the slice, grouped by residue.
  std::vector<std::vector<GrassElem>> eigenbasis;
  /// Flattened eigenvectors and their residues.
  std::vector<GrassElem> vectors;
  std::vector<int> residues;
  /// Row k gives the k-th eigencoordinate of a slice vector (columns = masks).
  MatrixX<CycScalar> to_eigen;

  /// The loop ring S_m = C[t^(+-1/m)].
  DRing loop_ring() const { return DRing::laurent(order); }
  /// Eigencoordinates of a Grassmann element.
  std::vector<CycScalar> coordinates(const GrassElem& f) const;
};

LoopAlgebra eigenspace_decompose(const ConformalAut& sigma, int m);

/// Every term of x, in eigencoordinates, pairs residue i with an exponent in i/m + Z.
bool loop_contains(const LoopAlgebra& loop, const ConfElem& x);

/// Basis elements v (x) t^q with v an eigenvector of residue i and
/// q in i/m + Z, |q| <= window.
std::vector<ConfElem> loop_basis(const LoopAlgebra& loop, int window);

/// All n-th products and d-hat images of loop basis elements (with exponents
/// in the window) and their d-hat images stay in the loop algebra. Elements
/// of extra are added to the generating set unchanged.
Report closure_check(const LoopAlgebra& loop, int window, const std::vector<ConfElem>& extra = {});

/// Every xi^mask (x) t^q on the (1/m)Z grid with |q| <= window is rebuilt as
/// sum_k c_k (v_k (x) t^(i_k/m)) t^(q - i_k/m).
Report trivialization_check(const LoopAlgebra& loop, int window);

/// Finite generation: with g_k = v_k (x) t^(i_k/m), every d^l v_k (x) t^q in
/// the window (l <= dmax) lies in the span of t^j dhat^l' g_k with integer j.
/// Checked by exact rank.
Report fin_check(const LoopAlgebra& loop, int window, int dmax = 2);

}  // namespace kn
