#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kn/loop.hpp"

namespace kn {

enum class Twist { id, omega };

std::string to_string(Twist t);
/// "id" or "omega"; throws InvalidArgument otherwise.
Twist parse_twist(const std::string& s);

/// Alg(K_N, sigma) = L(K_N, sigma) / (d + d/dt) L(K_N, sigma) for sigma = id
/// or omega_N. Elements are stored over S_2 = C[t^(+-1/2)] for both twists.
class SuperconformalAlgebra {
 public:
  SuperconformalAlgebra(int n_vars, Twist twist);

  int n_vars() const { return n_vars_; }
  Twist twist() const { return twist_; }
  const LoopAlgebra& loop() const { return loop_; }
  const DRing& ring() const { return ring_; }
  std::string name() const;

 private:
  int n_vars_;
  Twist twist_;
  DRing ring_;
  LoopAlgebra loop_;
};

/// Element of Alg(K_N, sigma) in normal form: d-degree 0 representative.
struct SCElem {
  int n_vars = 0;
  Twist twist = Twist::id;
  ConfElem rep{0, DRing::laurent(2)};

  bool is_zero() const { return rep.is_zero(); }
  SCElem& operator+=(const SCElem& o);
  SCElem& operator-=(const SCElem& o);
  SCElem& operator*=(const CycScalar& c);
  friend SCElem operator+(SCElem a, const SCElem& b) { return a += b; }
  friend SCElem operator-(SCElem a, const SCElem& b) { return a -= b; }
  friend SCElem operator*(SCElem a, const CycScalar& c) { return a *= c; }
  friend SCElem operator*(const CycScalar& c, SCElem a) { return a *= c; }
  friend bool operator==(const SCElem& a, const SCElem& b);
  std::string to_string() const { return rep.to_string(); }
};

SCElem zero(const SuperconformalAlgebra& alg);

/// d^l f (x) t^q -> (-1)^l q (q - 1) ... (q - l + 1) f (x) t^(q - l).
/// Throws InvalidArgument when x is not in the loop algebra.
SCElem normal_form(const SuperconformalAlgebra& alg, const ConfElem& x);

/// Zeroth product of representatives, reduced.
SCElem bracket(const SCElem& x, const SCElem& y);

enum class Symbol { L, G, T, Psi };

/// L_m, G^i_a, T^i_m, Psi_a. For N = 2 the single T uses index 0.
struct NamedAtom {
  Symbol symbol = Symbol::L;
  int index = 0;
  Rational sub;

  std::string to_string() const;
  friend bool operator==(const NamedAtom&, const NamedAtom&) = default;
  friend auto operator<=>(const NamedAtom& a, const NamedAtom& b) {
    if (auto c = a.symbol <=> b.symbol; c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.sub <=> b.sub;
  }
};

NamedAtom L(const Rational& m);
NamedAtom G(int i, const Rational& a);
NamedAtom T(int i, const Rational& m);
NamedAtom Psi(const Rational& a);

/// Scalars in L_m = l (1 (x) t^(m+1)), G^i_a = g (xi_i (x) t^(a+1/2)),
/// T^i_m = t (xi_j xi_l (x) t^m) with (i, j, l) cyclic, Psi_a = psi (xi_1 xi_2 xi_3 (x) t^(a-1/2)).
struct Normalization {
  CycScalar l = -1;
  CycScalar g = 2;
  CycScalar t = CycScalar(2) * CycScalar::imag_unit();
  CycScalar psi = CycScalar(-2) * CycScalar::imag_unit();
};

/// Grassmann monomial, sign and exponent shift carrying a named atom.
struct AtomShape {
  Mask mask;
  int sign;
  Rational shift;
};
AtomShape atom_shape(int n_vars, Symbol s, int index);

/// The atoms that exist in the algebra (N-dependent symbols, subscripts in
/// the coset fixed by the twist).
bool atom_exists(const SuperconformalAlgebra& alg, const NamedAtom& a);
SCElem named(const SuperconformalAlgebra& alg, const NamedAtom& a, const Normalization& norm = {});

/// Expansion in named atoms, ordered by atom.
std::vector<std::pair<NamedAtom, CycScalar>> decompose(const SCElem& x, const Normalization& norm = {});
std::string render(const std::vector<std::pair<NamedAtom, CycScalar>>& expansion);

/// All atoms with |subscript| <= window.
std::vector<NamedAtom> named_basis(const SuperconformalAlgebra& alg, int window);

/// Parity of the underlying Grassmann monomial.
int atom_parity(int n_vars, const NamedAtom& a);

}  // namespace kn
