#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kn/cyclotomic.hpp"

namespace kn {

using Mask = std::uint32_t;

constexpr int kMaxVars = 8;

inline int degree(Mask m) { return __builtin_popcount(m); }
inline int parity(Mask m) { return __builtin_popcount(m) & 1; }

/// Sign of xi_a xi_b rewritten in ascending order; 0 when they share a
/// variable.
int wedge_sign(Mask a, Mask b);

/// Left derivative d/dxi_i on a monomial (i is 1-based): the sign is
/// (-1)^(number of variables before xi_i); 0 when xi_i is absent.
int partial_sign(int i, Mask m);

/// "1", "x1", "x1^x3".
std::string mask_name(Mask m);

/// Element of the exterior algebra on n_vars generators.
class GrassElem {
 public:
  using Term = std::pair<Mask, CycScalar>;

  explicit GrassElem(int n_vars = 0);
  static GrassElem monomial(int n_vars, Mask m, const CycScalar& c = 1);
  /// xi_i, 1-based.
  static GrassElem generator(int n_vars, int i);
  static GrassElem from_terms(int n_vars, std::vector<Term> terms);

  int n_vars() const { return n_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycScalar coeff(Mask m) const;
  /// Z-homogeneous component of the given degree.
  GrassElem component(int deg) const;

  GrassElem operator-() const;
  GrassElem& operator+=(const GrassElem& o);
  GrassElem& operator-=(const GrassElem& o);
  GrassElem& operator*=(const CycScalar& c);
  friend GrassElem operator+(GrassElem a, const GrassElem& b) { return a += b; }
  friend GrassElem operator-(GrassElem a, const GrassElem& b) { return a -= b; }
  friend GrassElem operator*(GrassElem a, const CycScalar& c) { return a *= c; }
  friend GrassElem operator*(const CycScalar& c, GrassElem a) { return a *= c; }
  friend bool operator==(const GrassElem& a, const GrassElem& b);

  std::string to_string() const;

 private:
  void normalize();

  int n_vars_;
  std::vector<Term> terms_;
};

GrassElem wedge(const GrassElem& f, const GrassElem& g);
GrassElem partial(int i, const GrassElem& f);

std::ostream& operator<<(std::ostream& os, const GrassElem& f);

}  // namespace kn
