#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "kn/rational.hpp"

namespace kn {

int euler_phi(int n);

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
const std::vector<Rational>& cyclotomic_polynomial(int n);

/// Element of the cyclotomic field Q(zeta_n), zeta_n = exp(2 pi i / n).
///
/// Stored as coordinates in the power basis 1, zeta, ..., zeta^(phi(n)-1).
/// Values whose only nonzero coordinate is the constant one are kept at
/// order 1, so rational arithmetic never touches the reduction tables.
class CycScalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  CycScalar() : coeffs_(1) {}
  CycScalar(const Rational& r) : coeffs_{r} {}  // NOLINT(google-explicit-constructor)
  CycScalar(std::int64_t n) : coeffs_{Rational(n)} {}  // NOLINT(google-explicit-constructor)
  CycScalar(int n) : coeffs_{Rational(n)} {}  // NOLINT(google-explicit-constructor)

  /// zeta_m^p reduced in Q(zeta_m).
  static CycScalar zeta(int m, std::int64_t p = 1);
  /// sqrt(-1) = zeta_4.
  static CycScalar imag_unit() { return zeta(4, 1); }
  static CycScalar from_coeffs(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const Coeffs& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const { return order_ == 1 && coeffs_[0].is_one(); }
  bool is_rational() const { return order_ == 1; }
  /// The value as a rational; throws InvalidArgument when it is not one.
  const Rational& rational() const;

  /// Image under Q(zeta_n) -> Q(zeta_target); target must be a multiple of order().
  CycScalar embed(int target) const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  CycScalar inverse() const;

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);

  /// "3/2 + 2*i", "z8^3 - z8", "0".
  std::string to_string() const;
  /// True when to_string() is a single signed term (no parentheses needed
  /// when used as a factor).
  bool is_monomial() const;

 private:
  void normalize();
  // Coordinates at a multiple of order(), without demoting to order 1.
  CycScalar lift(int target) const;

  int order_ = 1;
  Coeffs coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& c);

}  // namespace kn
