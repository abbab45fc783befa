#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kn/cyclotomic.hpp"
#include "kn/rational.hpp"

namespace kn {

/// A differential ring over the cyclotomic scalars.
///
/// laurent(m): C[t^(1/m), t^(-1/m)] with d/dt (or the zero derivation).
/// dual: C[tau]/(tau^2) with the zero derivation.
///
/// Monomials are addressed by an integer index: k stands for t^(k/m) in the
/// Laurent case, and 0, 1 stand for 1, tau in the dual case.
struct DRing {
  enum class Kind { laurent, dual };

  Kind kind = Kind::laurent;
  std::int64_t denom = 1;
  bool zero_derivation = false;

  static DRing laurent(std::int64_t m = 1, bool zero_derivation = false);
  static DRing dual() { return DRing{Kind::dual, 1, true}; }

  bool is_laurent() const { return kind == Kind::laurent; }
  bool is_dual() const { return kind == Kind::dual; }
  bool has_derivation() const { return !zero_derivation; }

  /// Index of t^q; throws InvalidArgument if q is outside (1/m)Z or the
  /// ring is dual.
  std::int64_t index_of(const Rational& q) const;
  /// Exponent carried by a monomial index (Laurent only).
  Rational exponent_of(std::int64_t index) const { return Rational(index, denom); }

  /// delta^(j)(monomial) = coeff * monomial(index'); nullopt when zero.
  std::optional<std::pair<std::int64_t, Rational>> divided_derivative(std::int64_t index,
                                                                      int j) const;
  /// Product of two monomials; nullopt when zero (tau * tau).
  std::optional<std::int64_t> mul_index(std::int64_t a, std::int64_t b) const;

  std::string to_string() const;

  friend bool operator==(const DRing&, const DRing&) = default;
};

/// Element of a DRing: a finite sum of scalar multiples of monomials.
///
/// Elements that are pure constants may carry no ring; they combine with
/// elements of any ring. Terms are kept sorted by monomial index with no
/// zero coefficients.
class DRingElem {
 public:
  using Term = std::pair<std::int64_t, CycScalar>;

  DRingElem() = default;
  DRingElem(const CycScalar& c);  // NOLINT(google-explicit-constructor)
  DRingElem(const Rational& c) : DRingElem(CycScalar(c)) {}  // NOLINT
  DRingElem(std::int64_t c) : DRingElem(CycScalar(c)) {}     // NOLINT
  DRingElem(int c) : DRingElem(CycScalar(c)) {}              // NOLINT

  static DRingElem constant(const DRing& ring, const CycScalar& c);
  /// c * monomial(index).
  static DRingElem monomial(const DRing& ring, std::int64_t index, const CycScalar& c = 1);
  /// c * t^q.
  static DRingElem t_power(const DRing& ring, const Rational& q, const CycScalar& c = 1);
  static DRingElem tau(const CycScalar& c = 1);
  static DRingElem from_terms(std::optional<DRing> ring, std::vector<Term> terms);

  const std::optional<DRing>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of monomial index 0).
  CycScalar constant_term() const;
  CycScalar coeff(std::int64_t index) const;

  /// Units: nonzero c * t^q in a Laurent ring, a + b tau with a != 0 in the
  /// dual numbers, nonzero constants anywhere.
  bool is_unit() const;
  DRingElem inverse() const;

  DRingElem with_ring(const DRing& ring) const;
  /// Image under laurent(m) -> laurent(k m).
  DRingElem embed(const DRing& target) const;

  DRingElem operator-() const;
  DRingElem& operator+=(const DRingElem& o);
  DRingElem& operator-=(const DRingElem& o);
  DRingElem& operator*=(const DRingElem& o);
  DRingElem& operator*=(const CycScalar& c);

  friend DRingElem operator+(DRingElem a, const DRingElem& b) { return a += b; }
  friend DRingElem operator-(DRingElem a, const DRingElem& b) { return a -= b; }
  friend DRingElem operator*(const DRingElem& a, const DRingElem& b);
  friend DRingElem operator*(DRingElem a, const CycScalar& c) { return a *= c; }
  friend DRingElem operator*(const CycScalar& c, DRingElem a) { return a *= c; }
  friend DRingElem operator/(DRingElem a, const DRingElem& b) { return a * b.inverse(); }
  friend bool operator==(const DRingElem& a, const DRingElem& b);

  /// "3/2*t^(-1/2) + i*t^2", "2 + tau".
  std::string to_string() const;

 private:
  void normalize();

  std::optional<DRing> ring_;
  std::vector<Term> terms_;
};

/// delta^(j)(x) = delta^j(x) / j!.
DRingElem derive(const DRingElem& x, int j = 1);

/// Common ring of two operands, or RingMismatch.
std::optional<DRing> common_ring(const std::optional<DRing>& a, const std::optional<DRing>& b);

std::ostream& operator<<(std::ostream& os, const DRingElem& x);
std::ostream& operator<<(std::ostream& os, const DRing& r);

}  // namespace kn
