#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kn {

using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger spills into an immutable, shared arbitrary-precision
/// value. The representation is always canonical (den > 0, gcd = 1, and the
/// small form is used whenever it fits), so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : num_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const BigRational& v);

  /// Parses "a" or "a/b" (optional leading sign).
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  /// Only meaningful when is_small().
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  BigRational to_big() const;
  std::string to_string() const;
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational inverse() const;

 private:
  static Rational from_parts(__int128 n, __int128 d);
  void assign_big(const BigRational& v);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(q, j) = q (q-1) ... (q-j+1) / j! for rational q.
Rational binomial(const Rational& q, int j);

/// Falling factorial q (q-1) ... (q-j+1).
Rational falling_factorial(const Rational& q, int j);

std::int64_t factorial(int n);

}  // namespace kn
