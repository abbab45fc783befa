#include "kn/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "kn/error.hpp"

namespace kn {

namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = -kMax;  // keep INT64_MIN out of the small form

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v >= kMin && v <= kMax; }

boost::multiprecision::cpp_int to_cpp_int(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  boost::multiprecision::cpp_int r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? -r : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero();
  *this = from_parts(n, d);
}

Rational::Rational(const BigRational& v) { assign_big(v); }

Rational Rational::from_parts(i128 n, i128 d) {
  if (d == 0) throw DivisionByZero();
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  r.assign_big(BigRational(to_cpp_int(n), to_cpp_int(d)));
  return r;
}

void Rational::assign_big(const BigRational& v) {
  using boost::multiprecision::cpp_int;
  const cpp_int& n = boost::multiprecision::numerator(v);
  const cpp_int& d = boost::multiprecision::denominator(v);
  static const cpp_int lo = cpp_int(-static_cast<std::int64_t>(kMax));
  static const cpp_int hi = cpp_int(static_cast<std::int64_t>(kMax));
  if (n >= lo && n <= hi && d <= hi) {
    num_ = n.convert_to<std::int64_t>();
    den_ = d.convert_to<std::int64_t>();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const BigRational>(v);
}

BigRational Rational::to_big() const {
  if (big_) return *big_;
  return BigRational(num_, den_);
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw ParseError("empty rational");
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw ParseError("bad integer '" + std::string(s) + "'");
    return boost::multiprecision::cpp_int(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  boost::multiprecision::cpp_int n = parse_int(text.substr(0, slash));
  boost::multiprecision::cpp_int d = 1;
  if (slash != std::string_view::npos) d = parse_int(text.substr(slash + 1));
  if (d == 0) throw DivisionByZero();
  return Rational(BigRational(n, d));
}

bool Rational::is_integer() const {
  if (big_) return boost::multiprecision::denominator(*big_) == 1;
  return den_ == 1;
}

int Rational::sign() const {
  if (big_) return big_->sign();
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::string Rational::to_string() const {
  if (big_) {
    std::string s = boost::multiprecision::numerator(*big_).str();
    if (boost::multiprecision::denominator(*big_) != 1)
      s += "/" + boost::multiprecision::denominator(*big_).str();
    return s;
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  if (big_) return big_->convert_to<double>();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(BigRational(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == o.den_) {
      *this = from_parts(static_cast<i128>(num_) + o.num_, den_);
    } else {
      *this = from_parts(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                         static_cast<i128>(den_) * o.den_);
    }
    return *this;
  }
  assign_big(to_big() + o.to_big());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = std::gcd(num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_, den_);
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    *this = from_parts(n, d);
    return *this;
  }
  assign_big(to_big() * o.to_big());
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return Rational(BigRational(1) / *big_);
  return from_parts(den_, num_);
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: small and big never represent the same value
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  BigRational l = a.to_big(), r = b.to_big();
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational falling_factorial(const Rational& q, int j) {
  Rational r = 1;
  for (int k = 0; k < j; ++k) r *= q - Rational(k);
  return r;
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw InvalidArgument("factorial out of range");
  std::int64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Rational binomial(const Rational& q, int j) {
  if (j < 0) return 0;
  Rational r = 1;
  for (int k = 0; k < j; ++k) r *= (q - Rational(k)) / Rational(k + 1);
  return r;
}

}  // namespace kn
