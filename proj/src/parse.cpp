#include "kn/parse.hpp"

#include <cctype>
#include <string>

#include "kn/error.hpp"

namespace kn {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const DRing& ring) : ring_(ring) {
    // Accept the Unicode minus sign as well as ASCII.
    std::string s(text);
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k + 2 < s.size() && static_cast<unsigned char>(s[k]) == 0xE2 &&
          static_cast<unsigned char>(s[k + 1]) == 0x88 &&
          static_cast<unsigned char>(s[k + 2]) == 0x92) {
        out += '-';
        k += 2;
      } else {
        out += s[k];
      }
    }
    src_ = std::move(out);
  }

  DRingElem parse() {
    DRingElem v = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + src_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  DRingElem expr() {
    DRingElem v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  DRingElem term() {
    DRingElem v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        DRingElem d = unary();
        if (d.is_zero()) throw DivisionByZero();
        if (!d.is_unit()) fail("division by non-unit " + d.to_string());
        v = v / d;
      } else {
        return v;
      }
    }
  }

  DRingElem unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Rational exponent() {
    if (accept('(')) {
      DRingElem e = expr();
      if (!accept(')')) fail("expected ')'");
      if (!e.is_constant() || !e.constant_term().is_rational()) fail("exponent must be rational");
      return e.constant_term().rational();
    }
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    Rational r = Rational::parse(std::string_view(src_).substr(start, pos_ - start));
    return neg ? -r : r;
  }

  DRingElem power() {
    bool is_t = false;
    DRingElem base = primary(is_t);
    if (!accept('^')) return base;
    Rational e = exponent();
    if (is_t) return DRingElem::t_power(ring_, e);
    if (!e.is_integer() || !e.is_small()) fail("non-integer power of a non-monomial");
    std::int64_t k = e.small_num();
    if (k < 0) {
      if (!base.is_unit()) fail("negative power of a non-unit");
      base = base.inverse();
      k = -k;
    }
    DRingElem r = DRingElem::constant(ring_, 1);
    for (std::int64_t j = 0; j < k; ++j) r *= base;
    return r;
  }

  DRingElem primary(bool& is_t) {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    if (accept('(')) {
      DRingElem v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return DRingElem::constant(ring_, CycScalar(Rational::parse(
                                            std::string_view(src_).substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string id = src_.substr(start, pos_ - start);
      if (id == "i") return DRingElem::constant(ring_, CycScalar::imag_unit());
      if (id == "t") {
        if (ring_.is_dual()) fail("'t' in the dual numbers");
        is_t = true;
        return DRingElem::t_power(ring_, 1);
      }
      if (id == "tau") {
        if (!ring_.is_dual()) fail("'tau' outside the dual numbers");
        return DRingElem::monomial(ring_, 1);
      }
      if (id.size() > 1 && id[0] == 'z' && id.find_first_not_of("0123456789", 1) == std::string::npos) {
        int n = std::stoi(id.substr(1));
        if (n < 1) fail("zeta order must be positive");
        return DRingElem::constant(ring_, CycScalar::zeta(n, 1));
      }
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string src_;
  std::size_t pos_ = 0;
  DRing ring_;
};

}  // namespace

DRingElem parse_ring_elem(std::string_view text, const DRing& ring) {
  return Parser(text, ring).parse();
}

CycScalar parse_scalar(std::string_view text) {
  DRingElem e = Parser(text, DRing::laurent(1)).parse();
  if (!e.is_constant()) throw ParseError("'" + std::string(text) + "' is not a constant");
  return e.constant_term();
}

DRing parse_ring(std::string_view text) {
  std::string s(text);
  if (s == "R" || s == "laurent") return DRing::laurent(1);
  if (s == "dual") return DRing::dual();
  bool zero = false;
  std::string body;
  if (s.rfind("laurent0(", 0) == 0 && s.back() == ')') {
    zero = true;
    body = s.substr(9, s.size() - 10);
  } else if (s.rfind("laurent(", 0) == 0 && s.back() == ')') {
    body = s.substr(8, s.size() - 9);
  } else if (s.size() > 1 && s[0] == 'S') {
    body = s.substr(1);
  } else {
    throw ParseError("unknown ring '" + s + "'");
  }
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad ring denominator in '" + s + "'");
  std::int64_t m = std::stoll(body);
  if (m < 1) throw ParseError("ring denominator must be positive");
  return DRing::laurent(m, zero);
}

}  // namespace kn
