#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "kn/cyclotomic.hpp"
#include "kn/diffring.hpp"
#include "kn/grassmann.hpp"

namespace kn {

/// Zeroth and first products of two Grassmann monomials in K_N, before any
/// derivative or ring coefficient is attached. Each entry is c * d^dpow xi^mask.
struct BaseProduct {
  struct Entry {
    int dpow;
    Mask mask;
    Rational c;
  };
  std::vector<Entry> p0;  // f_(0) g
  std::vector<Entry> p1;  // f_(1) g
};

const BaseProduct& base_product(int n_vars, Mask f, Mask g);

/// Every nonzero contribution to (d^p f (x) u)_(n) (d^q g (x) v), where u, v
/// are ring monomial indices. The callback receives
/// (n, dpow, mask, monomial index, coefficient); a given (n, dpow, mask,
/// index) may be reported more than once and must be summed by the caller.
using AtomSink = std::function<void(int, int, Mask, std::int64_t, const Rational&)>;
void atom_products(int n_vars, const DRing& ring, int p, Mask f, std::int64_t u, int q, Mask g,
                   std::int64_t v, const AtomSink& sink);

/// Element of K_N (x) D: a finite sum of c * d^l xi^mask (x) monomial.
class ConfElem {
 public:
  struct Term {
    std::uint64_t key;
    CycScalar c;

    int dpow() const { return static_cast<int>(key >> 48); }
    Mask mask() const { return static_cast<Mask>((key >> 32) & 0xffff); }
    std::int64_t mono() const { return static_cast<std::int64_t>(key & 0xffffffffu) - kMonoBias; }
  };
  static constexpr std::int64_t kMonoBias = std::int64_t(1) << 31;
  static std::uint64_t make_key(int dpow, Mask mask, std::int64_t mono);

  ConfElem(int n_vars, const DRing& ring);

  /// c * d^dpow xi^mask (x) monomial(mono).
  static ConfElem atom(int n_vars, const DRing& ring, int dpow, Mask mask, std::int64_t mono = 0,
                       const CycScalar& c = 1);
  /// d^dpow f (x) r.
  static ConfElem from_grass(const GrassElem& f, const DRingElem& r, const DRing& ring,
                             int dpow = 0);
  static ConfElem from_terms(int n_vars, const DRing& ring, std::vector<Term> terms);

  int n_vars() const { return n_vars_; }
  const DRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest d-power present (-1 for zero).
  int max_dpow() const;
  /// 0 or 1 when every term has that parity, -1 when mixed, 0 for zero.
  int parity() const;
  /// Ring coefficient of d^dpow xi^mask.
  DRingElem coeff(int dpow, Mask mask) const;
  /// Grassmann part at a given d-power and ring monomial.
  GrassElem grass_part(int dpow, std::int64_t mono) const;

  ConfElem operator-() const;
  ConfElem& operator+=(const ConfElem& o);
  ConfElem& operator-=(const ConfElem& o);
  ConfElem& operator*=(const CycScalar& c);
  /// D-module action on the ring factor.
  ConfElem& operator*=(const DRingElem& r);
  friend ConfElem operator+(ConfElem a, const ConfElem& b) { return a += b; }
  friend ConfElem operator-(ConfElem a, const ConfElem& b) { return a -= b; }
  friend ConfElem operator*(ConfElem a, const CycScalar& c) { return a *= c; }
  friend ConfElem operator*(const CycScalar& c, ConfElem a) { return a *= c; }
  friend ConfElem operator*(ConfElem a, const DRingElem& r) { return a *= r; }
  friend ConfElem operator*(const DRingElem& r, ConfElem a) { return a *= r; }
  friend bool operator==(const ConfElem& a, const ConfElem& b);

  /// "d^2 x1^x2 ⊗ (3/2*t^2) + x3 ⊗ 1".
  std::string to_string() const;

  /// Sorts and merges terms; public so bulk builders can append freely.
  void normalize();
  std::vector<Term>& mutable_terms() { return terms_; }

 private:
  int n_vars_;
  DRing ring_;
  std::vector<Term> terms_;
};

/// d-hat = d (x) id + id (x) delta.
ConfElem dhat(const ConfElem& x);
/// d (x) id only.
ConfElem dpart(const ConfElem& x);

/// x_(n) y.
ConfElem nth_product(int n, const ConfElem& x, const ConfElem& y);
/// All n-th products; entry n is x_(n) y, trailing zeros trimmed.
std::vector<ConfElem> all_products(const ConfElem& x, const ConfElem& y);

/// [x_lambda y] = sum_n lambda^(n) x_(n) y with divided powers lambda^(n) = lambda^n / n!.
class LambdaPoly {
 public:
  LambdaPoly(int n_vars, const DRing& ring) : n_vars_(n_vars), ring_(ring) {}
  explicit LambdaPoly(std::vector<ConfElem> products);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of lambda^(n), i.e. x_(n) y.
  ConfElem divided(int n) const;
  /// Coefficient of lambda^n, i.e. x_(n) y / n!.
  ConfElem plain(int n) const;
  const std::vector<ConfElem>& divided_coeffs() const { return coeffs_; }

  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b);
  /// Plain-power rendering, e.g. "-d ⊗ 1 - 2λ (1 ⊗ 1)".
  std::string to_string() const;

 private:
  int n_vars_ = 0;
  DRing ring_;
  std::vector<ConfElem> coeffs_;
};

LambdaPoly lambda_bracket(const ConfElem& x, const ConfElem& y);

std::ostream& operator<<(std::ostream& os, const ConfElem& x);

}  // namespace kn
