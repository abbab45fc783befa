#include "kn/diffring.hpp"

#include <algorithm>
#include <ostream>

#include "kn/error.hpp"

namespace kn {

DRing DRing::laurent(std::int64_t m, bool zero_derivation) {
  if (m < 1) throw InvalidArgument("Laurent denominator must be positive");
  return DRing{Kind::laurent, m, zero_derivation};
}

std::int64_t DRing::index_of(const Rational& q) const {
  if (is_dual()) throw InvalidArgument("dual numbers have no t-powers");
  Rational k = q * Rational(denom);
  if (!k.is_integer() || !k.is_small())
    throw InvalidArgument("exponent " + q.to_string() + " is not in (1/" + std::to_string(denom) +
                          ")Z");
  return k.small_num();
}

std::optional<std::pair<std::int64_t, Rational>> DRing::divided_derivative(std::int64_t index,
                                                                           int j) const {
  if (j == 0) return std::make_pair(index, Rational(1));
  if (zero_derivation || is_dual()) return std::nullopt;
  Rational c = binomial(Rational(index, denom), j);
  if (c.is_zero()) return std::nullopt;
  return std::make_pair(index - static_cast<std::int64_t>(j) * denom, c);
}

std::optional<std::int64_t> DRing::mul_index(std::int64_t a, std::int64_t b) const {
  if (is_dual() && a + b > 1) return std::nullopt;
  return a + b;
}

std::string DRing::to_string() const {
  if (is_dual()) return "dual";
  std::string s = "laurent(" + std::to_string(denom) + ")";
  if (zero_derivation) s += "[delta=0]";
  return s;
}

std::optional<DRing> common_ring(const std::optional<DRing>& a, const std::optional<DRing>& b) {
  if (!a) return b;
  if (!b) return a;
  if (!(*a == *b)) throw RingMismatch("ring mismatch: " + a->to_string() + " vs " + b->to_string());
  return a;
}

DRingElem::DRingElem(const CycScalar& c) {
  if (!c.is_zero()) terms_.emplace_back(0, c);
}

DRingElem DRingElem::constant(const DRing& ring, const CycScalar& c) {
  DRingElem r(c);
  r.ring_ = ring;
  return r;
}

DRingElem DRingElem::monomial(const DRing& ring, std::int64_t index, const CycScalar& c) {
  if (ring.is_dual() && (index < 0 || index > 1))
    throw InvalidArgument("dual-number monomial index must be 0 or 1");
  DRingElem r;
  r.ring_ = ring;
  if (!c.is_zero()) r.terms_.emplace_back(index, c);
  return r;
}

DRingElem DRingElem::t_power(const DRing& ring, const Rational& q, const CycScalar& c) {
  return monomial(ring, ring.index_of(q), c);
}

DRingElem DRingElem::tau(const CycScalar& c) { return monomial(DRing::dual(), 1, c); }

DRingElem DRingElem::from_terms(std::optional<DRing> ring, std::vector<Term> terms) {
  DRingElem r;
  r.ring_ = ring;
  r.terms_ = std::move(terms);
  if (!ring)
    for (const auto& t : r.terms_)
      if (t.first != 0) throw InvalidArgument("non-constant term without a ring");
  if (ring && ring->is_dual())
    for (const auto& t : r.terms_)
      if (t.first < 0 || t.first > 1) throw InvalidArgument("dual-number index must be 0 or 1");
  r.normalize();
  return r;
}

void DRingElem::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms_.size();) {
    std::int64_t idx = terms_[k].first;
    CycScalar c = std::move(terms_[k].second);
    ++k;
    while (k < terms_.size() && terms_[k].first == idx) c += terms_[k++].second;
    if (!c.is_zero()) terms_[out++] = Term(idx, std::move(c));
  }
  terms_.resize(out);
}

bool DRingElem::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

CycScalar DRingElem::constant_term() const { return coeff(0); }

CycScalar DRingElem::coeff(std::int64_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::int64_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return CycScalar();
}

bool DRingElem::is_unit() const {
  if (terms_.empty()) return false;
  if (ring_ && ring_->is_dual()) return !constant_term().is_zero();
  return terms_.size() == 1;
}

DRingElem DRingElem::inverse() const {
  if (terms_.empty()) throw DivisionByZero();
  if (ring_ && ring_->is_dual()) {
    // (a + b tau)^-1 = 1/a - b/a^2 tau
    CycScalar a = constant_term();
    if (a.is_zero()) throw DivisionByZero();
    CycScalar ai = a.inverse();
    CycScalar b = coeff(1);
    return from_terms(ring_, {{0, ai}, {1, -(b * ai * ai)}});
  }
  if (terms_.size() != 1) throw InvalidArgument("element " + to_string() + " is not a unit");
  DRingElem r;
  r.ring_ = ring_;
  r.terms_.emplace_back(-terms_[0].first, terms_[0].second.inverse());
  return r;
}

DRingElem DRingElem::with_ring(const DRing& ring) const {
  if (ring_ && !(*ring_ == ring)) return embed(ring);
  return from_terms(ring, terms_);
}

DRingElem DRingElem::embed(const DRing& target) const {
  if (!ring_) return from_terms(target, terms_);
  if (*ring_ == target) return *this;
  if (!ring_->is_laurent() || !target.is_laurent() || target.denom % ring_->denom != 0 ||
      ring_->zero_derivation != target.zero_derivation)
    throw RingMismatch("cannot embed " + ring_->to_string() + " into " + target.to_string());
  std::int64_t k = target.denom / ring_->denom;
  std::vector<Term> t = terms_;
  for (auto& term : t) term.first *= k;
  return from_terms(target, std::move(t));
}

DRingElem DRingElem::operator-() const {
  DRingElem r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

DRingElem& DRingElem::operator+=(const DRingElem& o) {
  ring_ = common_ring(ring_, o.ring_);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

DRingElem& DRingElem::operator-=(const DRingElem& o) { return *this += -o; }

DRingElem operator*(const DRingElem& a, const DRingElem& b) {
  DRingElem r;
  r.ring_ = common_ring(a.ring_, b.ring_);
  for (const auto& [ia, ca] : a.terms_)
    for (const auto& [ib, cb] : b.terms_) {
      std::optional<std::int64_t> idx = r.ring_ ? r.ring_->mul_index(ia, ib) : ia + ib;
      if (idx) r.terms_.emplace_back(*idx, ca * cb);
    }
  r.normalize();
  return r;
}

DRingElem& DRingElem::operator*=(const DRingElem& o) { return *this = *this * o; }

DRingElem& DRingElem::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool operator==(const DRingElem& a, const DRingElem& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !(*a.ring_ == *b.ring_) && !(a.is_constant() && b.is_constant()))
    return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].first != b.terms_[k].first || !(a.terms_[k].second == b.terms_[k].second))
      return false;
  return true;
}

DRingElem derive(const DRingElem& x, int j) {
  if (j < 0) throw InvalidArgument("derivative order must be non-negative");
  if (j == 0) return x;
  if (!x.ring()) return DRingElem();
  const DRing& ring = *x.ring();
  std::vector<DRingElem::Term> out;
  for (const auto& [idx, c] : x.terms()) {
    auto d = ring.divided_derivative(idx, j);
    if (d) out.emplace_back(d->first, c * CycScalar(d->second));
  }
  return DRingElem::from_terms(ring, std::move(out));
}

namespace {

std::string monomial_name(const std::optional<DRing>& ring, std::int64_t idx) {
  if (idx == 0) return "";
  if (ring && ring->is_dual()) return "tau";
  std::int64_t m = ring ? ring->denom : 1;
  Rational q(idx, m);
  if (q.is_one()) return "t";
  if (q.is_integer() && q.sign() > 0) return "t^" + q.to_string();
  return "t^(" + q.to_string() + ")";
}

}  // namespace

std::string DRingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : terms_) {
    std::string name = monomial_name(ring_, idx);
    std::string term;
    if (name.empty()) {
      term = c.to_string();
      if (!c.is_monomial() && !out.empty()) term = "(" + term + ")";
    } else if (c.is_one()) {
      term = name;
    } else if (c == CycScalar(-1)) {
      term = "-" + name;
    } else if (c.is_monomial()) {
      term = c.to_string() + "*" + name;
    } else {
      term = "(" + c.to_string() + ")*" + name;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DRingElem& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const DRing& r) { return os << r.to_string(); }

}  // namespace kn
