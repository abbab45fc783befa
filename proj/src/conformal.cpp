#include "kn/conformal.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <ostream>

#include "kn/error.hpp"

namespace kn {

namespace {

std::vector<BaseProduct> build_base(int n) {
  std::size_t dim = std::size_t(1) << n;
  std::vector<BaseProduct> table(dim * dim);
  for (Mask f = 0; f < dim; ++f)
    for (Mask g = 0; g < dim; ++g) {
      BaseProduct& bp = table[f * dim + g];
      int df = degree(f), dg = degree(g);
      int ws = wedge_sign(f, g);
      if (ws != 0) {
        Rational a = Rational(df, 2) - 1;
        if (!a.is_zero()) bp.p0.push_back({1, f | g, ws > 0 ? a : -a});
        Rational c = Rational(df + dg, 2) - 2;
        if (!c.is_zero()) bp.p1.push_back({0, f | g, ws > 0 ? c : -c});
      }
      Rational half = (df % 2 == 0) ? Rational(1, 2) : Rational(-1, 2);
      std::map<Mask, Rational> acc;
      for (int i = 1; i <= n; ++i) {
        int sf = partial_sign(i, f), sg = partial_sign(i, g);
        if (sf == 0 || sg == 0) continue;
        Mask bit = Mask(1) << (i - 1);
        Mask fi = f & ~bit, gi = g & ~bit;
        int s = wedge_sign(fi, gi);
        if (s == 0) continue;
        acc[fi | gi] += Rational(sf * sg * s) * half;
      }
      for (auto& [m, c] : acc)
        if (!c.is_zero()) bp.p0.push_back({0, m, c});
    }
  return table;
}

}  // namespace

const BaseProduct& base_product(int n_vars, Mask f, Mask g) {
  if (n_vars < 0 || n_vars > kMaxVars) throw InvalidArgument("unsupported number of variables");
  static std::array<std::once_flag, kMaxVars + 1> once;
  static std::array<std::vector<BaseProduct>, kMaxVars + 1> tables;
  std::call_once(once[n_vars], [&] { tables[n_vars] = build_base(n_vars); });
  return tables[n_vars][(std::size_t(f) << n_vars) + g];
}

void atom_products(int n_vars, const DRing& ring, int p, Mask f, std::int64_t u, int q, Mask g,
                   std::int64_t v, const AtomSink& sink) {
  const BaseProduct& bp = base_product(n_vars, f, g);
  int kmax = p + q + 1;
  Rational sign_p = (p % 2 == 0) ? Rational(1) : Rational(-1);
  for (int j = 0; j <= kmax; ++j) {
    auto du = ring.divided_derivative(u, j);
    if (!du) {
      if (j > 0 && !ring.has_derivation()) break;
      if (j > 0 && ring.is_dual()) break;
      continue;
    }
    auto mono = ring.mul_index(du->first, v);
    if (!mono) continue;
    for (int k = j; k <= kmax; ++k) {
      int n = k - j;
      Rational kf = Rational(factorial(k)) * sign_p * du->second;
      int s0 = k - p;
      if (s0 >= 0 && s0 <= q) {
        Rational c = kf * binomial(Rational(q), s0);
        for (const auto& e : bp.p0) sink(n, q - s0 + e.dpow, e.mask, *mono, c * e.c);
      }
      int s1 = k - p - 1;
      if (s1 >= 0 && s1 <= q) {
        Rational c = kf * binomial(Rational(q), s1);
        for (const auto& e : bp.p1) sink(n, q - s1 + e.dpow, e.mask, *mono, c * e.c);
      }
    }
  }
}

std::uint64_t ConfElem::make_key(int dpow, Mask mask, std::int64_t mono) {
  if (dpow < 0 || dpow >= (1 << 16)) throw InvalidArgument("d-power out of range");
  std::int64_t biased = mono + kMonoBias;
  if (biased < 0 || biased > 0xffffffffLL) throw InvalidArgument("ring exponent out of range");
  return (std::uint64_t(dpow) << 48) | (std::uint64_t(mask) << 32) | std::uint64_t(biased);
}

ConfElem::ConfElem(int n_vars, const DRing& ring) : n_vars_(n_vars), ring_(ring) {
  if (n_vars < 0 || n_vars > kMaxVars) throw InvalidArgument("unsupported number of variables");
}

ConfElem ConfElem::atom(int n_vars, const DRing& ring, int dpow, Mask mask, std::int64_t mono,
                        const CycScalar& c) {
  ConfElem r(n_vars, ring);
  if (mask >> n_vars) throw InvalidArgument("mask uses a variable beyond n_vars");
  if (ring.is_dual() && (mono < 0 || mono > 1))
    throw InvalidArgument("dual-number monomial index must be 0 or 1");
  if (!c.is_zero()) r.terms_.push_back({make_key(dpow, mask, mono), c});
  return r;
}

ConfElem ConfElem::from_grass(const GrassElem& f, const DRingElem& r, const DRing& ring,
                              int dpow) {
  ConfElem out(f.n_vars(), ring);
  DRingElem rr = r.ring() ? r : r.with_ring(ring);
  if (!(*rr.ring() == ring)) throw RingMismatch("coefficient ring differs from algebra ring");
  for (const auto& [m, c] : f.terms())
    for (const auto& [idx, d] : rr.terms()) out.terms_.push_back({make_key(dpow, m, idx), c * d});
  out.normalize();
  return out;
}

ConfElem ConfElem::from_terms(int n_vars, const DRing& ring, std::vector<Term> terms) {
  ConfElem r(n_vars, ring);
  r.terms_ = std::move(terms);
  r.normalize();
  return r;
}

void ConfElem::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.key < b.key; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms_.size();) {
    std::uint64_t key = terms_[k].key;
    CycScalar c = std::move(terms_[k].c);
    ++k;
    while (k < terms_.size() && terms_[k].key == key) c += terms_[k++].c;
    if (!c.is_zero()) terms_[out++] = Term{key, std::move(c)};
  }
  terms_.resize(out);
}

int ConfElem::max_dpow() const {
  int r = -1;
  for (const auto& t : terms_) r = std::max(r, t.dpow());
  return r;
}

int ConfElem::parity() const {
  int p = -2;
  for (const auto& t : terms_) {
    int q = kn::parity(t.mask());
    if (p == -2) {
      p = q;
    } else if (p != q) {
      return -1;
    }
  }
  return p == -2 ? 0 : p;
}

DRingElem ConfElem::coeff(int dpow, Mask mask) const {
  std::vector<DRingElem::Term> out;
  for (const auto& t : terms_)
    if (t.dpow() == dpow && t.mask() == mask) out.emplace_back(t.mono(), t.c);
  return DRingElem::from_terms(ring_, std::move(out));
}

GrassElem ConfElem::grass_part(int dpow, std::int64_t mono) const {
  std::vector<GrassElem::Term> out;
  for (const auto& t : terms_)
    if (t.dpow() == dpow && t.mono() == mono) out.emplace_back(t.mask(), t.c);
  return GrassElem::from_terms(n_vars_, std::move(out));
}

ConfElem ConfElem::operator-() const {
  ConfElem r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

void check_same(const ConfElem& a, const ConfElem& b) {
  if (a.n_vars() != b.n_vars())
    throw InvalidArgument("elements of K_" + std::to_string(a.n_vars()) + " and K_" +
                          std::to_string(b.n_vars()) + " cannot be combined");
  if (!(a.ring() == b.ring()))
    throw RingMismatch("ring mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
}

}  // namespace

ConfElem& ConfElem::operator+=(const ConfElem& o) {
  check_same(*this, o);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

ConfElem& ConfElem::operator-=(const ConfElem& o) { return *this += -o; }

ConfElem& ConfElem::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

ConfElem& ConfElem::operator*=(const DRingElem& r) {
  if (r.ring() && !(*r.ring() == ring_)) throw RingMismatch("coefficient ring differs");
  std::vector<Term> out;
  for (const auto& t : terms_)
    for (const auto& [idx, c] : r.terms()) {
      auto mono = ring_.mul_index(t.mono(), idx);
      if (mono) out.push_back({make_key(t.dpow(), t.mask(), *mono), t.c * c});
    }
  terms_ = std::move(out);
  normalize();
  return *this;
}

bool operator==(const ConfElem& a, const ConfElem& b) {
  if (a.n_vars_ != b.n_vars_ || !(a.ring_ == b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].key != b.terms_[k].key || !(a.terms_[k].c == b.terms_[k].c)) return false;
  return true;
}

std::string ConfElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  std::size_t k = 0;
  while (k < terms_.size()) {
    int dp = terms_[k].dpow();
    Mask m = terms_[k].mask();
    std::vector<DRingElem::Term> coef;
    while (k < terms_.size() && terms_[k].dpow() == dp && terms_[k].mask() == m) {
      coef.emplace_back(terms_[k].mono(), terms_[k].c);
      ++k;
    }
    DRingElem r = DRingElem::from_terms(ring_, std::move(coef));
    std::string head;
    if (dp == 1) head = "d";
    if (dp > 1) head = "d^" + std::to_string(dp);
    if (m != 0 || head.empty()) head += (head.empty() ? "" : " ") + mask_name(m);
    std::string rs = r.to_string();
    if (r.terms().size() > 1) rs = "(" + rs + ")";
    std::string term = head + " ⊗ " + rs;
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ConfElem& x) { return os << x.to_string(); }

ConfElem dhat(const ConfElem& x) {
  std::vector<ConfElem::Term> out;
  for (const auto& t : x.terms()) {
    out.push_back({ConfElem::make_key(t.dpow() + 1, t.mask(), t.mono()), t.c});
    auto d = x.ring().divided_derivative(t.mono(), 1);
    if (d) out.push_back({ConfElem::make_key(t.dpow(), t.mask(), d->first), t.c * CycScalar(d->second)});
  }
  return ConfElem::from_terms(x.n_vars(), x.ring(), std::move(out));
}

ConfElem dpart(const ConfElem& x) {
  std::vector<ConfElem::Term> out;
  for (const auto& t : x.terms())
    out.push_back({ConfElem::make_key(t.dpow() + 1, t.mask(), t.mono()), t.c});
  return ConfElem::from_terms(x.n_vars(), x.ring(), std::move(out));
}

std::vector<ConfElem> all_products(const ConfElem& x, const ConfElem& y) {
  check_same(x, y);
  std::vector<std::vector<ConfElem::Term>> acc;
  for (const auto& a : x.terms())
    for (const auto& b : y.terms()) {
      CycScalar cab = a.c * b.c;
      atom_products(x.n_vars(), x.ring(), a.dpow(), a.mask(), a.mono(), b.dpow(), b.mask(),
                    b.mono(),
                    [&](int n, int dp, Mask m, std::int64_t mono, const Rational& c) {
                      if (static_cast<int>(acc.size()) <= n) acc.resize(n + 1);
                      acc[n].push_back({ConfElem::make_key(dp, m, mono), cab * CycScalar(c)});
                    });
    }
  std::vector<ConfElem> out;
  out.reserve(acc.size());
  for (auto& terms : acc) out.push_back(ConfElem::from_terms(x.n_vars(), x.ring(), std::move(terms)));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

ConfElem nth_product(int n, const ConfElem& x, const ConfElem& y) {
  if (n < 0) throw InvalidArgument("product index must be non-negative");
  std::vector<ConfElem> all = all_products(x, y);
  if (n < static_cast<int>(all.size())) return all[n];
  return ConfElem(x.n_vars(), x.ring());
}

LambdaPoly::LambdaPoly(std::vector<ConfElem> products) {
  if (products.empty()) throw InvalidArgument("empty product list needs an explicit algebra");
  n_vars_ = products[0].n_vars();
  ring_ = products[0].ring();
  while (!products.empty() && products.back().is_zero()) products.pop_back();
  coeffs_ = std::move(products);
}

ConfElem LambdaPoly::divided(int n) const {
  if (n >= 0 && n < static_cast<int>(coeffs_.size())) return coeffs_[n];
  return ConfElem(n_vars_, ring_);
}

ConfElem LambdaPoly::plain(int n) const {
  return divided(n) * CycScalar(Rational(1) / Rational(factorial(n)));
}

bool operator==(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
    if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
  return true;
}

std::string LambdaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int n = 0; n <= degree(); ++n) {
    ConfElem c = plain(n);
    if (c.is_zero()) continue;
    std::string lam = n == 0 ? "" : (n == 1 ? "λ" : "λ^" + std::to_string(n));
    std::string term = lam.empty() ? c.to_string() : lam + " (" + c.to_string() + ")";
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

LambdaPoly lambda_bracket(const ConfElem& x, const ConfElem& y) {
  std::vector<ConfElem> p = all_products(x, y);
  if (p.empty()) return LambdaPoly(x.n_vars(), x.ring());
  return LambdaPoly(std::move(p));
}

}  // namespace kn
