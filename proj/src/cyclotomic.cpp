#include "kn/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "kn/error.hpp"

namespace kn {

namespace {

struct Tables {
  int n = 1;
  int phi = 1;
  std::vector<Rational> poly;                // monic, degree phi
  std::vector<std::vector<Rational>> power;  // x^e mod poly, e in [0, n)
};

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

// Exact division by a monic polynomial with zero remainder.
Poly divide_monic(Poly num, const Poly& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  Poly q(dn - dd + 1);
  for (int k = dn - dd; k >= 0; --k) {
    Rational c = num[k + dd];
    q[k] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  return q;
}

std::unique_ptr<Tables> build_tables(int n) {
  auto t = std::make_unique<Tables>();
  t->n = n;
  t->poly = cyclotomic_polynomial(n);
  t->phi = static_cast<int>(t->poly.size()) - 1;
  t->power.resize(n);
  std::vector<Rational> cur(t->phi);
  cur[0] = 1;
  for (int e = 0; e < n; ++e) {
    t->power[e] = cur;
    Rational lead = cur[t->phi - 1];
    for (int k = t->phi - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (!lead.is_zero())
      for (int k = 0; k < t->phi; ++k) cur[k] -= lead * t->poly[k];
  }
  return t;
}

const Tables& tables(int n) {
  thread_local std::unordered_map<int, const Tables*> local;
  auto it = local.find(n);
  if (it != local.end()) return *it->second;
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Tables>> shared;
  const Tables* ptr;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = shared[n];
    if (!slot) slot = build_tables(n);
    ptr = slot.get();
  }
  local.emplace(n, ptr);
  return *ptr;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
  int r = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<Rational>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  trim(p);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

CycScalar CycScalar::zeta(int m, std::int64_t p) {
  if (m < 1) throw InvalidArgument("zeta order must be positive");
  const Tables& t = tables(m);
  std::int64_t e = ((p % m) + m) % m;
  CycScalar r;
  r.order_ = m;
  r.coeffs_.assign(t.power[e].begin(), t.power[e].end());
  r.normalize();
  return r;
}

CycScalar CycScalar::from_coeffs(int order, std::vector<Rational> coeffs) {
  const Tables& t = tables(order);
  CycScalar r;
  r.order_ = order;
  r.coeffs_.assign(t.phi, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    const auto& pw = t.power[k % order];
    for (int j = 0; j < t.phi; ++j)
      if (!pw[j].is_zero()) r.coeffs_[j] += coeffs[k] * pw[j];
  }
  r.normalize();
  return r;
}

void CycScalar::normalize() {
  if (order_ == 1) return;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return;
  order_ = 1;
  coeffs_.resize(1);
}

bool CycScalar::is_zero() const { return order_ == 1 && coeffs_[0].is_zero(); }

const Rational& CycScalar::rational() const {
  if (order_ != 1) throw InvalidArgument("scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

CycScalar CycScalar::embed(int target) const {
  CycScalar r = lift(target);
  r.normalize();
  return r;
}

CycScalar CycScalar::lift(int target) const {
  if (target % order_ != 0)
    throw InvalidArgument("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                          std::to_string(target) + ")");
  if (target == order_) return *this;
  const Tables& t = tables(target);
  int k = target / order_;
  CycScalar r;
  r.order_ = target;
  r.coeffs_.assign(t.phi, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const auto& pw = t.power[(j * k) % target];
    for (int l = 0; l < t.phi; ++l)
      if (!pw[l].is_zero()) r.coeffs_[l] += coeffs_[j] * pw[l];
  }
  return r;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (order_ == 1 && o.order_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (order_ == o.order_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }
  int l = std::lcm(order_, o.order_);
  CycScalar a = lift(l);
  CycScalar b = o.lift(l);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
  a.normalize();
  return *this = std::move(a);
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  if (o.order_ == 1) {
    const Rational& c = o.coeffs_[0];
    if (c.is_zero()) return *this = CycScalar();
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  if (order_ == 1) {
    Rational c = coeffs_[0];
    if (c.is_zero()) return *this;
    *this = o;
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  int l = std::lcm(order_, o.order_);
  CycScalar a = lift(l);
  CycScalar b = o.lift(l);
  const Tables& t = tables(l);
  CycScalar r;
  r.order_ = l;
  r.coeffs_.assign(t.phi, Rational(0));
  for (int j = 0; j < t.phi; ++j) {
    if (a.coeffs_[j].is_zero()) continue;
    for (int k = 0; k < t.phi; ++k) {
      if (b.coeffs_[k].is_zero()) continue;
      Rational c = a.coeffs_[j] * b.coeffs_[k];
      const auto& pw = t.power[(j + k) % l];
      for (int m = 0; m < t.phi; ++m)
        if (!pw[m].is_zero()) r.coeffs_[m] += c * pw[m];
    }
  }
  r.normalize();
  return *this = std::move(r);
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (order_ == 1) return CycScalar(coeffs_[0].inverse());
  const Tables& t = tables(order_);
  int d = t.phi;
  // Column j of the augmented system holds the coordinates of this * zeta^j.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (int j = 0; j < d; ++j) {
    CycScalar col = *this * zeta(order_, j);
    CycScalar e = col.lift(order_);
    for (int r = 0; r < d; ++r) m[r][j] = e.coeffs_[r];
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && m[piv][c].is_zero()) ++piv;
    if (piv == d) throw DivisionByZero();
    std::swap(m[piv], m[c]);
    Rational inv = m[c][c].inverse();
    for (int k = c; k <= d; ++k) m[c][k] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (int k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  CycScalar r;
  r.order_ = order_;
  r.coeffs_.resize(d);
  for (int k = 0; k < d; ++k) r.coeffs_[k] = m[k][d];
  r.normalize();
  return r;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) { return *this *= o.inverse(); }

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.order_ == b.order_) {
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    return true;
  }
  int l = std::lcm(a.order_, b.order_);
  CycScalar x = a.lift(l), y = b.lift(l);
  for (std::size_t k = 0; k < x.coeffs_.size(); ++k)
    if (!(x.coeffs_[k] == y.coeffs_[k])) return false;
  return true;
}

namespace {

std::string basis_name(int order, int k) {
  if (k == 0) return "";
  if (order == 4) return "i";
  std::string s = "z" + std::to_string(order);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

bool CycScalar::is_monomial() const {
  int nz = 0;
  for (const auto& c : coeffs_)
    if (!c.is_zero()) ++nz;
  if (nz != 1) return nz == 0;
  return true;
}

std::string CycScalar::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string name = basis_name(order_, static_cast<int>(k));
    Rational mag = c.sign() < 0 ? -c : c;
    std::string body;
    if (name.empty()) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = name;
    } else {
      body = mag.to_string() + "*" + name;
    }
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + body;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CycScalar& c) { return os << c.to_string(); }

}  // namespace kn
