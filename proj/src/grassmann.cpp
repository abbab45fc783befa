#include "kn/grassmann.hpp"

#include <algorithm>
#include <ostream>

#include "kn/error.hpp"

namespace kn {

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Each variable of b must hop over the variables of a above it.
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    Mask low = rest & -rest;
    swaps += degree(a & ~(low | (low - 1)));
  }
  return (swaps & 1) ? -1 : 1;
}

int partial_sign(int i, Mask m) {
  Mask bit = Mask(1) << (i - 1);
  if (!(m & bit)) return 0;
  return (degree(m & (bit - 1)) & 1) ? -1 : 1;
}

std::string mask_name(Mask m) {
  if (m == 0) return "1";
  std::string s;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!(m & (Mask(1) << i))) continue;
    if (!s.empty()) s += "^";
    s += "x" + std::to_string(i + 1);
  }
  return s;
}

GrassElem::GrassElem(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 0 || n_vars > kMaxVars)
    throw InvalidArgument("number of Grassmann variables must be in [0, 8]");
}

GrassElem GrassElem::monomial(int n_vars, Mask m, const CycScalar& c) {
  GrassElem r(n_vars);
  if (m >> n_vars) throw InvalidArgument("mask uses a variable beyond n_vars");
  if (!c.is_zero()) r.terms_.emplace_back(m, c);
  return r;
}

GrassElem GrassElem::generator(int n_vars, int i) {
  if (i < 1 || i > n_vars) throw InvalidArgument("generator index out of range");
  return monomial(n_vars, Mask(1) << (i - 1));
}

GrassElem GrassElem::from_terms(int n_vars, std::vector<Term> terms) {
  GrassElem r(n_vars);
  for (const auto& t : terms)
    if (t.first >> n_vars) throw InvalidArgument("mask uses a variable beyond n_vars");
  r.terms_ = std::move(terms);
  r.normalize();
  return r;
}

void GrassElem::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms_.size();) {
    Mask m = terms_[k].first;
    CycScalar c = std::move(terms_[k].second);
    ++k;
    while (k < terms_.size() && terms_[k].first == m) c += terms_[k++].second;
    if (!c.is_zero()) terms_[out++] = Term(m, std::move(c));
  }
  terms_.resize(out);
}

CycScalar GrassElem::coeff(Mask m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return CycScalar();
}

GrassElem GrassElem::component(int deg) const {
  GrassElem r(n_vars_);
  for (const auto& t : terms_)
    if (degree(t.first) == deg) r.terms_.push_back(t);
  return r;
}

GrassElem GrassElem::operator-() const {
  GrassElem r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

GrassElem& GrassElem::operator+=(const GrassElem& o) {
  if (o.n_vars_ != n_vars_) throw InvalidArgument("Grassmann algebras differ");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

GrassElem& GrassElem::operator-=(const GrassElem& o) { return *this += -o; }

GrassElem& GrassElem::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool operator==(const GrassElem& a, const GrassElem& b) {
  if (a.n_vars_ != b.n_vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].first != b.terms_[k].first || !(a.terms_[k].second == b.terms_[k].second))
      return false;
  return true;
}

GrassElem wedge(const GrassElem& f, const GrassElem& g) {
  if (f.n_vars() != g.n_vars()) throw InvalidArgument("Grassmann algebras differ");
  std::vector<GrassElem::Term> out;
  for (const auto& [ma, ca] : f.terms())
    for (const auto& [mb, cb] : g.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out.emplace_back(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  return GrassElem::from_terms(f.n_vars(), std::move(out));
}

GrassElem partial(int i, const GrassElem& f) {
  if (i < 1 || i > f.n_vars()) throw InvalidArgument("derivative index out of range");
  std::vector<GrassElem::Term> out;
  Mask bit = Mask(1) << (i - 1);
  for (const auto& [m, c] : f.terms()) {
    int s = partial_sign(i, m);
    if (s == 0) continue;
    out.emplace_back(m & ~bit, s > 0 ? c : -c);
  }
  return GrassElem::from_terms(f.n_vars(), std::move(out));
}

std::string GrassElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string name = mask_name(m);
    std::string term;
    if (m == 0) {
      term = c.is_monomial() ? c.to_string() : "(" + c.to_string() + ")";
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

std::ostream& operator<<(std::ostream& os, const GrassElem& f) { return os << f.to_string(); }

}  // namespace kn
