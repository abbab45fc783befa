#include "kn/superconf.hpp"

#include <algorithm>
#include <map>

#include "kn/error.hpp"

namespace kn {

std::string to_string(Twist t) { return t == Twist::id ? "id" : "omega"; }

Twist parse_twist(const std::string& s) {
  if (s == "id") return Twist::id;
  if (s == "omega") return Twist::omega;
  throw InvalidArgument("unknown twist '" + s + "' (expected id or omega)");
}

namespace {

ConformalAut twist_aut(int n, Twist t) {
  DRing r = DRing::laurent(1);
  return t == Twist::id ? ConformalAut::identity(n, r) : omega(n, r);
}

void same_algebra(const SCElem& a, const SCElem& b) {
  if (a.n_vars != b.n_vars || a.twist != b.twist)
    throw InvalidArgument("elements of different superconformal algebras");
}

}  // namespace

SuperconformalAlgebra::SuperconformalAlgebra(int n_vars, Twist twist)
    : n_vars_(n_vars), twist_(twist), ring_(DRing::laurent(2)) {
  if (n_vars < 1 || n_vars > 3) throw InvalidArgument("superconformal algebras are built for N = 1, 2, 3");
  loop_ = eigenspace_decompose(twist_aut(n_vars, twist), twist == Twist::id ? 1 : 2);
}

std::string SuperconformalAlgebra::name() const {
  return "Alg(K_" + std::to_string(n_vars_) + ", " + to_string(twist_) + ")";
}

SCElem& SCElem::operator+=(const SCElem& o) {
  same_algebra(*this, o);
  rep += o.rep;
  return *this;
}

SCElem& SCElem::operator-=(const SCElem& o) {
  same_algebra(*this, o);
  rep -= o.rep;
  return *this;
}

SCElem& SCElem::operator*=(const CycScalar& c) {
  rep *= c;
  return *this;
}

bool operator==(const SCElem& a, const SCElem& b) {
  return a.n_vars == b.n_vars && a.twist == b.twist && a.rep == b.rep;
}

SCElem zero(const SuperconformalAlgebra& alg) {
  return SCElem{alg.n_vars(), alg.twist(), ConfElem(alg.n_vars(), alg.ring())};
}

namespace {

ConfElem reduce(const ConfElem& x) {
  const DRing& ring = x.ring();
  std::vector<ConfElem::Term> out;
  for (const auto& t : x.terms()) {
    int l = t.dpow();
    Rational q = ring.exponent_of(t.mono());
    if (l == 0) {
      out.push_back(t);
      continue;
    }
    Rational f = falling_factorial(q, l);
    if (f.is_zero()) continue;
    if (l % 2) f = -f;
    out.push_back({ConfElem::make_key(0, t.mask(), ring.index_of(q - Rational(l))), t.c * CycScalar(f)});
  }
  return ConfElem::from_terms(x.n_vars(), ring, std::move(out));
}

}  // namespace

SCElem normal_form(const SuperconformalAlgebra& alg, const ConfElem& x) {
  if (x.n_vars() != alg.n_vars()) throw InvalidArgument("element and algebra differ in N");
  if (!(x.ring() == alg.ring())) throw RingMismatch("representatives live over " + alg.ring().to_string());
  if (!loop_contains(alg.loop(), x)) throw InvalidArgument("element is not in the loop algebra: " + x.to_string());
  return SCElem{alg.n_vars(), alg.twist(), reduce(x)};
}

SCElem bracket(const SCElem& x, const SCElem& y) {
  same_algebra(x, y);
  return SCElem{x.n_vars, x.twist, reduce(nth_product(0, x.rep, y.rep))};
}

NamedAtom L(const Rational& m) { return {Symbol::L, 0, m}; }
NamedAtom G(int i, const Rational& a) { return {Symbol::G, i, a}; }
NamedAtom T(int i, const Rational& m) { return {Symbol::T, i, m}; }
NamedAtom Psi(const Rational& a) { return {Symbol::Psi, 0, a}; }

std::string NamedAtom::to_string() const {
  std::string s;
  switch (symbol) {
    case Symbol::L: s = "L"; break;
    case Symbol::G: s = "G^" + std::to_string(index); break;
    case Symbol::T: s = index ? "T^" + std::to_string(index) : "T"; break;
    case Symbol::Psi: s = "Psi"; break;
  }
  return s + "_" + (sub.is_integer() ? sub.to_string() : "{" + sub.to_string() + "}");
}

AtomShape atom_shape(int n, Symbol s, int index) {
  auto bad = [&] { return InvalidArgument("no such named atom for N = " + std::to_string(n)); };
  switch (s) {
    case Symbol::L:
      if (index != 0) throw bad();
      return {0, 1, Rational(1)};
    case Symbol::G:
      if (index < 1 || index > n) throw bad();
      return {Mask(1) << (index - 1), 1, Rational(1, 2)};
    case Symbol::T:
      if (n == 2 && index == 0) return {0b11, 1, Rational(0)};
      if (n == 3 && index >= 1 && index <= 3) {
        // xi_j xi_l with (i, j, l) cyclic
        const Mask masks[3] = {0b110, 0b101, 0b011};
        const int signs[3] = {1, -1, 1};
        return {masks[index - 1], signs[index - 1], Rational(0)};
      }
      throw bad();
    case Symbol::Psi:
      if (n != 3 || index != 0) throw bad();
      return {0b111, 1, Rational(-1, 2)};
  }
  throw bad();
}

namespace {

CycScalar norm_of(Symbol s, const Normalization& n) {
  switch (s) {
    case Symbol::L: return n.l;
    case Symbol::G: return n.g;
    case Symbol::T: return n.t;
    case Symbol::Psi: return n.psi;
  }
  return n.l;
}

ConfElem atom_rep(const SuperconformalAlgebra& alg, const NamedAtom& a, const AtomShape& sh,
                  const CycScalar& c) {
  Rational q = a.sub + sh.shift;
  return ConfElem::atom(alg.n_vars(), alg.ring(), 0, sh.mask, alg.ring().index_of(q), c * CycScalar(sh.sign));
}

}  // namespace

bool atom_exists(const SuperconformalAlgebra& alg, const NamedAtom& a) {
  AtomShape sh;
  try {
    sh = atom_shape(alg.n_vars(), a.symbol, a.index);
  } catch (const InvalidArgument&) {
    return false;
  }
  Rational q = a.sub + sh.shift;
  if (!(q * Rational(2)).is_integer()) return false;
  return loop_contains(alg.loop(), atom_rep(alg, a, sh, 1));
}

SCElem named(const SuperconformalAlgebra& alg, const NamedAtom& a, const Normalization& norm) {
  if (!atom_exists(alg, a)) throw InvalidArgument(a.to_string() + " is not an element of " + alg.name());
  AtomShape sh = atom_shape(alg.n_vars(), a.symbol, a.index);
  return SCElem{alg.n_vars(), alg.twist(), atom_rep(alg, a, sh, norm_of(a.symbol, norm))};
}

namespace {

std::vector<std::pair<Symbol, int>> symbols(int n) {
  std::vector<std::pair<Symbol, int>> out = {{Symbol::L, 0}};
  for (int i = 1; i <= n; ++i) out.push_back({Symbol::G, i});
  if (n == 2) out.push_back({Symbol::T, 0});
  if (n == 3) {
    for (int i = 1; i <= 3; ++i) out.push_back({Symbol::T, i});
    out.push_back({Symbol::Psi, 0});
  }
  return out;
}

}  // namespace

std::vector<std::pair<NamedAtom, CycScalar>> decompose(const SCElem& x, const Normalization& norm) {
  std::map<Mask, std::pair<std::pair<Symbol, int>, AtomShape>> by_mask;
  for (auto si : symbols(x.n_vars)) by_mask[atom_shape(x.n_vars, si.first, si.second).mask] = {si, atom_shape(x.n_vars, si.first, si.second)};
  std::vector<std::pair<NamedAtom, CycScalar>> out;
  for (const auto& t : x.rep.terms()) {
    if (t.dpow() != 0) throw InvalidArgument("decompose needs a normal-form element");
    auto it = by_mask.find(t.mask());
    if (it == by_mask.end()) throw InvalidArgument("monomial " + mask_name(t.mask()) + " has no named atom");
    auto [si, sh] = it->second;
    Rational q = x.rep.ring().exponent_of(t.mono());
    NamedAtom a{si.first, si.second, q - sh.shift};
    out.emplace_back(a, t.c / (norm_of(si.first, norm) * CycScalar(sh.sign)));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string render(const std::vector<std::pair<NamedAtom, CycScalar>>& expansion) {
  if (expansion.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < expansion.size(); ++k) {
    const auto& [a, c] = expansion[k];
    std::string cs = c.to_string();
    bool compound = cs.find_first_of("+ ", 1) != std::string::npos;
    std::string term;
    if (c.is_one()) term = a.to_string();
    else if (c == CycScalar(-1)) term = "-" + a.to_string();
    else term = (compound ? "(" + cs + ")" : cs) + "*" + a.to_string();
    if (k == 0) s = term;
    else if (term[0] == '-') s += " - " + term.substr(1);
    else s += " + " + term;
  }
  return s;
}

std::vector<NamedAtom> named_basis(const SuperconformalAlgebra& alg, int window) {
  std::vector<NamedAtom> out;
  for (auto [s, i] : symbols(alg.n_vars()))
    for (int h = -2 * window; h <= 2 * window; ++h) {
      NamedAtom a{s, i, Rational(h, 2)};
      if (atom_exists(alg, a)) out.push_back(a);
    }
  return out;
}

int atom_parity(int n_vars, const NamedAtom& a) {
  return parity(atom_shape(n_vars, a.symbol, a.index).mask);
}

}  // namespace kn
