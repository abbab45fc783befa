#include "kn/probes.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "kn/error.hpp"
#include "kn/exact_linalg.hpp"
#include "kn/parallel.hpp"
#include "kn/tables.hpp"

namespace kn {

std::string to_string(Part p) { return p == Part::even ? "even" : "odd"; }

Part parse_part(const std::string& s) {
  if (s == "even") return Part::even;
  if (s == "odd") return Part::odd;
  throw InvalidArgument("unknown part '" + s + "' (expected even or odd)");
}

std::vector<std::pair<Rational, int>> Spectrum::multiset() const {
  std::map<Rational, int> m;
  for (const auto& e : eigenvalues) ++m[e];
  return {m.begin(), m.end()};
}

namespace {

const CycScalar kI = CycScalar::imag_unit();

CycScalar coeff_of(const Expansion& e, const NamedAtom& a) {
  for (const auto& [b, c] : e)
    if (b == a) return c;
  return 0;
}

std::string fmt(const Rational& q) { return q.to_string(); }

CycScalar term_coeff(const ConfElem& x, std::uint64_t key) {
  for (const auto& t : x.terms())
    if (t.key == key) return t.c;
  return 0;
}

CycScalar power(const CycScalar& c, int k) {
  CycScalar out = 1;
  for (int j = 0; j < k; ++j) out *= c;
  return out;
}

}  // namespace

std::optional<Rational> weight(const SuperconformalAlgebra& alg, const SCElem& x) {
  if (x.is_zero()) return std::nullopt;
  SCElem ad = bracket(named(alg, L(0)), x);
  const auto& lead = x.rep.terms().front();
  CycScalar w = term_coeff(ad.rep, lead.key) / lead.c;
  if (!w.is_rational() || !(ad == x * w)) return std::nullopt;
  return w.rational();
}

Spectrum l0_spectrum(const SuperconformalAlgebra& alg, Part part, int window) {
  if (window < 1) throw InvalidArgument("spectrum window must be at least 1");
  Spectrum s;
  s.algebra = alg.name();
  s.part = part;
  s.window = window;
  for (const NamedAtom& a : named_basis(alg, window))
    if (atom_parity(alg.n_vars(), a) == (part == Part::odd ? 1 : 0)) s.atoms.push_back(a);
  std::vector<std::optional<Rational>> w(s.atoms.size());
  parallel_for(s.atoms.size(), [&](std::size_t k, int) { w[k] = weight(alg, named(alg, s.atoms[k])); });
  for (std::size_t k = 0; k < s.atoms.size(); ++k) {
    if (w[k]) s.eigenvalues.push_back(*w[k]);
    else s.not_eigen.push_back(s.atoms[k]);
  }
  return s;
}

Report spectrum_report(const SuperconformalAlgebra& alg, const Spectrum& s) {
  Report r;
  r.title = "ad L_0 on the " + to_string(s.part) + " part of " + alg.name() + ", window " + std::to_string(s.window);
  CheckResult& eig = r.add("eigenvectors");
  for (const auto& a : s.atoms)
    eig.expect(std::find(s.not_eigen.begin(), s.not_eigen.end(), a) == s.not_eigen.end(), a.to_string());
  CheckResult& sub = r.add("weight-is-minus-subscript");
  for (std::size_t k = 0, e = 0; k < s.atoms.size(); ++k) {
    if (std::find(s.not_eigen.begin(), s.not_eigen.end(), s.atoms[k]) != s.not_eigen.end()) continue;
    const Rational& w = s.eigenvalues[e++];
    sub.expect(w == -s.atoms[k].sub, s.atoms[k].to_string() + " has weight " + fmt(w));
  }
  if (alg.n_vars() != 2) {
    bool half = s.part == Part::odd && alg.twist() == Twist::id;
    CheckResult& coset = r.add(half ? "eigenvalues-in-half-plus-Z" : "eigenvalues-in-Z");
    for (const auto& w : s.eigenvalues)
      coset.expect(w.is_integer() != half, "eigenvalue " + fmt(w));
  }
  r.info.emplace_back("atoms", std::to_string(s.atoms.size()));
  return r;
}

std::vector<ProbeStep> rigidity_probe(const SuperconformalAlgebra& alg, const SCElem& x, const SCElem& y,
                                      int steps) {
  auto wx = weight(alg, x);
  if (!wx) throw InvalidArgument("rigidity probe needs an ad L_0 eigenvector x");
  for (const auto& [a, c] : decompose(x))
    if (a.symbol != Symbol::L && a.symbol != Symbol::T)
      throw InvalidArgument("rigidity probe needs x in the span of the L and T atoms");
  std::vector<ProbeStep> out;
  SCElem cur = y;
  for (int k = 1; k <= steps; ++k) {
    cur = bracket(x, cur);
    out.push_back({k, cur, weight(alg, cur), !cur.is_zero()});
  }
  return out;
}

namespace {

using Vec3 = std::array<CycScalar, 3>;

SCElem current(const SuperconformalAlgebra& alg, const Vec3& b, const Rational& m) {
  SCElem x = zero(alg);
  for (int i = 1; i <= 3; ++i)
    if (!b[i - 1].is_zero()) x += named(alg, T(i, m)) * b[i - 1];
  return x;
}

std::string vec_str(const Vec3& b) {
  return "(" + b[0].to_string() + ", " + b[1].to_string() + ", " + b[2].to_string() + ")";
}

void growth_check(CheckResult& c, const std::vector<ProbeStep>& steps, const std::string& label) {
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& s = steps[k];
    bool ok = s.nonzero && s.weight;
    if (ok && k > 0) ok = steps[k - 1].weight && *s.weight > *steps[k - 1].weight;
    c.expect(ok, label + ": step " + std::to_string(s.k) + " is " +
                     (s.nonzero ? (s.weight ? "of weight " + fmt(*s.weight) : "not homogeneous") : "zero"));
  }
}

}  // namespace

Report rigidity_report(const SuperconformalAlgebra& alg, int steps) {
  if (alg.n_vars() != 3) throw InvalidArgument("the rigidity witnesses are stated for N = 3");
  Report r;
  r.title = "rigidity witnesses in " + alg.name() + ", " + std::to_string(steps) + " steps";

  // x = a L_-n + sum b_i T^i_-n, y = L_-2n: the L_-(k+2)n coefficient is k! a^k n^k
  CheckResult& vir = r.add("witness-virasoro");
  CheckResult& vir_growth = r.add("witness-virasoro-growth");
  const std::vector<Vec3> bs = {{0, 0, 0}, {1, 0, 0}, {1, 2, -1}, {1, kI, 0}};
  for (int n : {1, 2, -1})
    for (int a : {1, -3})
      for (const Vec3& b : bs) {
        Rational nn(n);
        SCElem x = named(alg, L(-nn)) * CycScalar(a) + current(alg, b, -nn);
        auto seq = rigidity_probe(alg, x, named(alg, L(-2 * nn)), steps);
        std::string label = "a = " + std::to_string(a) + ", b = " + vec_str(b) + ", n = " + std::to_string(n);
        for (const auto& s : seq) {
          CycScalar want = CycScalar(Rational(factorial(s.k))) * power(CycScalar(a), s.k) *
                           power(CycScalar(nn), s.k);
          CycScalar got = coeff_of(decompose(s.value), L(-Rational(s.k + 2) * nn));
          vir.expect(got == want, label + ", k = " + std::to_string(s.k) + ": coefficient " + got.to_string() +
                                      ", pattern gives " + want.to_string());
        }
        if (n > 0) growth_check(vir_growth, seq, label);
      }

  // x = sum b_i T^i_-n, y = L_-1: pattern n (n+1) ... (n+k-1) sum b_i T^i_-n-k
  CheckResult& cur = r.add("witness-current");
  for (int n : {1, 2})
    for (const Vec3& b : {Vec3{1, 0, 0}, Vec3{1, 2, -1}}) {
      Rational nn(n);
      auto seq = rigidity_probe(alg, current(alg, b, -nn), named(alg, L(-1)), steps);
      std::string label = "b = " + vec_str(b) + ", n = " + std::to_string(n);
      for (const auto& s : seq) {
        Rational rise(1);
        for (int j = 0; j < s.k; ++j) rise *= nn + Rational(j);
        SCElem want = current(alg, b, -nn - Rational(s.k)) * CycScalar(rise);
        cur.expect(s.value == want, label + ", k = " + std::to_string(s.k) + ": got " + render(decompose(s.value)) +
                                        ", pattern gives " + render(decompose(want)));
      }
    }

  // y = T^j_0 with b not parallel to e_j: iterates i^k (b x)^k e_j at T_-kn
  CheckResult& alt = r.add("witness-current-alternative");
  for (int n : {1, 2})
    for (const auto& [b, j] : std::vector<std::pair<Vec3, int>>{{{1, 0, 0}, 2}, {{1, 2, -1}, 1}, {{0, 1, 1}, 3}}) {
      auto seq = rigidity_probe(alg, current(alg, b, Rational(-n)), named(alg, T(j, 0)), steps);
      growth_check(alt, seq, "b = " + vec_str(b) + ", n = " + std::to_string(n) + ", y = T^" + std::to_string(j) + "_0");
    }

  // isotropic b: (b x)^3 = (b . b)(b x) = 0, so x = sum b_i T^i_-1 is ad-nilpotent
  CheckResult& iso = r.add("isotropic-current-nilpotent");
  {
    Vec3 b{1, kI, 0};
    SCElem x = current(alg, b, Rational(-1));
    const int depth = 4;
    for (const NamedAtom& a : named_basis(alg, 2)) {
      SCElem v = named(alg, a);
      for (int k = 0; k < depth; ++k) v = bracket(x, v);
      iso.expect(v.is_zero(), "(ad x)^" + std::to_string(depth) + " " + a.to_string() + " = " + render(decompose(v)));
    }
    iso.note("x", render(decompose(x)));
    iso.note("weight", fmt(*weight(alg, x)));
  }

  // g_0 is finite-dimensional: x = T^1_0 on y = T^2_0 stays in span{T^2_0, T^3_0}
  CheckResult& fin = r.add("g0-locally-finite");
  {
    auto seq = rigidity_probe(alg, named(alg, T(1, 0)), named(alg, T(2, 0)), steps);
    for (const auto& s : seq) {
      bool ok = s.weight && s.weight->is_zero();
      for (const auto& [a, c] : decompose(s.value)) ok = ok && a.symbol == Symbol::T && a.index != 1 && a.sub.is_zero();
      fin.expect(ok, "(ad T^1_0)^" + std::to_string(s.k) + " T^2_0 = " + render(decompose(s.value)));
    }
  }
  return r;
}

std::optional<CycScalar> casimir_scalar(const SuperconformalAlgebra& alg) {
  if (alg.n_vars() != 3) return std::nullopt;
  SCElem t1 = named(alg, T(1, 0));
  SCElem sum = zero(alg);
  for (int i = 1; i <= 3; ++i) {
    SCElem ti = named(alg, T(i, 0));
    sum += bracket(ti, bracket(ti, t1));
  }
  auto e = decompose(sum);
  if (e.empty()) return CycScalar(0);
  if (e.size() != 1 || !(e[0].first == T(1, 0))) return std::nullopt;
  return e[0].second;
}

Report g0_structure(const SuperconformalAlgebra& alg) {
  if (alg.n_vars() != 3) throw InvalidArgument("g_0 structure is stated for N = 3");
  Report r;
  r.title = "g_0 = span{L_0, T^i_0} in " + alg.name();
  const std::vector<NamedAtom> basis = {L(0), T(1, 0), T(2, 0), T(3, 0)};

  CheckResult& c0 = r.add("l0-central-in-g0");
  for (int i = 1; i <= 3; ++i) {
    SCElem v = bracket(named(alg, L(0)), named(alg, T(i, 0)));
    c0.expect(v.is_zero(), "[L_0, T^" + std::to_string(i) + "_0] = " + render(decompose(v)));
  }

  CheckResult& so3 = r.add("so3-relations");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Expansion want;
      for (int l = 1; l <= 3; ++l)
        if (epsilon(i, j, l)) want.push_back({T(l, 0), kI * CycScalar(epsilon(i, j, l))});
      Expansion got = decompose(bracket(named(alg, T(i, 0)), named(alg, T(j, 0))));
      so3.expect(got == want, "[T^" + std::to_string(i) + "_0, T^" + std::to_string(j) + "_0] = " + render(got) +
                                  ", expected " + render(want));
    }

  // center: c with [sum_k c_k basis_k, basis_j] = 0 for all j
  CheckResult& ctr = r.add("center");
  {
    const Eigen::Index d = static_cast<Eigen::Index>(basis.size());
    MatrixX<CycScalar> m(d * d, d);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index k = 0; k < d; ++k) m(i, k) = CycScalar(0);
    for (Eigen::Index k = 0; k < d; ++k)
      for (Eigen::Index j = 0; j < d; ++j) {
        Expansion e = decompose(bracket(named(alg, basis[k]), named(alg, basis[j])));
        for (Eigen::Index a = 0; a < d; ++a) m(j * d + a, k) = coeff_of(e, basis[a]);
      }
    MatrixX<CycScalar> ns = nullspace(m);
    ctr.expect(ns.cols() == 1, "center has dimension " + std::to_string(ns.cols()));
    for (Eigen::Index c = 0; c < ns.cols(); ++c) {
      bool l0_only = !ns(0, c).is_zero();
      for (Eigen::Index a = 1; a < d; ++a) l0_only = l0_only && ns(a, c).is_zero();
      ctr.expect(l0_only, "center vector is not a multiple of L_0");
    }
    ctr.note("dimension", std::to_string(ns.cols()));
  }

  // adjoint Casimir against sum_i (ad T^i)^2 from the structure constants i eps
  CheckResult& cas = r.add("casimir");
  {
    CycScalar oracle = 0;
    for (int i = 1; i <= 3; ++i)
      for (int l = 1; l <= 3; ++l) oracle += kI * CycScalar(epsilon(i, 1, l)) * kI * CycScalar(epsilon(i, l, 1));
    auto got = casimir_scalar(alg);
    cas.expect(got && *got == oracle, "sum_i [T^i_0, [T^i_0, T^1_0]] = " + (got ? got->to_string() : "?") +
                                          " T^1_0, structure constants give " + oracle.to_string());
    if (got) cas.note("scalar", got->to_string());
  }
  return r;
}

Report curr_so3_check(const CycScalar& c) {
  Report r;
  r.title = "Curr(so_3) inside K_3 with B_i = " + c.to_string() + " xi_j xi_l";
  DRing ring = DRing::laurent(1);
  auto b = [&](int i) {
    AtomShape sh = atom_shape(3, Symbol::T, i);
    return ConfElem::atom(3, ring, 0, sh.mask, ring.index_of(0), c * CycScalar(sh.sign));
  };
  CheckResult& hi = r.add("higher-products-vanish");
  CheckResult& cl = r.add("closure");
  CheckResult& sc = r.add("structure-constants");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      std::string pair = "B_" + std::to_string(i) + ", B_" + std::to_string(j);
      for (int n = 1; n <= 3; ++n) {
        ConfElem v = nth_product(n, b(i), b(j));
        hi.expect(v.is_zero(), pair + ", n = " + std::to_string(n) + ": " + v.to_string());
      }
      ConfElem v = nth_product(0, b(i), b(j));
      // closure: v lies in span{B_1, B_2, B_3}
      ConfElem rest = v;
      std::array<CycScalar, 3> coord{};
      for (int l = 1; l <= 3; ++l) {
        ConfElem bl = b(l);
        const auto& t = bl.terms().front();
        coord[l - 1] = term_coeff(v, t.key) / t.c;
        rest -= bl * coord[l - 1];
      }
      cl.expect(rest.is_zero(), pair + ": 0-th product " + v.to_string() + " leaves span{B}");
      for (int l = 1; l <= 3; ++l) {
        CycScalar want = kI * CycScalar(epsilon(i, j, l));
        sc.expect(coord[l - 1] == want, pair + ": coefficient of B_" + std::to_string(l) + " is " +
                                            coord[l - 1].to_string() + ", expected " + want.to_string());
      }
    }
  CycScalar fit = c * CycScalar(Rational(1, 2));
  sc.note("observed", "B_i _(0) B_j = (" + fit.to_string() + ") eps_ijl B_l");
  return r;
}

}  // namespace kn
