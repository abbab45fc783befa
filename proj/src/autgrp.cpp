#include "kn/autgrp.hpp"

#include <array>
#include <map>
#include <numeric>

#include "kn/error.hpp"
#include "kn/exact_linalg.hpp"
#include "kn/parallel.hpp"

namespace kn {

namespace {

RingMatrix with_ring(RingMatrix m, const DRing& ring) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).with_ring(ring);
  return m;
}

RingMatrix mul(const RingMatrix& x, const RingMatrix& y) {
  RingMatrix r = x.lazyProduct(y);
  return r;
}

}  // namespace

OrthMatrix::OrthMatrix(RingMatrix entries, const DRing& ring) : ring_(ring) {
  if (entries.rows() != entries.cols() || entries.rows() < 1)
    throw InvalidArgument("orthogonal matrix must be square and non-empty");
  a_ = with_ring(std::move(entries), ring);
  RingMatrix p = mul(a_, a_.transpose());
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j)
      if (!(p(i, j) == DRingElem(i == j ? 1 : 0)))
        throw InvalidArgument("matrix is not orthogonal: (A A^T)(" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") = " + p(i, j).to_string());
  RingMatrix skew = mul(derivative(), a_.transpose());
  if (!exact_equal(RingMatrix(skew.transpose()), RingMatrix(-skew)))
    throw InvalidArgument("delta(A) A^T is not skew-symmetric");
}

OrthMatrix OrthMatrix::identity(int n, const DRing& ring) {
  return diagonal(std::vector<int>(n, 1), ring);
}

OrthMatrix OrthMatrix::diagonal(const std::vector<int>& signs, const DRing& ring) {
  std::vector<int> perm(signs.size());
  std::iota(perm.begin(), perm.end(), 0);
  return signed_permutation(perm, signs, ring);
}

OrthMatrix OrthMatrix::signed_permutation(const std::vector<int>& perm,
                                          const std::vector<int>& signs, const DRing& ring) {
  int n = static_cast<int>(perm.size());
  if (static_cast<int>(signs.size()) != n) throw InvalidArgument("sign vector has wrong length");
  RingMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = DRingElem(0);
  for (int j = 0; j < n; ++j) {
    if (perm[j] < 0 || perm[j] >= n) throw InvalidArgument("permutation index out of range");
    if (signs[j] != 1 && signs[j] != -1) throw InvalidArgument("signs must be +1 or -1");
    m(perm[j], j) = DRingElem(signs[j]);
  }
  return OrthMatrix(m, ring);
}

OrthMatrix OrthMatrix::rotation(int n, int i, int j, int k, const DRing& ring) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw InvalidArgument("bad rotation plane");
  CycScalar half(Rational(1, 2));
  CycScalar inv2i = (CycScalar(2) * CycScalar::imag_unit()).inverse();
  DRingElem tk = DRingElem::t_power(ring, k), tmk = DRingElem::t_power(ring, -k);
  DRingElem a = (tk + tmk) * half;
  DRingElem b = (tk - tmk) * inv2i;
  RingMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = DRingElem(r == c ? 1 : 0);
  m(i, i) = a;
  m(j, j) = a;
  m(i, j) = -b;
  m(j, i) = b;
  return OrthMatrix(m, ring);
}

OrthMatrix OrthMatrix::transpose() const { return OrthMatrix(a_.transpose(), ring_); }

OrthMatrix operator*(const OrthMatrix& x, const OrthMatrix& y) {
  if (!(x.ring_ == y.ring_)) throw RingMismatch("matrices over different rings");
  if (x.size() != y.size()) throw InvalidArgument("matrix sizes differ");
  return OrthMatrix(mul(x.a_, y.a_), x.ring_);
}

bool operator==(const OrthMatrix& x, const OrthMatrix& y) {
  return x.ring_ == y.ring_ && exact_equal(x.a_, y.a_);
}

DRingElem OrthMatrix::det() const { return determinant(a_).with_ring(ring_); }

RingMatrix OrthMatrix::derivative() const {
  return a_.unaryExpr([](const DRingElem& x) { return derive(x, 1); });
}

std::string OrthMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < size(); ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < size(); ++j) s += (j ? ", " : "") + a_(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

bool ConformalAut::graded() const {
  for (const auto& im : images)
    if (im.max_dpow() > 0) return false;
  return true;
}

ConformalAut ConformalAut::identity(int n_vars, const DRing& ring) {
  ConformalAut id;
  id.n_vars = n_vars;
  id.ring = ring;
  id.label = "id";
  for (Mask m = 0; m < (Mask(1) << n_vars); ++m)
    id.images.push_back(ConfElem::atom(n_vars, ring, 0, m));
  id.inverse_images = id.images;
  return id;
}

bool operator==(const ConformalAut& a, const ConformalAut& b) {
  if (a.n_vars != b.n_vars || !(a.ring == b.ring) || a.images.size() != b.images.size())
    return false;
  for (std::size_t k = 0; k < a.images.size(); ++k)
    if (!(a.images[k] == b.images[k])) return false;
  return true;
}

namespace {

ConfElem term(int n, const DRing& ring, Mask m, const DRingElem& r, int sign = 1) {
  return ConfElem::from_grass(GrassElem::monomial(n, m, sign), r, ring);
}

std::vector<ConfElem> orthogonal_images(const OrthMatrix& a) {
  int n = a.size();
  const DRing& ring = a.ring();
  std::vector<ConfElem> im(std::size_t(1) << n, ConfElem(n, ring));
  ConfElem one = ConfElem::atom(n, ring, 0, 0);
  DRingElem det = a.det();
  if (n == 1) {
    im[0] = one;
    im[1] = term(1, ring, 1, a(0, 0));
    return im;
  }
  RingMatrix da = a.derivative();
  RingMatrix rmat = mul(da, a.entries().transpose()) * DRingElem(2);
  if (n == 2) {
    im[0] = one + term(2, ring, 0b11, rmat(0, 1));
    im[1] = term(2, ring, 0b01, a(0, 0)) + term(2, ring, 0b10, a(1, 0));
    im[2] = term(2, ring, 0b01, a(0, 1)) + term(2, ring, 0b10, a(1, 1));
    im[3] = term(2, ring, 0b11, det);
    return im;
  }
  if (n != 3) throw InvalidArgument("phi_A is defined for N = 1, 2, 3");
  RingMatrix smat = mul(a.entries().transpose(), da) * det;
  // r_l from 2 delta(A) A^T, s_l from det(A) A^T delta(A), both in the skew
  // layout [[0, x3, -x2], [-x3, 0, x1], [x2, -x1, 0]].
  DRingElem r[3] = {rmat(1, 2), rmat(2, 0), rmat(0, 1)};
  DRingElem s[3] = {smat(1, 2), smat(2, 0), smat(0, 1)};
  // X_l = xi_m xi_n with (m, n, l) cyclic: xi2xi3, xi3xi1 = -xi1xi3, xi1xi2.
  const Mask xmask[3] = {0b110, 0b101, 0b011};
  const int xsign[3] = {1, -1, 1};
  auto x = [&](int l, const DRingElem& c) { return term(3, ring, xmask[l], c, xsign[l]); };
  im[0] = one + x(0, r[0]) + x(1, r[1]) + x(2, r[2]);
  for (int j = 0; j < 3; ++j) {
    ConfElem v = term(3, ring, 0b111, s[j]);
    for (int l = 0; l < 3; ++l) v += term(3, ring, Mask(1) << l, a(l, j));
    im[Mask(1) << j] = v;
  }
  // xi_i xi_j (i < j) = eps_{ijl} X_l-image with l the remaining index.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      int l = 3 - i - j;
      int eps = ((j - i + 3) % 3 == 1) ? 1 : -1;  // (i, j, l) cyclic
      ConfElem v(3, ring);
      for (int lp = 0; lp < 3; ++lp) v += x(lp, cofactor(a.entries(), lp, l).with_ring(ring));
      im[(Mask(1) << i) | (Mask(1) << j)] = v * CycScalar(eps);
    }
  im[7] = term(3, ring, 0b111, det);
  return im;
}

}  // namespace

ConformalAut phi_from_orthogonal(const OrthMatrix& a) {
  if (a.size() < 1 || a.size() > 3) throw InvalidArgument("phi_A is defined for N = 1, 2, 3");
  ConformalAut phi;
  phi.n_vars = a.size();
  phi.ring = a.ring();
  phi.images = orthogonal_images(a);
  phi.inverse_images = orthogonal_images(a.transpose());
  phi.label = "phi_A";
  return phi;
}

OrthMatrix omega_matrix(int n_vars, const DRing& ring) {
  if (n_vars == 1) return OrthMatrix::diagonal({-1}, ring);
  if (n_vars == 2) return OrthMatrix::diagonal({-1, 1}, ring);
  if (n_vars == 3) return OrthMatrix::diagonal({-1, -1, -1}, ring);
  throw InvalidArgument("omega is defined for N = 1, 2, 3");
}

ConformalAut omega(int n_vars, const DRing& ring) {
  ConformalAut w = phi_from_orthogonal(omega_matrix(n_vars, ring));
  w.label = "omega";
  return w;
}

ConfElem apply_aut(const ConformalAut& phi, const ConfElem& x) {
  if (x.n_vars() != phi.n_vars) throw InvalidArgument("automorphism and element differ in N");
  if (!(x.ring() == phi.ring)) throw RingMismatch("automorphism and element differ in ring");
  // phi(d^l f (x) u) = u * dhat^l(phi(f (x) 1)).
  std::map<std::pair<int, std::int64_t>, ConfElem> groups;
  for (const auto& t : x.terms()) {
    auto [it, fresh] = groups.try_emplace({t.dpow(), t.mono()}, ConfElem(x.n_vars(), x.ring()));
    it->second += phi.images[t.mask()] * t.c;
  }
  ConfElem out(x.n_vars(), x.ring());
  for (auto& [key, y] : groups) {
    ConfElem z = std::move(y);
    for (int k = 0; k < key.first; ++k) z = dhat(z);
    out += z * DRingElem::monomial(x.ring(), key.second);
  }
  return out;
}

namespace {

ConformalAut from_images(int n, const DRing& ring, std::vector<ConfElem> images) {
  ConformalAut r;
  r.n_vars = n;
  r.ring = ring;
  r.images = std::move(images);
  return r;
}

}  // namespace

ConformalAut compose_aut(const ConformalAut& phi, const ConformalAut& psi) {
  if (phi.n_vars != psi.n_vars || !(phi.ring == psi.ring))
    throw InvalidArgument("cannot compose automorphisms of different algebras");
  ConformalAut r;
  r.n_vars = phi.n_vars;
  r.ring = phi.ring;
  r.label = phi.label + " o " + psi.label;
  for (const auto& im : psi.images) r.images.push_back(apply_aut(phi, im));
  if (phi.inverse_images && psi.inverse_images) {
    // (phi o psi)^-1 = psi^-1 o phi^-1
    ConformalAut qinv = from_images(psi.n_vars, psi.ring, *psi.inverse_images);
    std::vector<ConfElem> inv;
    for (const auto& im : *phi.inverse_images) inv.push_back(apply_aut(qinv, im));
    r.inverse_images = std::move(inv);
  }
  return r;
}

ConformalAut power_aut(const ConformalAut& phi, int k) {
  if (k < 0) throw InvalidArgument("negative automorphism power");
  ConformalAut r = ConformalAut::identity(phi.n_vars, phi.ring);
  for (int i = 0; i < k; ++i) r = compose_aut(phi, r);
  r.label = phi.label + "^" + std::to_string(k);
  return r;
}

std::optional<ConformalAut> invert_graded(const ConformalAut& phi) {
  if (!phi.graded()) return std::nullopt;
  Eigen::Index dim = Eigen::Index(1) << phi.n_vars;
  RingMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = DRingElem::constant(phi.ring, 0);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (const auto& t : phi.images[j].terms())
      m(t.mask(), j) += DRingElem::monomial(phi.ring, t.mono(), t.c);
  RingMatrix inv;
  if (!unit_pivot_inverse(m, inv) && !adjugate_inverse(m, inv)) return std::nullopt;
  ConformalAut r;
  r.n_vars = phi.n_vars;
  r.ring = phi.ring;
  r.label = phi.label + "^-1";
  for (Eigen::Index j = 0; j < dim; ++j) {
    ConfElem v(phi.n_vars, phi.ring);
    for (Eigen::Index i = 0; i < dim; ++i)
      if (!inv(i, j).is_zero())
        v += ConfElem::from_grass(GrassElem::monomial(phi.n_vars, static_cast<Mask>(i)), inv(i, j),
                                  phi.ring);
    r.images.push_back(v);
  }
  return r;
}

namespace {

void check_brackets(const ConformalAut& phi, const std::vector<ConfElem>& elems, CheckResult& res) {
  ConfElem zero(phi.n_vars, phi.ring);
  std::vector<ConfElem> mapped;
  for (const auto& e : elems) mapped.push_back(apply_aut(phi, e));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      std::vector<ConfElem> lhs = all_products(mapped[i], mapped[j]);
      std::vector<ConfElem> src = all_products(elems[i], elems[j]);
      std::size_t top = std::max(lhs.size(), src.size());
      bool ok = true;
      std::string where;
      for (std::size_t n = 0; n < top && ok; ++n) {
        ConfElem l = n < lhs.size() ? lhs[n] : zero;
        ConfElem r = n < src.size() ? apply_aut(phi, src[n]) : zero;
        if (!(l == r)) {
          ok = false;
          where = "n = " + std::to_string(n) + ": [phi a _(n) phi b] = " + l.to_string() +
                  ", phi(a_(n) b) = " + r.to_string();
        }
      }
      res.expect(ok, "a = " + elems[i].to_string() + ", b = " + elems[j].to_string() + ", " + where);
    }
}

}  // namespace

Report verify_automorphism(const ConformalAut& phi) {
  Report rep;
  rep.title = "automorphism check (" + phi.label + ")";
  int n = phi.n_vars;
  const DRing& ring = phi.ring;
  std::size_t dim = std::size_t(1) << n;
  if (phi.images.size() != dim) throw InvalidArgument("automorphism must list 2^N images");

  std::vector<ConfElem> gens;
  for (Mask m = 0; m < dim; ++m) gens.push_back(ConfElem::atom(n, ring, 0, m));
  CheckResult& gen = rep.add("bracket-preservation");
  check_brackets(phi, gens, gen);

  std::vector<ConfElem> atoms;
  std::vector<std::int64_t> monos = ring.is_dual() ? std::vector<std::int64_t>{0, 1}
                                                   : std::vector<std::int64_t>{-ring.denom, ring.denom};
  for (int l = 0; l <= 1; ++l)
    for (Mask m = 0; m < dim; ++m)
      for (auto u : monos) atoms.push_back(ConfElem::atom(n, ring, l, m, u));
  CheckResult& ext = rep.add("bracket-preservation-atoms");
  check_brackets(phi, atoms, ext);

  CheckResult& par = rep.add("parity");
  for (Mask m = 0; m < dim; ++m) {
    int p = phi.images[m].parity();
    par.expect(!phi.images[m].is_zero() && p == parity(m),
               "image of " + mask_name(m) + " is " + phi.images[m].to_string());
  }

  CheckResult& inv = rep.add("invertibility");
  std::optional<ConformalAut> psi;
  if (phi.inverse_images) {
    psi = ConformalAut{n, ring, *phi.inverse_images, std::nullopt, "inverse"};
    inv.note("inverse", "supplied");
  } else {
    psi = invert_graded(phi);
    inv.note("inverse", psi ? "unit-pivot elimination" : "none found");
  }
  if (!psi) {
    inv.expect(false, "no inverse available");
  } else {
    for (Mask m = 0; m < dim; ++m) {
      ConfElem g = gens[m];
      inv.expect(apply_aut(*psi, apply_aut(phi, g)) == g,
                 "inverse(phi(" + mask_name(m) + ")) = " + apply_aut(*psi, apply_aut(phi, g)).to_string());
      inv.expect(apply_aut(phi, apply_aut(*psi, g)) == g,
                 "phi(inverse(" + mask_name(m) + ")) = " + apply_aut(phi, apply_aut(*psi, g)).to_string());
    }
  }
  rep.info.emplace_back("graded", phi.graded() ? "true" : "false");
  return rep;
}

ConformalAut derivative_shift(int n_vars, const DRingElem& c, const DRing& ring) {
  ConformalAut phi;
  phi.n_vars = n_vars;
  phi.ring = ring;
  phi.label = "d-shift by " + c.to_string();
  std::vector<ConfElem> inv;
  for (Mask m = 0; m < (Mask(1) << n_vars); ++m) {
    ConfElem f = ConfElem::atom(n_vars, ring, 0, m);
    ConfElem df = ConfElem::atom(n_vars, ring, 1, m) * c;
    phi.images.push_back(f + df);
    inv.push_back(f - df);
  }
  phi.inverse_images = std::move(inv);
  return phi;
}

CounterexampleResult dual_number_counterexample() {
  CounterexampleResult r;
  DRing d = DRing::dual();
  r.phi = derivative_shift(1, DRingElem::tau(), d);
  r.report = verify_automorphism(r.phi);
  r.automorphism = r.report.passed();
  r.graded = r.phi.graded();
  return r;
}

OrthMatrix random_orthogonal(int n, const DRing& ring, std::mt19937_64& rng, int max_len) {
  auto pick = [&](std::uint64_t k) { return static_cast<int>(rng() % k); };
  OrthMatrix a = OrthMatrix::identity(n, ring);
  int len = 1 + pick(static_cast<std::uint64_t>(max_len));
  for (int step = 0; step < len; ++step) {
    if (n >= 2 && pick(2) == 0) {
      int i = pick(n), j = pick(n - 1);
      if (j >= i) ++j;
      int k = 1 + pick(2);
      a = a * OrthMatrix::rotation(n, i, j, k, ring);
    } else {
      std::vector<int> perm(n), signs(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int k = n - 1; k > 0; --k) std::swap(perm[k], perm[pick(k + 1)]);
      for (auto& s : signs) s = pick(2) ? 1 : -1;
      a = a * OrthMatrix::signed_permutation(perm, signs, ring);
    }
  }
  return a;
}

Report orthogonal_suite(const std::vector<std::pair<OrthMatrix, OrthMatrix>>& pairs) {
  Report r;
  r.title = "phi_A for " + std::to_string(pairs.size()) + " orthogonal pairs";
  CheckResult& aut = r.add("automorphism");
  CheckResult& gr = r.add("graded");
  CheckResult& hom = r.add("homomorphism");
  CheckResult& inv = r.add("inverse-is-transpose");
  CheckResult& skew = r.add("derivative-skew");
  std::vector<std::array<bool, 5>> ok(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k, int) {
    const auto& [a, b] = pairs[k];
    int n = a.size();
    ConformalAut pa = phi_from_orthogonal(a), pb = phi_from_orthogonal(b), pt = phi_from_orthogonal(a.transpose());
    ConformalAut id = ConformalAut::identity(n, a.ring());
    RingMatrix s = a.derivative().lazyProduct(a.entries().transpose());
    ok[k] = {verify_automorphism(pa).passed(), pa.graded(), phi_from_orthogonal(a * b) == compose_aut(pa, pb),
             compose_aut(pa, pt) == id && compose_aut(pt, pa) == id,
             exact_equal(RingMatrix(s.transpose()), RingMatrix(-s))};
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::string w = "A = " + pairs[k].first.to_string();
    aut.expect(ok[k][0], w);
    gr.expect(ok[k][1], w);
    hom.expect(ok[k][2], w + ", B = " + pairs[k].second.to_string());
    inv.expect(ok[k][3], w);
    skew.expect(ok[k][4], w);
  }
  return r;
}

Report orthogonal_suite(int n, const DRing& ring, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<OrthMatrix, OrthMatrix>> pairs;
  for (int k = 0; k < count; ++k) {
    OrthMatrix a = random_orthogonal(n, ring, rng);
    OrthMatrix b = random_orthogonal(n, ring, rng);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  Report r = orthogonal_suite(pairs);
  r.title = "phi_A for " + std::to_string(count) + " random pairs in O_" + std::to_string(n) + "(" + ring.to_string() +
            "), seed " + std::to_string(seed);
  return r;
}

}  // namespace kn
