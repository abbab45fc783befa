#include "kn/loop.hpp"

#include <map>

#include "kn/error.hpp"
#include "kn/exact_linalg.hpp"
#include "kn/parallel.hpp"
#include "kn/sparse_echelon.hpp"

namespace kn {

namespace {

MatrixX<CycScalar> zeros(Eigen::Index r, Eigen::Index c) {
  MatrixX<CycScalar> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = CycScalar(0);
  return m;
}

bool in_coset(const Rational& q, int residue, int m) { return (q - Rational(residue, m)).is_integer(); }

ConfElem loop_atom(const LoopAlgebra& loop, std::size_t k, const Rational& q) {
  DRing s = loop.loop_ring();
  return ConfElem::from_grass(loop.vectors[k], DRingElem::t_power(s, q), s);
}

}  // namespace

std::vector<CycScalar> LoopAlgebra::coordinates(const GrassElem& f) const {
  std::vector<CycScalar> c(vectors.size(), CycScalar(0));
  for (const auto& t : f.terms())
    for (std::size_t k = 0; k < vectors.size(); ++k) c[k] += to_eigen(k, t.first) * t.second;
  return c;
}

LoopAlgebra eigenspace_decompose(const ConformalAut& sigma, int m) {
  if (m < 1) throw InvalidArgument("declared order must be positive");
  if (!sigma.graded()) throw InvalidArgument("twist must be graded");
  int n = sigma.n_vars;
  Eigen::Index dim = Eigen::Index(1) << n;
  MatrixX<CycScalar> s = zeros(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (const auto& t : sigma.images[j].terms()) {
      if (t.mono() != 0) throw InvalidArgument("twist must have constant coefficients");
      s(t.mask(), j) += t.c;
    }
  if (!(power_aut(sigma, m) == ConformalAut::identity(n, sigma.ring)))
    throw InvalidArgument("twist does not have order dividing " + std::to_string(m));

  LoopAlgebra loop;
  loop.n_vars = n;
  loop.order = m;
  loop.twist = sigma;
  loop.eigenbasis.resize(m);
  for (int i = 0; i < m; ++i) {
    MatrixX<CycScalar> b = s;
    CycScalar z = CycScalar::zeta(m, i);
    for (Eigen::Index d = 0; d < dim; ++d) b(d, d) -= z;
    MatrixX<CycScalar> ns = nullspace(b);
    for (Eigen::Index c = 0; c < ns.cols(); ++c) {
      std::vector<GrassElem::Term> terms;
      for (Eigen::Index r = 0; r < dim; ++r)
        if (!ns(r, c).is_zero()) terms.push_back({static_cast<Mask>(r), ns(r, c)});
      GrassElem v = GrassElem::from_terms(n, std::move(terms));
      loop.eigenbasis[i].push_back(v);
      loop.vectors.push_back(v);
      loop.residues.push_back(i);
    }
  }
  if (static_cast<Eigen::Index>(loop.vectors.size()) != dim)
    throw Error("twist is not diagonalizable over Q(zeta_" + std::to_string(m) + ")");

  MatrixX<CycScalar> aug = zeros(dim, 2 * dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (const auto& t : loop.vectors[k].terms()) aug(t.first, k) = t.second;
    aug(k, dim + k) = CycScalar(1);
  }
  rref(aug);
  loop.to_eigen = aug.rightCols(dim);
  return loop;
}

bool loop_contains(const LoopAlgebra& loop, const ConfElem& x) {
  if (x.n_vars() != loop.n_vars) throw InvalidArgument("element and loop algebra differ in N");
  if (!x.ring().is_laurent()) throw RingMismatch("loop membership needs a Laurent ring");
  std::map<std::pair<int, std::int64_t>, std::vector<GrassElem::Term>> groups;
  for (const auto& t : x.terms()) groups[{t.dpow(), t.mono()}].push_back({t.mask(), t.c});
  for (auto& [key, terms] : groups) {
    Rational q = x.ring().exponent_of(key.second);
    std::vector<CycScalar> c = loop.coordinates(GrassElem::from_terms(loop.n_vars, std::move(terms)));
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero() && !in_coset(q, loop.residues[k], loop.order)) return false;
  }
  return true;
}

std::vector<ConfElem> loop_basis(const LoopAlgebra& loop, int window) {
  std::vector<ConfElem> out;
  for (std::size_t k = 0; k < loop.vectors.size(); ++k)
    for (std::int64_t j = -window - 1; j <= window; ++j) {
      Rational q = Rational(loop.residues[k], loop.order) + Rational(j);
      if (Rational(-window) <= q && q <= Rational(window)) out.push_back(loop_atom(loop, k, q));
    }
  return out;
}

Report closure_check(const LoopAlgebra& loop, int window, const std::vector<ConfElem>& extra) {
  if (window < 1) throw InvalidArgument("window must be at least 1");
  Report rep;
  rep.title = "loop closure (" + loop.twist.label + ", m = " + std::to_string(loop.order) +
              ", window " + std::to_string(window) + ")";
  std::vector<ConfElem> gens = loop_basis(loop, window);
  gens.insert(gens.end(), extra.begin(), extra.end());
  std::vector<ConfElem> elems = gens;
  for (const auto& g : gens) elems.push_back(dhat(g));

  CheckResult& mem = rep.add("generators-in-loop");
  for (const auto& g : gens) mem.expect(loop_contains(loop, g), g.to_string());

  struct Slot {
    std::size_t cases = 0;
    std::vector<std::string> bad;
  };
  std::vector<Slot> slots(gens.size() * elems.size());
  parallel_for(slots.size(), [&](std::size_t idx, int) {
    const ConfElem& a = gens[idx / elems.size()];
    const ConfElem& b = elems[idx % elems.size()];
    Slot& s = slots[idx];
    std::vector<ConfElem> prods = all_products(a, b);
    for (std::size_t n = 0; n < prods.size(); ++n) {
      if (prods[n].is_zero()) continue;
      ++s.cases;
      if (!loop_contains(loop, prods[n]))
        s.bad.push_back("(" + a.to_string() + ")_(" + std::to_string(n) + ")(" + b.to_string() +
                        ") = " + prods[n].to_string());
    }
  });
  CheckResult& prod = rep.add("products-in-loop");
  for (const auto& s : slots) {
    prod.cases += s.cases;
    for (const auto& w : s.bad) prod.fail(w);
  }

  CheckResult& der = rep.add("dhat-in-loop");
  for (const auto& e : elems) {
    ConfElem d = dhat(e);
    der.expect(loop_contains(loop, d), "dhat(" + e.to_string() + ") = " + d.to_string());
  }
  rep.info.emplace_back("generators", std::to_string(gens.size()));
  return rep;
}

Report trivialization_check(const LoopAlgebra& loop, int window) {
  if (window < 1) throw InvalidArgument("window must be at least 1");
  Report rep;
  rep.title = "trivialization (" + loop.twist.label + ", m = " + std::to_string(loop.order) +
              ", window " + std::to_string(window) + ")";
  DRing s = loop.loop_ring();
  std::size_t dim = std::size_t(1) << loop.n_vars;

  CheckResult& comp = rep.add("eigenbasis-complete");
  comp.expect(loop.vectors.size() == dim, std::to_string(loop.vectors.size()) + " eigenvectors");

  std::vector<ConfElem> gens;
  CheckResult& mem = rep.add("generators-in-loop");
  for (std::size_t k = 0; k < loop.vectors.size(); ++k) {
    gens.push_back(loop_atom(loop, k, Rational(loop.residues[k], loop.order)));
    mem.expect(loop_contains(loop, gens.back()), gens.back().to_string());
  }

  CheckResult& span = rep.add("spanning");
  std::size_t certificates = 0;
  for (Mask mask = 0; mask < dim; ++mask) {
    std::vector<CycScalar> c = loop.coordinates(GrassElem::monomial(loop.n_vars, mask));
    for (std::int64_t j = -window * loop.order; j <= window * loop.order; ++j) {
      Rational q(j, loop.order);
      ConfElem rebuilt(loop.n_vars, s);
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (!c[k].is_zero())
          rebuilt += gens[k] * (DRingElem::t_power(s, q - Rational(loop.residues[k], loop.order)) * c[k]);
      ConfElem target = ConfElem::atom(loop.n_vars, s, 0, mask, s.index_of(q));
      span.expect(rebuilt == target, mask_name(mask) + " (x) t^" + q.to_string() + " rebuilt as " +
                                         rebuilt.to_string());
      ++certificates;
    }
  }
  rep.info.emplace_back("certificates", std::to_string(certificates));
  return rep;
}

Report fin_check(const LoopAlgebra& loop, int window, int dmax) {
  if (window < 1) throw InvalidArgument("window must be at least 1");
  Report rep;
  rep.title = "finite generation (" + loop.twist.label + ", m = " + std::to_string(loop.order) +
              ", window " + std::to_string(window) + ")";
  DRing s = loop.loop_ring();
  std::map<std::uint64_t, std::size_t> columns;
  auto to_row = [&](const ConfElem& x) {
    SparseEchelon<CycScalar>::Row row;
    for (const auto& t : x.terms()) {
      auto [it, fresh] = columns.try_emplace(t.key, columns.size());
      row[it->second] = t.c;
    }
    return row;
  };

  SparseEchelon<CycScalar> span;
  std::size_t spanning_rows = 0;
  for (std::size_t k = 0; k < loop.vectors.size(); ++k) {
    ConfElem g = loop_atom(loop, k, Rational(loop.residues[k], loop.order));
    for (int l = 0; l <= dmax; ++l, g = dhat(g))
      for (std::int64_t j = -window - dmax - 1; j <= window + 1; ++j) {
        span.insert(to_row(g * DRingElem::t_power(s, j)));
        ++spanning_rows;
      }
  }
  CheckResult& fin = rep.add("finite-generation");
  for (std::size_t k = 0; k < loop.vectors.size(); ++k)
    for (std::int64_t j = -window - 1; j <= window; ++j) {
      Rational q = Rational(loop.residues[k], loop.order) + Rational(j);
      if (q < Rational(-window) || q > Rational(window)) continue;
      for (int l = 0; l <= dmax; ++l) {
        ConfElem x = ConfElem::from_grass(loop.vectors[k], DRingElem::t_power(s, q), s, l);
        fin.expect(span.contains(to_row(x)), x.to_string());
      }
    }
  rep.info.emplace_back("spanning rows", std::to_string(spanning_rows));
  rep.info.emplace_back("rank", std::to_string(span.rank()));
  return rep;
}

}  // namespace kn
