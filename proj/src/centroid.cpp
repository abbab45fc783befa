#include "kn/centroid.hpp"

#include <map>
#include <set>

#include "kn/error.hpp"
#include "kn/exact_linalg.hpp"
#include "kn/parallel.hpp"
#include "kn/sparse_echelon.hpp"

namespace kn {

LoopAlgebra centroid_loop(int n_vars, Twist twist) {
  DRing r = DRing::laurent(1);
  if (twist == Twist::id) return eigenspace_decompose(ConformalAut::identity(n_vars, r), 1);
  return eigenspace_decompose(omega(n_vars, r), 2);
}

namespace {

struct Slice {
  LoopAlgebra loop;
  DRing ring;
  int window;
  std::vector<std::pair<std::size_t, Rational>> elems;
  std::map<std::pair<std::size_t, Rational>, std::size_t> index;

  Slice(int n_vars, Twist twist, int w) : loop(centroid_loop(n_vars, twist)), ring(loop.loop_ring()), window(w) {
    for (std::size_t j = 0; j < loop.vectors.size(); ++j)
      for (std::int64_t h = -w * loop.order; h <= w * loop.order; ++h) {
        Rational q(h, loop.order);
        if (!admissible(j, q)) continue;
        index[{j, q}] = elems.size();
        elems.emplace_back(j, q);
      }
  }

  bool admissible(std::size_t j, const Rational& q) const {
    return (q - Rational(loop.residues[j], loop.order)).is_integer();
  }
  int vparity(std::size_t j) const { return parity(loop.vectors[j].terms().front().first); }
  ConfElem elem(std::size_t j, const Rational& q) const {
    return ConfElem::from_grass(loop.vectors[j], DRingElem::t_power(ring, q), ring);
  }
  ConfElem elem(std::size_t d) const { return elem(elems[d].first, elems[d].second); }
};

struct Piece {
  int dpow;
  std::size_t domain;
  CycScalar c;
};

// x as sum c d^l (slice basis element); nullopt when some exponent leaves the window
std::optional<std::vector<Piece>> pieces(const Slice& s, const ConfElem& x) {
  std::set<std::pair<int, std::int64_t>> slots;
  for (const auto& t : x.terms()) slots.insert({t.dpow(), t.mono()});
  std::vector<Piece> out;
  for (auto [l, mono] : slots) {
    Rational q = s.ring.exponent_of(mono);
    std::vector<CycScalar> c = s.loop.coordinates(x.grass_part(l, mono));
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j].is_zero()) continue;
      auto it = s.index.find({j, q});
      if (it == s.index.end()) return std::nullopt;
      out.push_back({l, it->second, c[j]});
    }
  }
  return out;
}

ConfElem d_power(ConfElem x, int l) {
  for (int k = 0; k < l; ++k) x = dpart(x);
  return x;
}

struct Equation {
  std::size_t a, b;
  int n;
  std::vector<Piece> lhs;
};

std::vector<Equation> interior_equations(const Slice& s) {
  std::size_t m = s.elems.size();
  std::vector<std::vector<Equation>> slots(m);
  parallel_for(m, [&](std::size_t a, int) {
    ConfElem ea = s.elem(a);
    for (std::size_t b = 0; b < m; ++b) {
      ConfElem eb = s.elem(b);
      for (int n = 0; n <= 1; ++n) {
        auto p = pieces(s, nth_product(n, ea, eb));
        if (p) slots[a].push_back({a, b, n, std::move(*p)});
      }
    }
  });
  std::vector<Equation> out;
  for (auto& v : slots)
    for (auto& e : v) out.push_back(std::move(e));
  return out;
}

CentroidShift solve_shift(const Slice& s, const std::vector<Equation>& eqs, const Rational& k) {
  CentroidShift res;
  res.shift = k;
  // unknowns X_(d, w): coefficient of w (x) t^(q_d + k) in chi(domain d)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> unk;
  std::vector<std::vector<std::size_t>> targets(s.elems.size());
  for (std::size_t d = 0; d < s.elems.size(); ++d) {
    auto [j, q] = s.elems[d];
    for (std::size_t w = 0; w < s.loop.vectors.size(); ++w)
      if (s.vparity(w) == s.vparity(j) && s.admissible(w, q + k)) {
        unk[{d, w}] = unk.size();
        targets[d].push_back(w);
      }
  }
  res.unknowns = unk.size();

  SparseEchelon<CycScalar> ech;
  std::map<std::tuple<std::size_t, std::size_t, Rational>, ConfElem> rhs_cache;
  for (const Equation& e : eqs) {
    std::map<std::uint64_t, SparseEchelon<CycScalar>::Row> rows;
    auto add = [&](std::uint64_t key, std::size_t col, const CycScalar& c) {
      auto [it, fresh] = rows[key].try_emplace(col, CycScalar(0));
      it->second += c;
    };
    for (const Piece& p : e.lhs) {
      Rational q = s.elems[p.domain].second + k;
      std::int64_t mono = s.ring.index_of(q);
      for (std::size_t w : targets[p.domain])
        for (const auto& [mask, c] : s.loop.vectors[w].terms())
          add(ConfElem::make_key(p.dpow, mask, mono), unk.at({p.domain, w}), p.c * c);
    }
    ConfElem ea = s.elem(e.a);
    Rational qb = s.elems[e.b].second + k;
    for (std::size_t w : targets[e.b]) {
      ConfElem prod = nth_product(e.n, ea, s.elem(w, qb));
      for (const auto& t : prod.terms()) add(t.key, unk.at({e.b, w}), -t.c);
    }
    for (auto& [key, row] : rows)
      if (ech.insert(std::move(row))) ++res.equations;
  }
  res.rank = ech.rank();

  MatrixX<CycScalar> m(static_cast<Eigen::Index>(std::max<std::size_t>(ech.rank(), 1)),
                       static_cast<Eigen::Index>(unk.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = CycScalar(0);
  Eigen::Index r = 0;
  for (const auto& [piv, row] : ech.pivots()) {
    for (const auto& [col, v] : row) m(r, static_cast<Eigen::Index>(col)) = v;
    ++r;
  }
  MatrixX<CycScalar> ns = nullspace(m);
  res.solutions = static_cast<std::size_t>(ns.cols());
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    std::optional<CycScalar> scalar;
    for (const auto& [dw, col] : unk) {
      const CycScalar& v = ns(static_cast<Eigen::Index>(col), c);
      if (dw.second == s.elems[dw.first].first) {
        if (!scalar) scalar = v;
        else if (!(*scalar == v)) res.single_multiplier = false;
      } else if (!v.is_zero()) {
        res.single_multiplier = false;
      }
    }
  }
  return res;
}

}  // namespace

CentroidResult centroid_solve(int n_vars, Twist twist, int window, int margin) {
  if (window < 2) throw InvalidArgument("centroid window must be at least 2");
  if (margin < 0) throw InvalidArgument("centroid margin must be non-negative");
  Slice s(n_vars, twist, window);
  CentroidResult out;
  out.n_vars = n_vars;
  out.twist = twist;
  out.window = window;
  out.margin = margin;
  std::vector<Equation> eqs = interior_equations(s);

  std::vector<Rational> ks;
  for (std::int64_t h = -margin * s.loop.order; h <= margin * s.loop.order; ++h) ks.emplace_back(h, s.loop.order);
  out.shifts.resize(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) out.shifts[i] = solve_shift(s, eqs, ks[i]);

  Report& r = out.report;
  r.title = "centroid of L(K_" + std::to_string(n_vars) + ", " + to_string(twist) + "), window " +
            std::to_string(window) + ", shifts |k| <= " + std::to_string(margin);
  CheckResult& single = r.add("single-multiplier");
  for (const auto& sh : out.shifts) {
    out.dimension += sh.solutions;
    single.expect(sh.single_multiplier, "shift " + sh.shift.to_string() + " has a solution that is not c * t^k");
    single.note("shift " + sh.shift.to_string(), std::to_string(sh.solutions) + " solutions, " +
                                                     std::to_string(sh.unknowns) + " unknowns, rank " +
                                                     std::to_string(sh.rank));
  }
  r.info.emplace_back("slice elements", std::to_string(s.elems.size()));
  r.info.emplace_back("interior equations", std::to_string(eqs.size()));
  r.info.emplace_back("region", "pairs (a, b) with every term of a_(n) b at |exponent| <= " + std::to_string(window));
  r.info.emplace_back("dimension", std::to_string(out.dimension));
  return out;
}

Report centroid_check_map(int n_vars, Twist twist, int window, const std::function<ConfElem(const ConfElem&)>& chi) {
  Slice s(n_vars, twist, window);
  auto apply = [&](const std::vector<Piece>& ps) {
    ConfElem out(n_vars, s.ring);
    for (const Piece& p : ps) out += d_power(chi(s.elem(p.domain)), p.dpow) * p.c;
    return out;
  };
  std::vector<Equation> eqs = interior_equations(s);
  std::vector<char> ok(eqs.size());
  parallel_for(eqs.size(), [&](std::size_t i, int) {
    const Equation& e = eqs[i];
    ok[i] = apply(e.lhs) == nth_product(e.n, s.elem(e.a), chi(s.elem(e.b)));
  });
  Report r;
  r.title = "centroid identity chi(a_(n) b) = a_(n) chi(b), window " + std::to_string(window);
  CheckResult& c = r.add("centroid-identity");
  for (std::size_t i = 0; i < eqs.size(); ++i)
    c.expect(ok[i], "a = " + s.elem(eqs[i].a).to_string() + ", b = " + s.elem(eqs[i].b).to_string() +
                        ", n = " + std::to_string(eqs[i].n));
  return r;
}

}  // namespace kn
