#include "kn/axioms.hpp"

#include <map>
#include <numeric>
#include <unordered_map>

#include "kn/error.hpp"
#include "kn/parallel.hpp"

namespace kn {

namespace {

ConfElem at(const std::vector<ConfElem>& v, int n, const ConfElem& zero) {
  return n >= 0 && n < static_cast<int>(v.size()) ? v[n] : zero;
}

ConfElem divided_dhat(ConfElem x, int j) {
  for (int k = 0; k < j; ++k) x = dhat(x);
  if (j > 1) x *= CycScalar(Rational(1) / Rational(factorial(j)));
  return x;
}

std::string pair_text(const ConfElem& a, const ConfElem& b) {
  return "a = " + a.to_string() + ", b = " + b.to_string();
}

// Per-pair checks, collected into fixed slots so the merge is deterministic.
struct PairResults {
  CheckResult finite, translation, sesqui, skew;
};

void check_pair(const ConfElem& a, const ConfElem& b, const std::vector<DRingElem>& samples,
                PairResults& out) {
  ConfElem zero(a.n_vars(), a.ring());
  std::vector<ConfElem> ab = all_products(a, b);
  int bound = a.max_dpow() + b.max_dpow() + 1;
  out.finite.expect(static_cast<int>(ab.size()) - 1 <= bound,
                    pair_text(a, b) + ": lambda-degree " + std::to_string(ab.size() - 1) +
                        " exceeds " + std::to_string(bound));

  std::vector<ConfElem> dab = all_products(dhat(a), b);
  std::vector<ConfElem> adb = all_products(a, dhat(b));
  int top = static_cast<int>(std::max({ab.size(), dab.size(), adb.size()}));
  for (int n = 0; n <= top; ++n) {
    ConfElem prev = at(ab, n - 1, zero) * CycScalar(n);
    out.translation.expect(at(dab, n, zero) == -prev,
                           pair_text(a, b) + ": (dhat a)_(" + std::to_string(n) + ") b");
    out.translation.expect(at(adb, n, zero) == dhat(at(ab, n, zero)) + prev,
                           pair_text(a, b) + ": a_(" + std::to_string(n) + ") (dhat b)");
  }

  for (const DRingElem& r : samples) {
    std::vector<ConfElem> a_rb = all_products(a, b * r);
    std::vector<ConfElem> ra_b = all_products(a * r, b);
    int t = static_cast<int>(std::max({ab.size(), a_rb.size(), ra_b.size()}));
    for (int n = 0; n <= t; ++n) {
      out.sesqui.expect(at(a_rb, n, zero) == at(ab, n, zero) * r,
                        pair_text(a, b) + ", r = " + r.to_string() + ": a_(" + std::to_string(n) +
                            ") (r b)");
      ConfElem rhs = zero;
      for (int j = 0; n + j < static_cast<int>(ab.size()); ++j) {
        DRingElem dr = derive(r, j);
        if (!dr.is_zero()) rhs += ab[n + j] * dr;
      }
      out.sesqui.expect(at(ra_b, n, zero) == rhs, pair_text(a, b) + ", r = " + r.to_string() +
                                                      ": (r a)_(" + std::to_string(n) + ") b");
    }
  }

  std::vector<ConfElem> ba = all_products(b, a);
  int p = parity_sign(a, b);
  int t = static_cast<int>(std::max(ab.size(), ba.size()));
  for (int n = 0; n <= t; ++n) {
    ConfElem rhs = zero;
    for (int j = 0; n + j < static_cast<int>(ba.size()); ++j) {
      ConfElem term = divided_dhat(ba[n + j], j);
      rhs += ((j + n) % 2 == 0) ? term : -term;
    }
    if (p > 0) rhs = -rhs;
    out.skew.expect(at(ab, n, zero) == rhs, pair_text(a, b) + ": n = " + std::to_string(n));
  }
}

void merge(CheckResult& into, const CheckResult& from) {
  into.cases += from.cases;
  for (const auto& w : from.witnesses)
    if (into.witnesses.size() < CheckResult::kMaxWitnesses) into.witnesses.push_back(w);
  into.violations += from.violations;
}

// ---------------------------------------------------------------------------
// Jacobi identity.

std::string triple_text(const ConfElem& a, const ConfElem& b, const ConfElem& c, int m, int n) {
  return "a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + c.to_string() +
         ", m = " + std::to_string(m) + ", n = " + std::to_string(n);
}

bool jacobi_generic(const ConfElem& a, const ConfElem& b, const ConfElem& c, std::string& witness) {
  std::map<std::pair<int, int>, ConfElem> diff;
  ConfElem zero(a.n_vars(), a.ring());
  auto slot = [&](int m, int n) -> ConfElem& {
    return diff.try_emplace({m, n}, zero).first->second;
  };
  std::vector<ConfElem> bc = all_products(b, c);
  for (int n = 0; n < static_cast<int>(bc.size()); ++n) {
    std::vector<ConfElem> ax = all_products(a, bc[n]);
    for (int m = 0; m < static_cast<int>(ax.size()); ++m) slot(m, n) += ax[m];
  }
  int p = parity_sign(a, b);
  std::vector<ConfElem> ac = all_products(a, c);
  for (int m = 0; m < static_cast<int>(ac.size()); ++m) {
    std::vector<ConfElem> bx = all_products(b, ac[m]);
    for (int n = 0; n < static_cast<int>(bx.size()); ++n) slot(m, n) -= bx[n] * CycScalar(p);
  }
  std::vector<ConfElem> ab = all_products(a, b);
  for (int j = 0; j < static_cast<int>(ab.size()); ++j) {
    std::vector<ConfElem> xc = all_products(ab[j], c);
    for (int k = 0; k < static_cast<int>(xc.size()); ++k)
      for (int m = j; m <= j + k; ++m)
        slot(m, j + k - m) -= xc[k] * CycScalar(binomial(Rational(m), j));
  }
  for (const auto& [mn, v] : diff)
    if (!v.is_zero()) {
      witness = triple_text(a, b, c, mn.first, mn.second) + ": defect " + v.to_string();
      return false;
    }
  return true;
}

// Integer product tables for atoms: every coefficient is scaled by a common
// denominator so the triple loop runs on machine integers.
class JacobiTables {
 public:
  struct Entry {
    int n;
    int y;
    std::int64_t c;
  };

  // Returns false when coefficients are too large for the integer path.
  bool build(const std::vector<ConfElem>& atoms) {
    n_vars_ = atoms[0].n_vars();
    ring_ = atoms[0].ring();
    for (const auto& a : atoms) {
      if (a.terms().size() != 1 || !a.terms()[0].c.is_one()) return false;
      id(a.terms()[0].key);
    }
    base_ = static_cast<int>(keys_.size());
    std::vector<std::vector<Raw>> oo(base_ * base_);
    for (int a = 0; a < base_; ++a)
      for (int b = 0; b < base_; ++b) oo[a * base_ + b] = product(a, b);
    xend_ = static_cast<int>(keys_.size());
    left_.assign(static_cast<std::size_t>(base_) * xend_, {});
    right_.assign(static_cast<std::size_t>(xend_) * base_, {});
    std::vector<std::vector<Raw>> lraw(left_.size()), rraw(right_.size());
    for (int a = 0; a < base_; ++a)
      for (int x = 0; x < xend_; ++x)
        lraw[a * xend_ + x] = x < base_ ? oo[a * base_ + x] : product(a, x);
    for (int x = 0; x < xend_; ++x)
      for (int c = 0; c < base_; ++c)
        rraw[x * base_ + c] = x < base_ ? oo[x * base_ + c] : product(x, c);
    // Common denominator.
    std::int64_t d = 1;
    for (const auto* tab : {&lraw, &rraw})
      for (const auto& cell : *tab)
        for (const auto& e : cell) {
          if (!e.ok) return false;
          d = std::lcm(d, e.den);
          if (d > (std::int64_t(1) << 30)) return false;
        }
    scale_ = d;
    auto convert = [&](std::vector<std::vector<Raw>>& raw, std::vector<Range>& ranges) {
      for (std::size_t k = 0; k < raw.size(); ++k) {
        Range r{static_cast<std::uint32_t>(entries_.size()), 0};
        for (const auto& e : raw[k]) {
          __int128 v = static_cast<__int128>(e.num) * (d / e.den);
          if (v > (__int128(1) << 40) || v < -(__int128(1) << 40)) return false;
          entries_.push_back({e.n, e.y, static_cast<std::int64_t>(v)});
          max_n_ = std::max(max_n_, e.n);
        }
        r.end = static_cast<std::uint32_t>(entries_.size());
        ranges[k] = r;
      }
      return true;
    };
    if (!convert(lraw, left_) || !convert(rraw, right_)) return false;
    return true;
  }

  int base() const { return base_; }
  int ids() const { return static_cast<int>(keys_.size()); }
  int max_n() const { return max_n_; }
  std::pair<const Entry*, const Entry*> left(int a, int x) const {
    const Range& r = left_[static_cast<std::size_t>(a) * xend_ + x];
    return {entries_.data() + r.begin, entries_.data() + r.end};
  }
  std::pair<const Entry*, const Entry*> right(int x, int c) const {
    const Range& r = right_[static_cast<std::size_t>(x) * base_ + c];
    return {entries_.data() + r.begin, entries_.data() + r.end};
  }
  int parity_of(int id) const { return kn::parity(static_cast<Mask>((keys_[id] >> 32) & 0xffff)); }
  ConfElem atom(int id) const {
    return ConfElem::from_terms(n_vars_, ring_, {{keys_[id], CycScalar(1)}});
  }
  std::int64_t scale() const { return scale_; }

 private:
  struct Raw {
    int n;
    int y;
    std::int64_t num;
    std::int64_t den;
    bool ok;
  };
  struct Range {
    std::uint32_t begin = 0, end = 0;
  };

  int id(std::uint64_t key) {
    auto [it, inserted] = index_.try_emplace(key, static_cast<int>(keys_.size()));
    if (inserted) keys_.push_back(key);
    return it->second;
  }

  std::vector<Raw> product(int a, int b) {
    ConfElem::Term ta{keys_[a], 1}, tb{keys_[b], 1};
    std::map<std::pair<int, std::uint64_t>, Rational> acc;
    atom_products(n_vars_, ring_, ta.dpow(), ta.mask(), ta.mono(), tb.dpow(), tb.mask(), tb.mono(),
                  [&](int n, int dp, Mask m, std::int64_t mono, const Rational& c) {
                    acc[{n, ConfElem::make_key(dp, m, mono)}] += c;
                  });
    std::vector<Raw> out;
    for (const auto& [k, c] : acc) {
      if (c.is_zero()) continue;
      int y = id(k.second);
      if (!c.is_small()) {
        out.push_back({k.first, y, 0, 1, false});
      } else {
        out.push_back({k.first, y, c.small_num(), c.small_den(), true});
      }
    }
    return out;
  }

  int n_vars_ = 0;
  DRing ring_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::uint64_t> keys_;
  int base_ = 0;
  int xend_ = 0;
  int max_n_ = 0;
  std::int64_t scale_ = 1;
  std::vector<Entry> entries_;
  std::vector<Range> left_, right_;
};

struct SlotResult {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;
};

void jacobi_fast_row(const JacobiTables& t, int a, SlotResult& out) {
  int dim = 2 * t.max_n() + 2;
  int ids = t.ids();
  std::vector<__int128> acc(static_cast<std::size_t>(dim) * dim * ids, 0);
  std::vector<std::size_t> touched;
  std::vector<std::int64_t> binom(static_cast<std::size_t>(dim) * dim, 0);
  for (int m = 0; m < dim; ++m) {
    binom[m * dim] = 1;
    for (int j = 1; j <= m; ++j) binom[m * dim + j] = binom[(m - 1) * dim + j - 1] + binom[(m - 1) * dim + j];
  }
  auto idx = [&](int m, int n, int y) {
    return (static_cast<std::size_t>(m) * dim + n) * ids + y;
  };
  int base = t.base();
  for (int b = 0; b < base; ++b) {
    int p = (t.parity_of(a) && t.parity_of(b)) ? -1 : 1;
    for (int c = 0; c < base; ++c) {
      touched.clear();
      for (auto [e1, e1end] = t.left(b, c); e1 != e1end; ++e1)
        for (auto [e2, e2end] = t.left(a, e1->y); e2 != e2end; ++e2) {
          std::size_t k = idx(e2->n, e1->n, e2->y);
          acc[k] += static_cast<__int128>(e1->c) * e2->c;
          touched.push_back(k);
        }
      for (auto [e1, e1end] = t.left(a, c); e1 != e1end; ++e1)
        for (auto [e2, e2end] = t.left(b, e1->y); e2 != e2end; ++e2) {
          std::size_t k = idx(e1->n, e2->n, e2->y);
          acc[k] -= static_cast<__int128>(p) * e1->c * e2->c;
          touched.push_back(k);
        }
      for (auto [e1, e1end] = t.left(a, b); e1 != e1end; ++e1) {
        int j = e1->n;
        for (auto [e2, e2end] = t.right(e1->y, c); e2 != e2end; ++e2) {
          int kk = e2->n;
          __int128 v = static_cast<__int128>(e1->c) * e2->c;
          for (int m = j; m <= j + kk; ++m) {
            std::size_t k = idx(m, j + kk - m, e2->y);
            acc[k] -= v * binom[m * dim + j];
            touched.push_back(k);
          }
        }
      }
      ++out.cases;
      bool bad = false;
      std::size_t first_bad = 0;
      for (std::size_t k : touched) {
        if (acc[k] != 0 && !bad) {
          bad = true;
          first_bad = k;
        }
      }
      for (std::size_t k : touched) acc[k] = 0;
      if (bad) {
        ++out.violations;
        if (out.witnesses.size() < CheckResult::kMaxWitnesses) {
          int y = static_cast<int>(first_bad % ids);
          int n = static_cast<int>((first_bad / ids) % dim);
          int m = static_cast<int>(first_bad / ids / dim);
          out.witnesses.push_back(triple_text(t.atom(a), t.atom(b), t.atom(c), m, n) +
                                  ": defect at " + t.atom(y).to_string());
        }
      }
    }
  }
}

}  // namespace

std::vector<ConfElem> axiom_atoms(int n_vars, const DRing& ring, const AxiomOptions& opts) {
  std::vector<ConfElem> out;
  std::vector<std::int64_t> monos;
  if (ring.is_dual()) {
    monos = {0, 1};
  } else {
    for (const auto& e : opts.exponents) monos.push_back(ring.index_of(e));
  }
  for (int l = 0; l <= opts.dmax; ++l)
    for (Mask m = 0; m < (Mask(1) << n_vars); ++m)
      for (auto mono : monos) out.push_back(ConfElem::atom(n_vars, ring, l, m, mono));
  return out;
}

std::vector<DRingElem> axiom_ring_samples(const DRing& ring) {
  if (ring.is_dual())
    return {DRingElem::monomial(ring, 1), DRingElem::constant(ring, 2) + DRingElem::monomial(ring, 1)};
  std::vector<DRingElem> out = {DRingElem::t_power(ring, -1), DRingElem::t_power(ring, 1),
                                DRingElem::constant(ring, Rational(1, 2)) +
                                    DRingElem::t_power(ring, 2)};
  if (ring.denom > 1) out.push_back(DRingElem::t_power(ring, Rational(1, ring.denom), 3));
  return out;
}

CheckResult check_jacobi(const std::vector<ConfElem>& atoms, bool fast,
                         const std::function<void(const std::string&)>& progress) {
  CheckResult res;
  res.name = "jacobi";
  if (atoms.empty()) return res;
  std::vector<SlotResult> slots(atoms.size());
  JacobiTables tables;
  bool use_fast = fast && tables.build(atoms);
  res.note("evaluator", use_fast ? "integer product tables" : "generic");
  std::size_t done = 0;
  std::mutex mu;
  parallel_for(atoms.size(), [&](std::size_t a, int) {
    if (use_fast) {
      jacobi_fast_row(tables, static_cast<int>(a), slots[a]);
    } else {
      for (const auto& b : atoms)
        for (const auto& c : atoms) {
          std::string w;
          ++slots[a].cases;
          if (!jacobi_generic(atoms[a], b, c, w)) {
            ++slots[a].violations;
            if (slots[a].witnesses.size() < CheckResult::kMaxWitnesses)
              slots[a].witnesses.push_back(w);
          }
        }
    }
    if (progress) {
      std::lock_guard<std::mutex> lock(mu);
      ++done;
      if (done % 16 == 0 || done == atoms.size())
        progress("jacobi: " + std::to_string(done) + "/" + std::to_string(atoms.size()));
    }
  });
  for (const auto& s : slots) {
    res.cases += s.cases;
    res.violations += s.violations;
    for (const auto& w : s.witnesses)
      if (res.witnesses.size() < CheckResult::kMaxWitnesses) res.witnesses.push_back(w);
  }
  return res;
}

Report check_axioms(int n_vars, const DRing& ring, const AxiomOptions& opts) {
  if (opts.dmax < 0) throw InvalidArgument("dmax must be non-negative");
  Report rep;
  rep.title = "axioms K_" + std::to_string(n_vars) + " over " + ring.to_string();
  rep.info.emplace_back("dmax", std::to_string(opts.dmax));
  std::vector<ConfElem> atoms = axiom_atoms(n_vars, ring, opts);
  std::vector<DRingElem> samples = axiom_ring_samples(ring);
  rep.info.emplace_back("atoms", std::to_string(atoms.size()));

  CheckResult leib;
  leib.name = "dhat-leibniz";
  for (const auto& a : atoms)
    for (const auto& r : samples)
      leib.expect(dhat(a * r) == dhat(a) * r + a * derive(r),
                  "a = " + a.to_string() + ", r = " + r.to_string());

  std::vector<PairResults> rows(atoms.size());
  std::size_t done = 0;
  std::mutex mu;
  parallel_for(atoms.size(), [&](std::size_t i, int) {
    for (const auto& b : atoms) check_pair(atoms[i], b, samples, rows[i]);
    if (opts.progress) {
      std::lock_guard<std::mutex> lock(mu);
      ++done;
      if (done % 16 == 0 || done == atoms.size())
        opts.progress("pairs: " + std::to_string(done) + "/" + std::to_string(atoms.size()));
    }
  });
  CheckResult finite, translation, sesqui, skew;
  finite.name = "finite-products";
  translation.name = "translation";
  sesqui.name = "ring-sesquilinearity";
  skew.name = "skew-symmetry";
  for (const auto& r : rows) {
    merge(finite, r.finite);
    merge(translation, r.translation);
    merge(sesqui, r.sesqui);
    merge(skew, r.skew);
  }
  finite.note("bound", "lambda-degree <= 1 + dpow(a) + dpow(b)");
  rep.checks.push_back(finite);
  rep.checks.push_back(translation);
  rep.checks.push_back(leib);
  rep.checks.push_back(sesqui);
  rep.checks.push_back(skew);
  rep.checks.push_back(check_jacobi(atoms, opts.fast_jacobi, opts.progress));
  return rep;
}

}  // namespace kn
