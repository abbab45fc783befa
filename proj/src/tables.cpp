#include "kn/tables.hpp"

#include <algorithm>
#include <map>

#include "kn/parallel.hpp"

namespace kn {

int epsilon(int i, int j, int l) {
  if (i == j || j == l || i == l) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

namespace {

struct Builder {
  std::map<NamedAtom, CycScalar> acc;
  void add(const NamedAtom& a, const CycScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.try_emplace(a, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  Expansion done() const { return Expansion(acc.begin(), acc.end()); }
};

const CycScalar kI = CycScalar::imag_unit();

char type_char(Symbol s) {
  switch (s) {
    case Symbol::L: return 'L';
    case Symbol::G: return 'G';
    case Symbol::T: return 'T';
    case Symbol::Psi: return 'P';
  }
  return '?';
}

std::string family_name(Symbol a, Symbol b) {
  auto nm = [](Symbol s) -> std::string {
    switch (s) {
      case Symbol::L: return "L";
      case Symbol::G: return "G";
      case Symbol::T: return "T";
      case Symbol::Psi: return "Psi";
    }
    return "?";
  };
  return "[" + nm(a) + ", " + nm(b) + "]";
}

}  // namespace

std::optional<Expansion> table_template(const SuperconformalAlgebra& alg, const NamedAtom& x,
                                        const NamedAtom& y, const Normalization&) {
  if (alg.n_vars() != 3) return std::nullopt;
  std::string key = {type_char(x.symbol), type_char(y.symbol)};
  const Rational& m = x.sub;
  const Rational& n = y.sub;
  int i = x.index, j = y.index;
  Rational half(1, 2);
  Builder b;
  if (key == "LL") {
    b.add(L(m + n), m - n);
  } else if (key == "LT") {
    b.add(T(j, m + n), -n);
  } else if (key == "TT") {
    for (int l = 1; l <= 3; ++l) b.add(T(l, m + n), kI * CycScalar(epsilon(i, j, l)));
  } else if (key == "LP") {
    b.add(Psi(m + n), -(half * m + n));
  } else if (key == "TP" || key == "PP") {
  } else if (key == "LG") {
    b.add(G(j, m + n), half * m - n);
  } else if (key == "TG") {
    for (int l = 1; l <= 3; ++l) b.add(G(l, m + n), kI * CycScalar(epsilon(i, j, l)));
    if (i == j) b.add(Psi(m + n), m);
  } else if (key == "GP") {
    b.add(T(i, m + n), 1);
  } else if (key == "GG") {
    if (i == j) b.add(L(m + n), 2);
    for (int l = 1; l <= 3; ++l) b.add(T(l, m + n), kI * CycScalar(epsilon(i, j, l)) * CycScalar(m - n));
  } else {
    return std::nullopt;
  }
  return b.done();
}

BracketTable bracket_table(const SuperconformalAlgebra& alg, int window, const Normalization& norm) {
  BracketTable tab;
  tab.algebra = alg.name();
  tab.n_vars = alg.n_vars();
  tab.twist = alg.twist();
  tab.window = window;
  tab.report.title = "bracket table " + alg.name() + ", window " + std::to_string(window);

  int n = alg.n_vars();
  std::vector<std::pair<Symbol, std::vector<int>>> types = {{Symbol::L, {0}}};
  if (n == 2) types.push_back({Symbol::T, {0}});
  if (n == 3) types.push_back({Symbol::T, {1, 2, 3}});
  if (n == 3) types.push_back({Symbol::Psi, {0}});
  std::vector<int> gs;
  for (int i = 1; i <= n; ++i) gs.push_back(i);
  types.push_back({Symbol::G, gs});

  auto atoms_of = [&](Symbol s, int idx) {
    std::vector<NamedAtom> out;
    for (int h = -2 * window; h <= 2 * window; ++h) {
      Rational sub(h, 2);
      if (!sub.is_integer() && (h == -2 * window || h == 2 * window)) continue;
      NamedAtom a{s, idx, sub};
      if (atom_exists(alg, a)) out.push_back(a);
    }
    return out;
  };

  // family order follows the relation tables: LL, LT, TT, LPsi, TPsi, PsiPsi, LG, TG, GPsi, GG
  std::vector<std::pair<Symbol, Symbol>> fams;
  auto has = [&](Symbol s) {
    return std::any_of(types.begin(), types.end(), [&](const auto& t) { return t.first == s; });
  };
  for (auto [a, b] : std::vector<std::pair<Symbol, Symbol>>{
           {Symbol::L, Symbol::L}, {Symbol::L, Symbol::T}, {Symbol::T, Symbol::T}, {Symbol::L, Symbol::Psi},
           {Symbol::T, Symbol::Psi}, {Symbol::Psi, Symbol::Psi}, {Symbol::L, Symbol::G}, {Symbol::T, Symbol::G},
           {Symbol::G, Symbol::Psi}, {Symbol::G, Symbol::G}})
    if (has(a) && has(b)) fams.push_back({a, b});

  auto indices = [&](Symbol s) {
    for (const auto& t : types)
      if (t.first == s) return t.second;
    return std::vector<int>{};
  };
  for (auto [sa, sb] : fams)
    for (int i : indices(sa))
      for (int j : indices(sb))
        for (const NamedAtom& x : atoms_of(sa, i))
          for (const NamedAtom& y : atoms_of(sb, j)) tab.rows.push_back({family_name(sa, sb), x, y, {}, {}});

  parallel_for(tab.rows.size(), [&](std::size_t k, int) {
    TableRow& r = tab.rows[k];
    r.computed = decompose(bracket(named(alg, r.x, norm), named(alg, r.y, norm)), norm);
    r.expected = table_template(alg, r.x, r.y, norm);
  });

  for (auto [sa, sb] : fams) {
    CheckResult& c = tab.report.add(family_name(sa, sb));
    for (const auto& r : tab.rows) {
      if (r.family != c.name) continue;
      c.expect(r.match(), "[" + r.x.to_string() + ", " + r.y.to_string() + "] = " + render(r.computed) +
                              ", table gives " + (r.expected ? render(*r.expected) : "-"));
    }
    if (n != 3) c.note("template", "none (generated only)");
  }
  return tab;
}

}  // namespace kn
