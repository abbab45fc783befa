#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kn/report.hpp"
#include "kn/superconf.hpp"

namespace kn {

using Expansion = std::vector<std::pair<NamedAtom, CycScalar>>;

struct TableRow {
  std::string family;
  NamedAtom x, y;
  Expansion computed;
  /// Present when the relation family has a closed-form template (N = 3).
  std::optional<Expansion> expected;
  bool match() const { return !expected || *expected == computed; }
};

struct BracketTable {
  std::string algebra;
  int n_vars = 0;
  Twist twist = Twist::id;
  int window = 0;
  std::vector<TableRow> rows;
  /// One check per relation family: rows evaluated, rows that differ from the template.
  Report report;
};

/// Subscripts used for the table: integers in [-window, window] for even
/// atoms and for odd atoms under omega; half-integers with |a| < window for
/// odd atoms under id. For N = 3 every row is compared with the relation
/// templates; for N = 1, 2 rows are generated without templates.
BracketTable bracket_table(const SuperconformalAlgebra& alg, int window, const Normalization& norm = {});

/// Closed-form right-hand side of [x, y] for N = 3, if (x, y) is one of the
/// ten tabulated pairings.
std::optional<Expansion> table_template(const SuperconformalAlgebra& alg, const NamedAtom& x,
                                        const NamedAtom& y, const Normalization& norm = {});

/// Levi-Civita symbol on {1, 2, 3}.
int epsilon(int i, int j, int l);

}  // namespace kn
