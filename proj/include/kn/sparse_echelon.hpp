#pragma once

#include <cstddef>
#include <map>
#include <utility>

namespace kn {

/// Incremental row echelon form over an exact field with sparse rows.
/// Each stored row has leading entry 1 at its pivot column.
template <class S>
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, S>;

  /// Reduces row against the stored pivots.
  Row reduce(Row row) const {
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      std::size_t c = it->first;
      S f = it->second;
      for (const auto& [k, v] : p->second) {
        auto [slot, fresh] = row.try_emplace(k, S(0));
        slot->second = slot->second - f * v;
      }
      for (auto e = row.lower_bound(c); e != row.end();)
        e = e->second.is_zero() ? row.erase(e) : std::next(e);
      it = row.lower_bound(c);
    }
    return row;
  }

  /// Adds row to the span; returns false when it was already in it.
  bool insert(Row row) {
    for (auto e = row.begin(); e != row.end();) e = e->second.is_zero() ? row.erase(e) : std::next(e);
    row = reduce(std::move(row));
    if (row.empty()) return false;
    S inv = S(1) / row.begin()->second;
    for (auto& [k, v] : row) v = v * inv;
    std::size_t c = row.begin()->first;
    pivots_.emplace(c, std::move(row));
    return true;
  }

  bool contains(const Row& row) const { return reduce(row).empty(); }
  std::size_t rank() const { return pivots_.size(); }
  const std::map<std::size_t, Row>& pivots() const { return pivots_; }

 private:
  std::map<std::size_t, Row> pivots_;
};

}  // namespace kn
