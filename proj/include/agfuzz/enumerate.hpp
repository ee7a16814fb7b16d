#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "agfuzz/ag_group.hpp"
#include "agfuzz/cayley_table.hpp"
#include "agfuzz/error.hpp"

namespace agfuzz {

enum class enum_mode { ag_groupoids_with_left_identity, ag_groups };

/// Exhaustive generation of all composition tables of a given order with the
/// left identity pinned at index 0. Every AG-group has a relabeling with
/// e = 0, so nothing is lost; the canonical filter removes the remaining
/// relabeling freedom.
struct enumeration_task {
  int order = 1;
  enum_mode mode = enum_mode::ag_groups;
  bool canonical_only = false;
};

inline constexpr int default_order_cap = 6;

namespace detail {

/// Relabels t by the permutation pi: out[pi(a)][pi(b)] = pi(t[a][b]).
inline cayley_table relabel(const cayley_table& t, const std::vector<element>& pi) {
  const int n = t.order();
  std::vector<element> entries(static_cast<std::size_t>(n) * n);
  for (element a = 0; a < n; ++a)
    for (element b = 0; b < n; ++b)
      entries[static_cast<std::size_t>(pi[a]) * n + pi[b]] = pi[t.at(a, b)];
  return cayley_table(n, std::move(entries));
}

/// Minimal relabeling of t over all permutations fixing 0.
inline cayley_table canonical_form(const cayley_table& t) {
  const int n = t.order();
  std::vector<element> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  cayley_table best = t;
  while (std::next_permutation(pi.begin() + 1, pi.end())) {
    cayley_table cand = relabel(t, pi);
    if (cand < best) best = cand;
  }
  return best;
}

class table_search {
 public:
  table_search(const enumeration_task& task,
               const std::function<void(const cayley_table&)>& emit)
      : n_(task.order), task_(task), emit_(emit),
        cells_(static_cast<std::size_t>(n_) * n_, -1) {
    for (element c = 0; c < n_; ++c) cells_[c] = c;  // row 0 = identity row
  }

  void run() { fill(n_); }  // first free cell is (1,0), linear index n

 private:
  element at(element a, element b) const {
    return cells_[static_cast<std::size_t>(a) * n_ + b];
  }

  /// All left invertive triples whose four lookups are assigned must agree.
  /// Partial tables skip incomplete triples; complete tables check all.
  bool invertive_consistent() const {
    for (element a = 0; a < n_; ++a)
      for (element b = 0; b < n_; ++b) {
        const element ab = at(a, b);
        if (ab < 0) continue;
        for (element c = 0; c < n_; ++c) {
          const element lhs = at(ab, c);
          if (lhs < 0) continue;
          const element cb = at(c, b);
          if (cb < 0) continue;
          const element rhs = at(cb, a);
          if (rhs < 0) continue;
          if (lhs != rhs) return false;
        }
      }
    return true;
  }

  /// Group-mode prunes. Rows and columns of an AG-group are permutations
  /// (right cancellation follows from the axioms, and a*x = (x*a)*e makes
  /// left translations compositions of right ones), and zeros come in
  /// symmetric pairs because inverses are two-sided.
  bool placement_ok(element r, element c, element v) const {
    if (task_.mode != enum_mode::ag_groups) return true;
    for (element i = 0; i < n_; ++i) {
      if (i != c && at(r, i) == v) return false;
      if (i != r && at(i, c) == v) return false;
    }
    const element mirror = at(c, r);
    if (v == 0 && mirror > 0) return false;
    if (v != 0 && mirror == 0) return false;
    return true;
  }

  void fill(std::size_t idx) {
    if (idx == cells_.size()) {
      finish();
      return;
    }
    const element r = static_cast<element>(idx / n_);
    const element c = static_cast<element>(idx % n_);
    for (element v = 0; v < n_; ++v) {
      if (!placement_ok(r, c, v)) continue;
      cells_[idx] = v;
      if (invertive_consistent()) fill(idx + 1);
      cells_[idx] = -1;
    }
  }

  void finish() {
    cayley_table t(n_, cells_);
    if (task_.mode == enum_mode::ag_groups) {
      // The prunes already force the axioms; promotion is the final word.
      try {
        promote_to_ag_group(t);
      } catch (const error&) {
        return;
      }
    }
    if (task_.canonical_only && !(t == canonical_form(t))) return;
    emit_(t);
  }

  int n_;
  enumeration_task task_;
  const std::function<void(const cayley_table&)>& emit_;
  std::vector<element> cells_;
};

}  // namespace detail

/// Streams every table matching the task, in lexicographic order (cells are
/// filled row-major with ascending values, so emission order is the table
/// order itself and two runs produce identical streams).
inline void enumerate_tables(const enumeration_task& task,
                             const std::function<void(const cayley_table&)>& emit,
                             int order_cap = default_order_cap) {
  if (task.order < 1) fail(errc::precondition_failed, "order must be >= 1");
  if (task.order > order_cap)
    fail(errc::order_cap_exceeded, "order " + std::to_string(task.order) +
                                       " exceeds cap " + std::to_string(order_cap));
  detail::table_search(task, emit).run();
}

inline std::vector<cayley_table> enumerate_tables(const enumeration_task& task,
                                                  int order_cap = default_order_cap) {
  std::vector<cayley_table> out;
  enumerate_tables(task, [&](const cayley_table& t) { out.push_back(t); }, order_cap);
  return out;
}

/// All AG-groups of the given order with e = 0, one table per isomorphism
/// class when canonical_only is set.
inline std::vector<ag_group> enumerate_ag_groups(int order, bool canonical_only = true,
                                                 int order_cap = default_order_cap) {
  enumeration_task task{order, enum_mode::ag_groups, canonical_only};
  std::vector<ag_group> out;
  enumerate_tables(task, [&](const cayley_table& t) {
    out.push_back(promote_to_ag_group(t));
  }, order_cap);
  return out;
}

}  // namespace agfuzz
