#pragma once

// Shared test fixtures: small concrete AG-groups and fuzzy subsets.

#include <initializer_list>
#include <vector>

#include "agfuzz/ag_group.hpp"
#include "agfuzz/cayley_table.hpp"
#include "agfuzz/fuzzy_subset.hpp"
#include "agfuzz/grade.hpp"

namespace fixtures {

using agfuzz::ag_group;
using agfuzz::cayley_table;
using agfuzz::element;
using agfuzz::fuzzy_subset;
using agfuzz::grade;

/// Z_n under subtraction, i*j = (j - i) mod n: a noncommutative AG-group for
/// n >= 3, with left identity 0 and every element self-inverse. At n = 4 this
/// is the standard order-4 example table
///   0 1 2 3 / 3 0 1 2 / 2 3 0 1 / 1 2 3 0.
inline cayley_table sub_table(int n) {
  std::vector<element> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries.push_back(((j - i) % n + n) % n);
  return cayley_table(n, std::move(entries));
}

inline ag_group sub_group(int n) { return agfuzz::promote_to_ag_group(sub_table(n)); }

/// The Klein four-group <a, b : a^2 = b^2 = (ab)^2 = e> as 0 = e, 1 = a,
/// 2 = b, 3 = ab.
inline cayley_table klein_table() {
  return cayley_table(4, {0, 1, 2, 3,
                          1, 0, 3, 2,
                          2, 3, 0, 1,
                          3, 2, 1, 0});
}

inline ag_group klein_group() { return agfuzz::promote_to_ag_group(klein_table()); }

/// Z_n under addition.
inline cayley_table cyclic_table(int n) {
  std::vector<element> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries.push_back((i + j) % n);
  return cayley_table(n, std::move(entries));
}

/// a*b = a; fails the left invertive law for n >= 2.
inline cayley_table left_projection_table(int n) {
  std::vector<element> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries.push_back(i);
  return cayley_table(n, std::move(entries));
}

inline fuzzy_subset fz(std::initializer_list<const char*> grades) {
  fuzzy_subset mu;
  for (const char* s : grades) mu.grades.push_back(grade::parse(s));
  return mu;
}

/// Step subset on the order-4 subtraction group: top grade at e only.
inline fuzzy_subset sub4_step_mu() { return fz({"1", "1/2", "1/2", "1/2"}); }

/// The normal three-level subset on the Klein four-group.
inline fuzzy_subset klein_chain_mu() { return fz({"1", "1/2", "1/4", "1/4"}); }

/// Two-level subset with level set {e, a} on the Klein four-group.
inline fuzzy_subset klein_half_mu() { return fz({"1", "1", "1/2", "1/2"}); }

inline fuzzy_subset constant_mu(int n, const char* value = "1") {
  fuzzy_subset mu;
  mu.grades.assign(n, grade::parse(value));
  return mu;
}

/// Relabels t by pi: out[pi(a)][pi(b)] = pi(t[a][b]).
inline cayley_table permute(const cayley_table& t, const std::vector<element>& pi) {
  const int n = t.order();
  std::vector<element> entries(static_cast<std::size_t>(n) * n);
  for (element a = 0; a < n; ++a)
    for (element b = 0; b < n; ++b)
      entries[static_cast<std::size_t>(pi[a]) * n + pi[b]] = pi[t.at(a, b)];
  return cayley_table(n, std::move(entries));
}

}  // namespace fixtures
