#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agfuzz/cayley_table.hpp"
#include "agfuzz/error.hpp"

namespace agfuzz {

/// A verified AG-group: a left invertive magma with a unique left identity e
/// (e*a = a; a*e need not equal a) in which every a has a two-sided inverse,
/// a'*a = a*a' = e. Immutable after promotion.
struct ag_group {
  cayley_table table;
  element left_identity = 0;
  std::vector<element> inverse;  // involution on indices

  int order() const { return table.order(); }
  element mul(element a, element b) const { return table.at(a, b); }
  element inv(element a) const { return inverse[a]; }
};

namespace detail {

inline std::vector<element> identity_rows(const cayley_table& t) {
  std::vector<element> rows;
  for (element r = 0; r < t.order(); ++r) {
    bool ident = true;
    for (element c = 0; c < t.order(); ++c)
      if (t.at(r, c) != c) { ident = false; break; }
    if (ident) rows.push_back(r);
  }
  return rows;
}

}  // namespace detail

/// Verifies every AG-group axiom on `t` and assembles the result. The left
/// identity is located, never assumed to sit at index 0: inputs may be
/// arbitrary relabelings. Identity rows are counted before the invertive
/// check runs because the law already forces uniqueness, which would make
/// MultipleLeftIdentities unreachable in the other order.
inline ag_group promote_to_ag_group(const cayley_table& t) {
  auto ids = detail::identity_rows(t);
  if (ids.empty()) fail(errc::no_left_identity, "no row acts as identity");
  if (ids.size() > 1)
    fail(errc::multiple_left_identities,
         "rows " + std::to_string(ids[0]) + " and " + std::to_string(ids[1]));
  const element e = ids[0];

  if (auto li = check_left_invertive(t); !li)
    fail(errc::not_left_invertive,
         "(a*b)*c != (c*b)*a at (" + std::to_string(li.counterexample[0]) + "," +
             std::to_string(li.counterexample[1]) + "," +
             std::to_string(li.counterexample[2]) + ")");

  const int n = t.order();
  std::vector<element> inverse(n, -1);
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b)
      if (t.at(a, b) == e && t.at(b, a) == e) { inverse[a] = b; break; }
    if (inverse[a] < 0)
      fail(errc::missing_inverse, "element " + std::to_string(a));
  }
  // Involution is forced once inverses exist; keep the check as a guard.
  for (element a = 0; a < n; ++a)
    if (inverse[inverse[a]] != a)
      fail(errc::missing_inverse, "inverse not involutive at " + std::to_string(a));

  return ag_group{t, e, std::move(inverse)};
}

/// One verified identity inside a derived-identities report.
struct identity_check {
  std::string name;
  bool holds = true;
  std::vector<element> witness;  // lexicographically first violating tuple

  identity_check() = default;
  identity_check(std::string n, bool h = true, std::vector<element> w = {})
      : name(std::move(n)), holds(h), witness(std::move(w)) {}
};

/// Confirms, over all tuples, the three identities every AG-group satisfies
/// and on which the coset and quotient constructions lean:
///   a(bc) = b(ac);  (ab*c)d = a(bc*d);  (xy)' = x'y'.
/// A violation on a promoted group is impossible unless the promotion itself
/// is buggy, so callers must treat any failure as fatal for dependent work.
inline std::vector<identity_check> check_derived_identities(const ag_group& g) {
  const int n = g.order();
  std::vector<identity_check> out;

  identity_check med{"a(bc)=b(ac)"};
  for (element a = 0; a < n && med.holds; ++a)
    for (element b = 0; b < n && med.holds; ++b)
      for (element c = 0; c < n && med.holds; ++c)
        if (g.mul(a, g.mul(b, c)) != g.mul(b, g.mul(a, c)))
          med = {med.name, false, {a, b, c}};
  out.push_back(med);

  identity_check par{"(ab.c)d=a(bc.d)"};
  for (element a = 0; a < n && par.holds; ++a)
    for (element b = 0; b < n && par.holds; ++b)
      for (element c = 0; c < n && par.holds; ++c)
        for (element d = 0; d < n && par.holds; ++d)
          if (g.mul(g.mul(g.mul(a, b), c), d) != g.mul(a, g.mul(g.mul(b, c), d)))
            par = {par.name, false, {a, b, c, d}};
  out.push_back(par);

  identity_check inv{"(xy)'=x'y'"};
  for (element x = 0; x < n && inv.holds; ++x)
    for (element y = 0; y < n && inv.holds; ++y)
      if (g.inv(g.mul(x, y)) != g.mul(g.inv(x), g.inv(y)))
        inv = {inv.name, false, {x, y}};
  out.push_back(inv);

  return out;
}

/// A crisp AG-subgroup: a sorted member set closed under product and inverse
/// and containing the left identity.
struct subgroup {
  std::vector<element> members;  // sorted, unique

  int size() const { return static_cast<int>(members.size()); }
  bool contains(element x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
};

inline bool is_subgroup(const ag_group& g, const std::vector<element>& members) {
  subgroup h{members};
  if (!h.contains(g.left_identity)) return false;
  for (element a : members) {
    if (a < 0 || a >= g.order()) return false;
    if (!h.contains(g.inv(a))) return false;
    for (element b : members)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

/// Right coset Hx = {h*x : h in H}, returned sorted.
inline std::vector<element> crisp_coset(const ag_group& g, const subgroup& h,
                                        element x) {
  std::vector<element> out;
  out.reserve(h.members.size());
  for (element m : h.members) out.push_back(g.mul(m, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Partition of the carrier into right cosets of H, each listed by its
/// minimal element and in order of that representative. The partition
/// property is verified, not assumed: overlapping but unequal cosets raise
/// NotAPartition.
inline std::vector<std::vector<element>> coset_decomposition(const ag_group& g,
                                                             const subgroup& h) {
  const int n = g.order();
  std::vector<std::vector<element>> cosets;
  std::vector<int> owner(n, -1);
  for (element x = 0; x < n; ++x) {
    std::vector<element> cs = crisp_coset(g, h, x);
    int id = owner[x];
    if (id < 0) {
      id = static_cast<int>(cosets.size());
      cosets.push_back(cs);
      for (element z : cs) {
        if (owner[z] >= 0)
          fail(errc::not_a_partition,
               "cosets H*" + std::to_string(x) + " and coset #" +
                   std::to_string(owner[z]) + " overlap at " + std::to_string(z));
        owner[z] = id;
      }
    } else if (cs != cosets[id]) {
      fail(errc::not_a_partition, "H*" + std::to_string(x) + " differs from the coset containing " +
                                      std::to_string(x));
    }
  }
  for (element x = 0; x < n; ++x)
    if (owner[x] < 0)
      fail(errc::not_a_partition, "element " + std::to_string(x) + " uncovered");
  return cosets;
}

/// A subgroup realized as an AG-group in its own right, with index maps
/// between the local carrier 0..|H|-1 and the parent.
struct subgroup_view {
  ag_group group;
  std::vector<element> to_parent;  // local index -> parent element
  std::vector<int> from_parent;    // parent element -> local index or -1

  int local(element parent_elt) const { return from_parent[parent_elt]; }
};

inline subgroup_view subgroup_as_group(const ag_group& g, const subgroup& h) {
  if (!is_subgroup(g, h.members))
    fail(errc::precondition_failed, "member set is not an AG-subgroup");
  const int m = h.size();
  std::vector<int> from_parent(g.order(), -1);
  for (int i = 0; i < m; ++i) from_parent[h.members[i]] = i;
  std::vector<element> entries(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      entries[static_cast<std::size_t>(i) * m + j] =
          from_parent[g.mul(h.members[i], h.members[j])];
  ag_group sub = promote_to_ag_group(cayley_table(m, std::move(entries)));
  return subgroup_view{std::move(sub), h.members, std::move(from_parent)};
}

/// All AG-subgroups of g, sorted by size then lexicographically by members.
/// Brute force over subsets containing e; fine at desk-scale orders.
inline std::vector<subgroup> all_subgroups(const ag_group& g) {
  const int n = g.order();
  std::vector<element> others;
  for (element x = 0; x < n; ++x)
    if (x != g.left_identity) others.push_back(x);
  std::vector<subgroup> out;
  for (unsigned long mask = 0; mask < (1ul << others.size()); ++mask) {
    std::vector<element> members{g.left_identity};
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask & (1ul << i)) members.push_back(others[i]);
    std::sort(members.begin(), members.end());
    if (is_subgroup(g, members)) out.push_back(subgroup{std::move(members)});
  }
  std::sort(out.begin(), out.end(), [](const subgroup& a, const subgroup& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace agfuzz
