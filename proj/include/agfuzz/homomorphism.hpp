#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agfuzz/ag_group.hpp"

namespace agfuzz {

/// A verified product-preserving map between AG-groups, together with its
/// image set (the carrier of the image subgroup).
struct homomorphism {
  ag_group source;
  ag_group target;
  std::vector<element> map;    // length = source order, entries in target
  std::vector<element> image;  // sorted f(G); always an AG-subgroup of target
};

/// Verifies f(x*y) = f(x)*f(y) for all pairs; throws NotHomomorphism with the
/// first violating pair otherwise.
inline homomorphism check_homomorphism(const std::vector<element>& f,
                                       const ag_group& src, const ag_group& dst) {
  const int n = src.order();
  if (static_cast<int>(f.size()) != n)
    fail(errc::not_homomorphism, "map length " + std::to_string(f.size()) +
                                     " != source order " + std::to_string(n));
  for (element v : f)
    if (v < 0 || v >= dst.order())
      fail(errc::not_homomorphism, "map value " + std::to_string(v) + " outside target");
  for (element x = 0; x < n; ++x)
    for (element y = 0; y < n; ++y)
      if (f[src.mul(x, y)] != dst.mul(f[x], f[y]))
        fail(errc::not_homomorphism,
             "f(x*y) != f(x)*f(y) at (" + std::to_string(x) + "," + std::to_string(y) + ")");

  std::vector<element> image(f);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return homomorphism{src, dst, f, std::move(image)};
}

namespace detail {

/// Multiset fingerprint of a table row/column: sorted multiplicities of its
/// values. Invariant under relabeling, so usable to prune isomorphism search.
inline std::vector<int> shape(const std::vector<element>& line) {
  std::map<element, int> counts;
  for (element v : line) ++counts[v];
  std::vector<int> s;
  for (auto& [v, c] : counts) s.push_back(c);
  std::sort(s.begin(), s.end());
  return s;
}

inline std::vector<element> row_of(const cayley_table& t, element r) {
  std::vector<element> out(t.order());
  for (element c = 0; c < t.order(); ++c) out[c] = t.at(r, c);
  return out;
}

inline std::vector<element> col_of(const cayley_table& t, element c) {
  std::vector<element> out(t.order());
  for (element r = 0; r < t.order(); ++r) out[r] = t.at(r, c);
  return out;
}

inline bool extend_isomorphism(const ag_group& g1, const ag_group& g2,
                               std::vector<element>& pi, std::vector<bool>& used,
                               element next,
                               const std::vector<std::vector<int>>& shapes1,
                               const std::vector<std::vector<int>>& shapes2) {
  const int n = g1.order();
  if (next == n) return true;
  if (pi[next] >= 0) return extend_isomorphism(g1, g2, pi, used, next + 1, shapes1, shapes2);
  for (element img = 0; img < n; ++img) {
    if (used[img]) continue;
    if (shapes1[next] != shapes2[img]) continue;
    // Self-inverse status must match; full inverse pairing is checked once
    // the partner is assigned.
    if ((g1.inv(next) == next) != (g2.inv(img) == img)) continue;
    pi[next] = img;
    used[img] = true;
    element partner = g1.inv(next);
    element saved_partner = pi[partner];
    bool partner_set = false;
    bool consistent = true;
    if (saved_partner >= 0) {
      consistent = (g2.inv(img) == saved_partner);
    } else if (partner != next) {
      element pimg = g2.inv(img);
      if (used[pimg]) {
        consistent = false;
      } else {
        pi[partner] = pimg;
        used[pimg] = true;
        partner_set = true;
      }
    }
    // Check products among all currently assigned elements.
    if (consistent) {
      for (element a = 0; a < n && consistent; ++a) {
        if (pi[a] < 0) continue;
        for (element b = 0; b < n && consistent; ++b) {
          if (pi[b] < 0) continue;
          element ab = g1.mul(a, b);
          if (pi[ab] >= 0 && g2.mul(pi[a], pi[b]) != pi[ab]) consistent = false;
        }
      }
    }
    if (consistent &&
        extend_isomorphism(g1, g2, pi, used, next + 1, shapes1, shapes2))
      return true;
    if (partner_set) {
      used[pi[partner]] = false;
      pi[partner] = -1;
    }
    used[img] = false;
    pi[next] = -1;
  }
  return false;
}

}  // namespace detail

/// Searches for a product-preserving bijection g1 -> g2. Exact backtracking,
/// pruned by pinning e -> e, matching row/column shape fingerprints and
/// propagating inverse pairing. Intended for desk-scale orders.
inline std::optional<std::vector<element>> are_isomorphic(const ag_group& g1,
                                                          const ag_group& g2) {
  const int n = g1.order();
  if (n != g2.order()) return std::nullopt;

  auto signature = [](const ag_group& g, element x) {
    auto s = detail::shape(detail::row_of(g.table, x));
    auto c = detail::shape(detail::col_of(g.table, x));
    s.insert(s.end(), c.begin(), c.end());
    return s;
  };
  std::vector<std::vector<int>> shapes1(n), shapes2(n);
  for (element x = 0; x < n; ++x) {
    shapes1[x] = signature(g1, x);
    shapes2[x] = signature(g2, x);
  }

  std::vector<element> pi(n, -1);
  std::vector<bool> used(n, false);
  pi[g1.left_identity] = g2.left_identity;  // isomorphisms fix the identity
  used[g2.left_identity] = true;
  if (shapes1[g1.left_identity] != shapes2[g2.left_identity]) return std::nullopt;
  if (detail::extend_isomorphism(g1, g2, pi, used, 0, shapes1, shapes2))
    return pi;
  return std::nullopt;
}

}  // namespace agfuzz
