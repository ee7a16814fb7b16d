#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agfuzz/ag_group.hpp"
#include "agfuzz/grade.hpp"
#include "agfuzz/homomorphism.hpp"
#include "agfuzz/report.hpp"

namespace agfuzz {

/// A fuzzy subset of an AG-group carrier: one membership grade per element.
/// The carrier is passed alongside; a subset is only meaningful together
/// with the group it grades.
struct fuzzy_subset {
  std::vector<grade> grades;

  int size() const { return static_cast<int>(grades.size()); }
  const grade& operator[](element x) const { return grades[x]; }

  friend bool operator==(const fuzzy_subset& a, const fuzzy_subset& b) {
    return a.grades == b.grades;
  }
};

/// Result of the fuzzy AG-subgroup test. Exactly one witness field is set on
/// failure: the first pair violating mu(xy) >= mu(x) ^ mu(y), or else the
/// first element violating mu(x') >= mu(x).
struct fuzzy_subgroup_check {
  bool ok = true;
  std::optional<std::pair<element, element>> product_witness;
  std::optional<element> inverse_witness;

  explicit operator bool() const { return ok; }
};

inline void require_carrier_match(const ag_group& g, const fuzzy_subset& mu) {
  if (mu.size() != g.order())
    fail(errc::precondition_failed,
         "fuzzy subset has " + std::to_string(mu.size()) + " grades, carrier order " +
             std::to_string(g.order()));
}

/// Definitional test: mu(xy) >= mu(x) ^ mu(y) for all pairs and
/// mu(x') >= mu(x) for all x. Pairs are scanned first, in lex order.
inline fuzzy_subgroup_check is_fuzzy_ag_subgroup(const ag_group& g,
                                                 const fuzzy_subset& mu) {
  require_carrier_match(g, mu);
  const int n = g.order();
  for (element x = 0; x < n; ++x)
    for (element y = 0; y < n; ++y)
      if (mu[g.mul(x, y)] < meet(mu[x], mu[y]))
        return {false, std::make_pair(x, y), std::nullopt};
  for (element x = 0; x < n; ++x)
    if (mu[g.inv(x)] < mu[x]) return {false, std::nullopt, x};
  return {};
}

/// Normality test: mu(xy * x') == mu(y) exactly, for all pairs.
struct normality_check {
  bool ok = true;
  std::optional<std::pair<element, element>> witness;
  explicit operator bool() const { return ok; }
};

inline normality_check is_normal(const ag_group& g, const fuzzy_subset& mu) {
  require_carrier_match(g, mu);
  const int n = g.order();
  for (element x = 0; x < n; ++x)
    for (element y = 0; y < n; ++y)
      if (mu[g.mul(g.mul(x, y), g.inv(x))] != mu[y])
        return {false, std::make_pair(x, y)};
  return {};
}

/// The level set {x : mu(x) = mu(e)}. When mu is a fuzzy AG-subgroup this is
/// itself an AG-subgroup; that consequence is asserted here rather than
/// assumed (a violation would falsify the backing theory, so it throws).
struct level_set_result {
  std::vector<element> members;  // sorted
};

inline level_set_result level_set(const ag_group& g, const fuzzy_subset& mu) {
  require_carrier_match(g, mu);
  std::vector<element> members;
  const grade& at_e = mu[g.left_identity];
  for (element x = 0; x < g.order(); ++x)
    if (mu[x] == at_e) members.push_back(x);
  if (is_fuzzy_ag_subgroup(g, mu) && !is_subgroup(g, members))
    fail(errc::theorem_violation, "level set of a fuzzy AG-subgroup is not a subgroup");
  return {std::move(members)};
}

/// Elementary consequences of the definition, checked exactly:
///   mu(e) >= mu(x);  mu(x) = mu(x');  mu(xy) = mu(yx) for ALL pairs —
/// the last holds without any normality assumption.
inline report check_elementary_lemmas(const ag_group& g, const fuzzy_subset& mu,
                                      const std::string& instance = "") {
  if (!is_fuzzy_ag_subgroup(g, mu))
    fail(errc::precondition_failed, "mu is not a fuzzy AG-subgroup");
  const int n = g.order();
  report rep;

  check_record max_at_e{"identity-grade-max", instance};
  for (element x = 0; x < n && max_at_e.pass; ++x)
    if (mu[g.left_identity] < mu[x]) max_at_e = {max_at_e.theorem, instance, false, {x}};
  rep.add(max_at_e);

  check_record inv_eq{"inverse-grade-equal", instance};
  for (element x = 0; x < n && inv_eq.pass; ++x)
    if (mu[x] != mu[g.inv(x)]) inv_eq = {inv_eq.theorem, instance, false, {x}};
  rep.add(inv_eq);

  check_record comm{"commutation", instance};
  for (element x = 0; x < n && comm.pass; ++x)
    for (element y = 0; y < n && comm.pass; ++y)
      if (mu[g.mul(x, y)] != mu[g.mul(y, x)]) comm = {comm.theorem, instance, false, {x, y}};
  rep.add(comm);

  return rep;
}

/// For every x, the biconditional: (mu(xy) = mu(y) for all y) iff
/// mu(x) = mu(e). The witness names the offending x.
inline report check_translation_lemma(const ag_group& g, const fuzzy_subset& mu,
                                      const std::string& instance = "") {
  if (!is_fuzzy_ag_subgroup(g, mu))
    fail(errc::precondition_failed, "mu is not a fuzzy AG-subgroup");
  const int n = g.order();
  check_record rec{"translation", instance};
  for (element x = 0; x < n && rec.pass; ++x) {
    bool translates = true;
    for (element y = 0; y < n; ++y)
      if (mu[g.mul(x, y)] != mu[y]) { translates = false; break; }
    bool at_top = mu[x] == mu[g.left_identity];
    if (translates != at_top) rec = {rec.theorem, instance, false, {x}};
  }
  report rep;
  rep.add(rec);
  return rep;
}

/// Pullback of mu along f. `mu_on_image` grades f's image subgroup, indexed
/// in sorted image order. Requires mu to be a normal fuzzy AG-subgroup of
/// the image; the result mu(f(.)) is verified to be normal on the source.
inline fuzzy_subset pullback(const homomorphism& f, const fuzzy_subset& mu_on_image) {
  subgroup_view image = subgroup_as_group(f.target, subgroup{f.image});
  if (mu_on_image.size() != image.group.order())
    fail(errc::precondition_failed, "grades must cover exactly the image subgroup");
  if (!is_fuzzy_ag_subgroup(image.group, mu_on_image) ||
      !is_normal(image.group, mu_on_image))
    fail(errc::precondition_failed, "mu is not a normal fuzzy AG-subgroup of the image");

  fuzzy_subset out;
  out.grades.reserve(f.source.order());
  for (element x = 0; x < f.source.order(); ++x)
    out.grades.push_back(mu_on_image[image.local(f.map[x])]);

  if (!is_fuzzy_ag_subgroup(f.source, out) || !is_normal(f.source, out))
    fail(errc::theorem_violation, "pullback failed to be a normal fuzzy AG-subgroup");
  return out;
}

/// Restricts a fuzzy subset over the whole target to image order, for
/// callers that hold grades of every target element.
inline fuzzy_subset restrict_to_image(const homomorphism& f, const fuzzy_subset& mu) {
  if (mu.size() != f.target.order())
    fail(errc::precondition_failed, "grades must cover the target");
  fuzzy_subset out;
  for (element m : f.image) out.grades.push_back(mu[m]);
  return out;
}

/// The canonical strictly descending grade chain 1 > 1/2 > 1/4 > ...
inline grade chain_grade(int depth) { return grade(1, std::int64_t(1) << depth); }

/// Builds the step subset of a strict subgroup chain H1 c H2 c ... c Hk = G:
/// members of H1 grade 1, of H2\H1 grade 1/2, and so on.
inline fuzzy_subset subset_from_chain(const ag_group& g,
                                      const std::vector<subgroup>& chain) {
  fuzzy_subset mu;
  mu.grades.assign(g.order(), grade::zero());
  std::vector<bool> assigned(g.order(), false);
  for (std::size_t level = 0; level < chain.size(); ++level)
    for (element m : chain[level].members)
      if (!assigned[m]) {
        mu.grades[m] = chain_grade(static_cast<int>(level));
        assigned[m] = true;
      }
  return mu;
}

/// Emits the fuzzy AG-subgroups built from strict subgroup chains of length
/// exactly `chain_length` ending at G, in lexicographic chain order. The
/// chain construction is only a generator heuristic: every candidate is
/// re-verified definitionally before emission.
inline std::vector<fuzzy_subset> generate_fuzzy_subgroups(const ag_group& g,
                                                          int chain_length) {
  if (chain_length < 1)
    fail(errc::precondition_failed, "chain length must be >= 1");
  std::vector<subgroup> subs = all_subgroups(g);
  std::vector<fuzzy_subset> out;

  std::vector<subgroup> chain;
  // Chains are built top-down: chain[0] = G, then ever smaller subgroups.
  auto descend = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      std::vector<subgroup> bottom_up(chain.rbegin(), chain.rend());
      fuzzy_subset mu = subset_from_chain(g, bottom_up);
      if (is_fuzzy_ag_subgroup(g, mu)) out.push_back(std::move(mu));
      return;
    }
    // Copy: push_back below may reallocate the chain.
    const std::vector<element> top = chain.back().members;
    for (const subgroup& s : subs) {
      if (s.members.size() >= top.size()) continue;
      if (!std::includes(top.begin(), top.end(), s.members.begin(), s.members.end()))
        continue;
      chain.push_back(s);
      self(self, remaining - 1);
      chain.pop_back();
    }
  };

  std::vector<element> full(g.order());
  for (element x = 0; x < g.order(); ++x) full[x] = x;
  chain.push_back(subgroup{full});
  descend(descend, chain_length - 1);
  return out;
}

/// All chain-generated fuzzy AG-subgroups of g, over every chain length.
inline std::vector<fuzzy_subset> generate_all_fuzzy_subgroups(const ag_group& g) {
  std::vector<fuzzy_subset> out;
  for (int k = 1; k <= g.order() + 1; ++k) {
    std::vector<fuzzy_subset> batch = generate_fuzzy_subgroups(g, k);
    if (batch.empty() && k > 1) break;  // no strict chain can get longer
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

/// Applies a strictly increasing remapping of mu's distinct grade values.
/// `new_values` must be strictly ascending with one entry per distinct grade.
/// Every predicate in this library is order-theoretic, so remapping must not
/// change any boolean outcome; tests assert exactly that.
inline fuzzy_subset regrade(const fuzzy_subset& mu, const std::vector<grade>& new_values) {
  std::vector<grade> distinct(mu.grades);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() != new_values.size())
    fail(errc::precondition_failed, "regrade needs one value per distinct grade");
  for (std::size_t i = 1; i < new_values.size(); ++i)
    if (!(new_values[i - 1] < new_values[i]))
      fail(errc::precondition_failed, "regrade values must be strictly increasing");
  fuzzy_subset out;
  out.grades.reserve(mu.grades.size());
  for (const grade& gv : mu.grades) {
    std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), gv) - distinct.begin());
    out.grades.push_back(new_values[idx]);
  }
  return out;
}

}  // namespace agfuzz
