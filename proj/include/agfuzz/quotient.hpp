#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "agfuzz/ag_group.hpp"
#include "agfuzz/fuzzy_subset.hpp"
#include "agfuzz/grade.hpp"
#include "agfuzz/homomorphism.hpp"
#include "agfuzz/report.hpp"

namespace agfuzz {

/// The fuzzy coset determined by x and mu: g |-> mu(g * x').
/// Equality is exact grade-vector equality; the determinant is a tag only.
struct fuzzy_coset {
  element determinant = 0;
  std::vector<grade> grades;

  friend bool operator==(const fuzzy_coset& a, const fuzzy_coset& b) {
    return a.grades == b.grades;
  }
};

inline fuzzy_coset make_fuzzy_coset(const ag_group& g, const fuzzy_subset& mu,
                                    element x) {
  require_carrier_match(g, mu);
  fuzzy_coset out{x, {}};
  out.grades.reserve(g.order());
  const element xi = g.inv(x);
  for (element z = 0; z < g.order(); ++z) out.grades.push_back(mu[g.mul(z, xi)]);
  return out;
}

inline std::vector<fuzzy_coset> all_fuzzy_cosets(const ag_group& g,
                                                 const fuzzy_subset& mu) {
  std::vector<fuzzy_coset> out;
  out.reserve(g.order());
  for (element x = 0; x < g.order(); ++x) out.push_back(make_fuzzy_coset(g, mu, x));
  return out;
}

/// A quotient carrier: a verified partition of the parent together with the
/// class table promoted to an AG-group. Representatives are minimal class
/// elements and classes are ordered by representative.
struct quotient_structure {
  std::vector<std::vector<element>> classes;
  std::vector<element> representatives;
  std::vector<int> projection;  // parent element -> class index
  ag_group group;               // class table, promoted
  bool left_identity_two_sided = false;

  int class_count() const { return static_cast<int>(classes.size()); }
};

namespace detail {

/// Builds the class table of a product-compatible partition. Compatibility
/// is verified over every pair of members of every pair of classes, never
/// assumed; the witness quadruple is (x, y, x0, y0).
inline quotient_structure quotient_from_partition(const ag_group& g,
                                                  std::vector<int> projection) {
  const int n = g.order();
  std::vector<std::vector<element>> classes;
  std::vector<element> reps;
  for (element x = 0; x < n; ++x) {
    int id = projection[x];
    if (id == static_cast<int>(classes.size())) {
      classes.push_back({});
      reps.push_back(x);
    }
    classes[id].push_back(x);
  }
  const int k = static_cast<int>(classes.size());

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int expected = projection[g.mul(reps[i], reps[j])];
      for (element x : classes[i])
        for (element y : classes[j])
          if (projection[g.mul(x, y)] != expected)
            fail(errc::not_well_defined,
                 "class product depends on representatives: (" + std::to_string(x) +
                     "," + std::to_string(y) + ") vs (" + std::to_string(reps[i]) +
                     "," + std::to_string(reps[j]) + ")");
    }

  std::vector<element> entries(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      entries[static_cast<std::size_t>(i) * k + j] = projection[g.mul(reps[i], reps[j])];

  ag_group qg;
  try {
    qg = promote_to_ag_group(cayley_table(k, std::move(entries)));
  } catch (const error& e) {
    fail(errc::not_ag_group, std::string("class table: ") + e.what());
  }
  if (qg.left_identity != projection[g.left_identity])
    fail(errc::not_ag_group, "left identity is not the class of e");

  bool two_sided = true;
  const int eq = qg.left_identity;
  for (int i = 0; i < k && two_sided; ++i)
    if (qg.mul(i, eq) != i) two_sided = false;

  return quotient_structure{std::move(classes), std::move(reps), std::move(projection),
                            std::move(qg), two_sided};
}

}  // namespace detail

/// G/mu: groups elements by exact fuzzy-coset equality and composes classes
/// by coset(x) o coset(y) = coset(xy). Normality is NOT a precondition; for
/// non-normal mu the construction may legitimately fail with NotWellDefined
/// or NotAGGroup, and callers record the empirical outcome.
inline quotient_structure build_quotient_by_mu(const ag_group& g,
                                               const fuzzy_subset& mu) {
  if (!is_fuzzy_ag_subgroup(g, mu))
    fail(errc::precondition_failed, "mu is not a fuzzy AG-subgroup");
  const int n = g.order();
  std::vector<fuzzy_coset> cosets = all_fuzzy_cosets(g, mu);
  std::vector<int> projection(n, -1);
  std::vector<int> first_of;  // class -> first element
  for (element x = 0; x < n; ++x) {
    for (int c = 0; c < static_cast<int>(first_of.size()); ++c)
      if (cosets[x] == cosets[first_of[c]]) { projection[x] = c; break; }
    if (projection[x] < 0) {
      projection[x] = static_cast<int>(first_of.size());
      first_of.push_back(x);
    }
  }
  return detail::quotient_from_partition(g, std::move(projection));
}

/// G/H for an arbitrary AG-subgroup H (no normality in AG-groups): classes
/// are the right cosets, composed by Hx o Hy = H(xy).
inline quotient_structure build_crisp_quotient(const ag_group& g, const subgroup& h) {
  if (!is_subgroup(g, h.members))
    fail(errc::precondition_failed, "H is not an AG-subgroup");
  std::vector<std::vector<element>> cosets = coset_decomposition(g, h);
  std::vector<int> projection(g.order(), -1);
  for (int c = 0; c < static_cast<int>(cosets.size()); ++c)
    for (element x : cosets[c]) projection[x] = c;
  return detail::quotient_from_partition(g, std::move(projection));
}

/// Number of distinct fuzzy cosets of mu in g.
inline int fuzzy_index(const ag_group& g, const fuzzy_subset& mu) {
  return build_quotient_by_mu(g, mu).class_count();
}

/// A fuzzy subset living on a quotient carrier.
struct induced_fuzzy_subset {
  quotient_structure quotient;
  fuzzy_subset grades;  // one grade per class
};

/// xi = nu/H: grade of the coset Hx is the join of nu over Hx. The result is
/// verified to be a fuzzy AG-subgroup of G/H.
inline induced_fuzzy_subset quotient_fuzzy_subgroup(const ag_group& g,
                                                    const fuzzy_subset& nu,
                                                    const subgroup& h) {
  if (!is_fuzzy_ag_subgroup(g, nu))
    fail(errc::precondition_failed, "nu is not a fuzzy AG-subgroup");
  quotient_structure q = build_crisp_quotient(g, h);
  fuzzy_subset xi;
  xi.grades.reserve(q.class_count());
  for (const auto& coset : q.classes) {
    grade top = nu[coset.front()];
    for (element z : coset) top = join(top, nu[z]);
    xi.grades.push_back(top);
  }
  if (!is_fuzzy_ag_subgroup(q.group, xi))
    fail(errc::theorem_violation, "nu/H is not a fuzzy AG-subgroup of G/H");
  return {std::move(q), std::move(xi)};
}

/// nu on G/mu with nu(coset of x) = mu(x), for normal mu. Representative
/// independence is verified, and the result must be normal on the quotient.
inline induced_fuzzy_subset induced_on_quotient(const ag_group& g,
                                                const fuzzy_subset& mu) {
  if (!is_normal(g, mu))
    fail(errc::precondition_failed, "mu is not normal");
  quotient_structure q = build_quotient_by_mu(g, mu);
  fuzzy_subset nu;
  nu.grades.reserve(q.class_count());
  for (int c = 0; c < q.class_count(); ++c) {
    const grade& val = mu[q.representatives[c]];
    for (element z : q.classes[c])
      if (mu[z] != val)
        fail(errc::not_well_defined, "grade differs inside class of " +
                                         std::to_string(q.representatives[c]) + " at " +
                                         std::to_string(z));
    nu.grades.push_back(val);
  }
  if (!is_fuzzy_ag_subgroup(q.group, nu) || !is_normal(q.group, nu))
    fail(errc::theorem_violation, "induced subset is not a normal fuzzy AG-subgroup");
  return {std::move(q), std::move(nu)};
}

/// Lifts zeta from G/mu back to G by nu(x) = zeta(coset of x). zeta must be
/// a normal fuzzy AG-subgroup of the quotient; the lift is verified normal.
inline fuzzy_subset lift_correspondence(const ag_group& g, const fuzzy_subset& mu,
                                        const fuzzy_subset& zeta) {
  if (!is_normal(g, mu))
    fail(errc::precondition_failed, "mu is not normal");
  quotient_structure q = build_quotient_by_mu(g, mu);
  if (zeta.size() != q.class_count())
    fail(errc::precondition_failed, "zeta must grade the quotient classes");
  if (!is_fuzzy_ag_subgroup(q.group, zeta) || !is_normal(q.group, zeta))
    fail(errc::precondition_failed, "zeta is not a normal fuzzy AG-subgroup of G/mu");
  fuzzy_subset nu;
  nu.grades.reserve(g.order());
  for (element x = 0; x < g.order(); ++x) nu.grades.push_back(zeta[q.projection[x]]);
  if (!is_fuzzy_ag_subgroup(g, nu) || !is_normal(g, nu))
    fail(errc::theorem_violation, "lifted subset is not a normal fuzzy AG-subgroup");
  return nu;
}

// ---------------------------------------------------------------------------
// Theorem sweeps. These return reports (violations are data, not exceptions)
// so the population drivers can aggregate them.
// ---------------------------------------------------------------------------

/// coset(x) = coset(y)  iff  (level set)*x = (level set)*y, both sides
/// computed independently: fuzzy cosets by grade vectors, crisp cosets by
/// direct set construction.
inline report coset_equality_theorem(const ag_group& g, const fuzzy_subset& mu,
                                     const std::string& instance = "") {
  if (!is_fuzzy_ag_subgroup(g, mu))
    fail(errc::precondition_failed, "mu is not a fuzzy AG-subgroup");
  const int n = g.order();
  std::vector<fuzzy_coset> cosets = all_fuzzy_cosets(g, mu);
  subgroup star{level_set(g, mu).members};
  std::vector<std::vector<element>> star_cosets;
  star_cosets.reserve(n);
  for (element x = 0; x < n; ++x) star_cosets.push_back(crisp_coset(g, star, x));

  check_record rec{"coset-equality", instance};
  for (element x = 0; x < n && rec.pass; ++x)
    for (element y = 0; y < n && rec.pass; ++y) {
      bool fuzzy_eq = cosets[x] == cosets[y];
      bool crisp_eq = star_cosets[x] == star_cosets[y];
      if (fuzzy_eq != crisp_eq) rec = {rec.theorem, instance, false, {x, y}};
    }
  report rep;
  rep.add(rec);
  return rep;
}

/// For normal mu: coset(x) = coset(y) implies mu(x) = mu(y) exactly.
inline report normal_grade_theorem(const ag_group& g, const fuzzy_subset& mu,
                                   const std::string& instance = "") {
  if (!is_normal(g, mu))
    fail(errc::precondition_failed, "mu is not normal");
  const int n = g.order();
  std::vector<fuzzy_coset> cosets = all_fuzzy_cosets(g, mu);
  check_record rec{"normal-grade", instance};
  for (element x = 0; x < n && rec.pass; ++x)
    for (element y = 0; y < n && rec.pass; ++y)
      if (cosets[x] == cosets[y] && mu[x] != mu[y])
        rec = {rec.theorem, instance, false, {x, y}};
  report rep;
  rep.add(rec);
  return rep;
}

/// For normal mu: coset_x(xg) = coset_x(gx) = mu(g) for all x, g.
inline report normal_coset_identity(const ag_group& g, const fuzzy_subset& mu,
                                    const std::string& instance = "") {
  if (!is_normal(g, mu))
    fail(errc::precondition_failed, "mu is not normal");
  const int n = g.order();
  check_record rec{"normal-coset-identity", instance};
  for (element x = 0; x < n && rec.pass; ++x) {
    fuzzy_coset cx = make_fuzzy_coset(g, mu, x);
    for (element z = 0; z < n && rec.pass; ++z)
      if (cx.grades[g.mul(x, z)] != mu[z] || cx.grades[g.mul(z, x)] != mu[z])
        rec = {rec.theorem, instance, false, {x, z}};
  }
  report rep;
  rep.add(rec);
  return rep;
}

/// For normal mu: G/mu and G/(level set) are isomorphic, and the explicit
/// map coset(x) |-> (level set)*x is itself a well-defined product-preserving
/// bijection. Both routes are checked: the backtracking search and the map.
inline report isomorphism_theorem(const ag_group& g, const fuzzy_subset& mu,
                                  const std::string& instance = "") {
  if (!is_normal(g, mu))
    fail(errc::precondition_failed, "mu is not normal");
  report rep;
  quotient_structure by_mu = build_quotient_by_mu(g, mu);
  subgroup star{level_set(g, mu).members};
  quotient_structure by_star = build_crisp_quotient(g, star);

  check_record search{"quotient-isomorphism-search", instance};
  if (by_mu.class_count() != by_star.class_count() ||
      !are_isomorphic(by_mu.group, by_star.group))
    search.pass = false;
  rep.add(search);

  check_record map_rec{"quotient-isomorphism-map", instance};
  const int k = by_mu.class_count();
  if (by_star.class_count() != k) {
    map_rec = {map_rec.theorem, instance, false, {}};
  } else {
    std::vector<int> phi(k);
    for (int i = 0; i < k; ++i) phi[i] = by_star.projection[by_mu.representatives[i]];
    // Well-defined: the two partitions must agree element by element.
    for (element x = 0; x < g.order() && map_rec.pass; ++x)
      if (by_star.projection[x] != phi[by_mu.projection[x]])
        map_rec = {map_rec.theorem, instance, false, {x}};
    // Bijective.
    if (map_rec.pass) {
      std::vector<bool> hit(k, false);
      for (int i = 0; i < k; ++i) {
        if (hit[phi[i]]) { map_rec = {map_rec.theorem, instance, false, {i}}; break; }
        hit[phi[i]] = true;
      }
    }
    // Product-preserving.
    for (int i = 0; i < k && map_rec.pass; ++i)
      for (int j = 0; j < k && map_rec.pass; ++j)
        if (phi[by_mu.group.mul(i, j)] != by_star.group.mul(phi[i], phi[j]))
          map_rec = {map_rec.theorem, instance, false, {i, j}};
  }
  rep.add(map_rec);
  return rep;
}

/// theta : G -> G/mu, x |-> coset of x, with its kernel report.
struct natural_homomorphism_result {
  quotient_structure quotient;
  homomorphism theta;
  report rep;
};

/// Verifies theta is a homomorphism onto G/mu and that its kernel (preimage
/// of the identity class) equals the level set exactly.
inline natural_homomorphism_result natural_homomorphism(const ag_group& g,
                                                        const fuzzy_subset& mu,
                                                        const std::string& instance = "") {
  if (!is_normal(g, mu))
    fail(errc::precondition_failed, "mu is not normal");
  quotient_structure q = build_quotient_by_mu(g, mu);
  std::vector<element> theta_map(q.projection.begin(), q.projection.end());
  homomorphism theta = check_homomorphism(theta_map, g, q.group);

  report rep;
  check_record onto{"natural-homomorphism-onto", instance};
  onto.pass = static_cast<int>(theta.image.size()) == q.class_count();
  rep.add(onto);

  check_record kernel{"kernel-equals-level-set", instance};
  std::vector<element> ker;
  const int id_class = q.projection[g.left_identity];
  for (element x = 0; x < g.order(); ++x)
    if (q.projection[x] == id_class) ker.push_back(x);
  if (ker != level_set(g, mu).members) {
    kernel.pass = false;
    kernel.witness = ker;
  }
  rep.add(kernel);
  return {std::move(q), std::move(theta), std::move(rep)};
}

/// Index-divides-order, plus the explicit crisp/fuzzy coset bijection from
/// the finite decomposition: H = {h : coset(h) = coset(e)} is a subgroup,
/// its coset count equals the fuzzy index, and Hx |-> coset(x) is
/// well-defined and injective. The caller decides what to do when the
/// quotient construction itself fails (possible for non-normal mu).
inline report fuzzy_lagrange(const ag_group& g, const fuzzy_subset& mu,
                             const std::string& instance = "") {
  if (!is_fuzzy_ag_subgroup(g, mu))
    fail(errc::precondition_failed, "mu is not a fuzzy AG-subgroup");
  const int n = g.order();
  report rep;
  quotient_structure q = build_quotient_by_mu(g, mu);
  const int index = q.class_count();

  check_record divides{"fuzzy-lagrange-divides", instance};
  divides.pass = (n % index) == 0;
  divides.detail = "index " + std::to_string(index) + " vs order " + std::to_string(n);
  rep.add(divides);

  std::vector<fuzzy_coset> cosets = all_fuzzy_cosets(g, mu);
  std::vector<element> h_members;
  for (element h = 0; h < n; ++h)
    if (cosets[h] == cosets[g.left_identity]) h_members.push_back(h);

  check_record h_sub{"fuzzy-lagrange-h-subgroup", instance};
  h_sub.pass = is_subgroup(g, h_members);
  h_sub.witness = h_sub.pass ? std::vector<int>{} : h_members;
  rep.add(h_sub);
  if (!h_sub.pass) return rep;

  subgroup h{h_members};
  std::vector<std::vector<element>> decomposition = coset_decomposition(g, h);

  check_record counts{"fuzzy-lagrange-count", instance};
  counts.pass = static_cast<int>(decomposition.size()) == index;
  counts.detail = std::to_string(decomposition.size()) + " crisp cosets vs index " +
                  std::to_string(index);
  rep.add(counts);

  check_record bij{"fuzzy-lagrange-bijection", instance};
  std::vector<bool> image_hit(index, false);
  for (const auto& coset : decomposition) {
    const int target = q.projection[coset.front()];
    for (element z : coset)
      if (bij.pass && q.projection[z] != target)
        bij = {bij.theorem, instance, false, {coset.front(), z}};
    if (bij.pass && image_hit[target])
      bij = {bij.theorem, instance, false, {coset.front()}};
    image_hit[target] = true;
  }
  rep.add(bij);
  return rep;
}

// ---------------------------------------------------------------------------
// Quotient dump formats.
// ---------------------------------------------------------------------------

inline std::string format_quotient_text(const quotient_structure& q,
                                        const fuzzy_subset* induced = nullptr) {
  std::ostringstream out;
  out << "classes " << q.class_count() << "\n";
  for (int c = 0; c < q.class_count(); ++c) {
    out << "class " << c << " rep " << q.representatives[c] << " members";
    for (element z : q.classes[c]) out << ' ' << z;
    if (induced) out << " grade " << (*induced)[c].str();
    out << "\n";
  }
  out << "table\n" << q.class_count() << "\n";
  for (int i = 0; i < q.class_count(); ++i) {
    for (int j = 0; j < q.class_count(); ++j) {
      if (j) out << ' ';
      out << q.group.mul(i, j);
    }
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json quotient_to_json(const quotient_structure& q,
                                       const fuzzy_subset* induced = nullptr) {
  nlohmann::json classes = nlohmann::json::array();
  for (int c = 0; c < q.class_count(); ++c) {
    nlohmann::json jc{{"index", c},
                      {"rep", q.representatives[c]},
                      {"members", q.classes[c]}};
    if (induced) jc["grade"] = (*induced)[c].str();
    classes.push_back(std::move(jc));
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < q.class_count(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < q.class_count(); ++j) row.push_back(q.group.mul(i, j));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"classes", std::move(classes)},
                        {"table", {{"order", q.class_count()}, {"table", std::move(rows)}}},
                        {"projection", q.projection},
                        {"left_identity", q.group.left_identity}};
}

}  // namespace agfuzz
