#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "agfuzz/ag_group.hpp"
#include "agfuzz/enumerate.hpp"
#include "agfuzz/fuzzy_subset.hpp"
#include "agfuzz/homomorphism.hpp"
#include "agfuzz/quotient.hpp"
#include "agfuzz/report.hpp"

namespace agfuzz {

/// Which checks a sweep runs. An empty suite means all of them.
inline const std::vector<std::string>& sweep_check_names() {
  static const std::vector<std::string> names = {
      "derived-identities",     "fuzzy-subgroup-definition",
      "elementary-lemmas",      "translation",
      "coset-equality",         "normal-grade",
      "normal-coset-identity",  "quotient-ag-group",
      "quotient-isomorphism",   "natural-homomorphism",
      "induced-normal",         "correspondence",
      "quotient-fuzzy-subgroup", "fuzzy-lagrange",
      "pullback-normality",
  };
  return names;
}

struct sweep_options {
  int min_order = 1;
  int max_order = 4;
  /// Cross-product checks (H x nu, homomorphism pullbacks) are restricted to
  /// orders up to this bound; they grow much faster than the per-mu sweeps.
  int cross_max_order = 4;
  std::vector<std::string> suite;  // empty = every check
  int order_cap = default_order_cap;
};

namespace detail {

struct sweep_state {
  const sweep_options& opt;
  std::set<std::string> selected;
  report rep;
  int nonnormal_total = 0;
  int nonnormal_well_defined = 0;

  bool wants(const std::string& name) const {
    return selected.empty() || selected.count(name) > 0;
  }
};

inline void sweep_group_checks(sweep_state& st, const ag_group& g,
                               const std::string& gid) {
  if (st.wants("derived-identities")) {
    for (const identity_check& c : check_derived_identities(g)) {
      check_record rec{"derived-identities", gid, c.holds, {}, c.name};
      rec.witness.assign(c.witness.begin(), c.witness.end());
      st.rep.add(rec);
    }
  }
}

inline void sweep_mu_checks(sweep_state& st, const ag_group& g, const fuzzy_subset& mu,
                            const std::string& mid) {
  if (st.wants("fuzzy-subgroup-definition")) {
    auto chk = is_fuzzy_ag_subgroup(g, mu);
    check_record rec{"fuzzy-subgroup-definition", mid, chk.ok};
    if (chk.product_witness)
      rec.witness = {chk.product_witness->first, chk.product_witness->second};
    else if (chk.inverse_witness)
      rec.witness = {*chk.inverse_witness};
    st.rep.add(rec);
  }
  if (st.wants("elementary-lemmas")) st.rep.merge(check_elementary_lemmas(g, mu, mid));
  if (st.wants("translation")) st.rep.merge(check_translation_lemma(g, mu, mid));
  if (st.wants("coset-equality")) st.rep.merge(coset_equality_theorem(g, mu, mid));

  const bool normal = static_cast<bool>(is_normal(g, mu));

  // The quotient construction: guaranteed for normal mu, an open empirical
  // question otherwise. Failures for non-normal mu are recorded as data.
  bool quotient_built = false;
  std::string build_failure;
  try {
    build_quotient_by_mu(g, mu);
    quotient_built = true;
  } catch (const error& e) {
    build_failure = e.what();
  }
  if (normal) {
    if (st.wants("quotient-ag-group"))
      st.rep.add({"quotient-ag-group", mid, quotient_built, {}, build_failure});
  } else {
    ++st.nonnormal_total;
    if (quotient_built) ++st.nonnormal_well_defined;
    if (st.wants("quotient-ag-group"))
      st.rep.add({"quotient-nonnormal-well-defined", mid, true, {},
                  quotient_built ? "yes" : "no: " + build_failure});
  }

  if (quotient_built && st.wants("fuzzy-lagrange"))
    st.rep.merge(fuzzy_lagrange(g, mu, mid));

  if (!normal) return;

  if (st.wants("normal-grade")) st.rep.merge(normal_grade_theorem(g, mu, mid));
  if (st.wants("normal-coset-identity")) st.rep.merge(normal_coset_identity(g, mu, mid));
  if (st.wants("quotient-isomorphism")) st.rep.merge(isomorphism_theorem(g, mu, mid));
  if (st.wants("natural-homomorphism")) st.rep.merge(natural_homomorphism(g, mu, mid).rep);

  if (st.wants("induced-normal") || st.wants("correspondence")) {
    try {
      induced_fuzzy_subset induced = induced_on_quotient(g, mu);
      if (st.wants("induced-normal")) st.rep.add({"induced-normal", mid, true});
      if (st.wants("correspondence")) {
        fuzzy_subset lifted = lift_correspondence(g, mu, induced.grades);
        st.rep.add({"correspondence-round-trip", mid, lifted == mu});
        // Every normal zeta on the quotient must lift to a normal subset.
        int zi = 0;
        for (const fuzzy_subset& zeta : generate_all_fuzzy_subgroups(induced.quotient.group)) {
          if (!is_normal(induced.quotient.group, zeta)) continue;
          std::string zid = mid + "/zeta" + std::to_string(zi++);
          try {
            lift_correspondence(g, mu, zeta);
            st.rep.add({"correspondence", zid, true});
          } catch (const error& e) {
            st.rep.add({"correspondence", zid, false, {}, e.what()});
          }
        }
      }
    } catch (const error& e) {
      st.rep.add({"induced-normal", mid, false, {}, e.what()});
    }
  }
}

inline void sweep_cross_checks(sweep_state& st, const ag_group& g,
                               const std::vector<fuzzy_subset>& mus,
                               const std::string& gid) {
  if (!st.wants("quotient-fuzzy-subgroup")) return;
  int hi = 0;
  for (const subgroup& h : all_subgroups(g)) {
    std::string hid = gid + "/H" + std::to_string(hi++);
    for (std::size_t mi = 0; mi < mus.size(); ++mi) {
      std::string id = hid + "/mu" + std::to_string(mi);
      try {
        quotient_fuzzy_subgroup(g, mus[mi], h);
        st.rep.add({"quotient-fuzzy-subgroup", id, true});
      } catch (const error& e) {
        st.rep.add({"quotient-fuzzy-subgroup", id, false, {}, e.what()});
      }
    }
  }
}

inline void sweep_pullbacks(sweep_state& st, const std::vector<ag_group>& groups,
                            const std::vector<std::string>& gids) {
  if (!st.wants("pullback-normality")) return;
  for (std::size_t si = 0; si < groups.size(); ++si) {
    const ag_group& src = groups[si];
    for (std::size_t ti = 0; ti < groups.size(); ++ti) {
      const ag_group& dst = groups[ti];
      // All product-preserving maps src -> dst, by brute force.
      const int n = src.order();
      std::vector<element> f(n, 0);
      int fi = 0;
      auto advance = [&]() {
        for (int i = 0; i < n; ++i) {
          if (++f[i] < dst.order()) return true;
          f[i] = 0;
        }
        return false;
      };
      do {
        bool hom = true;
        for (element x = 0; x < n && hom; ++x)
          for (element y = 0; y < n && hom; ++y)
            if (f[src.mul(x, y)] != dst.mul(f[x], f[y])) hom = false;
        if (!hom) continue;
        homomorphism h = check_homomorphism(f, src, dst);
        subgroup_view image = subgroup_as_group(dst, subgroup{h.image});
        int mi = 0;
        for (const fuzzy_subset& mu : generate_all_fuzzy_subgroups(image.group)) {
          if (!is_normal(image.group, mu)) continue;
          std::string id = gids[si] + "->" + gids[ti] + "/f" + std::to_string(fi) +
                           "/mu" + std::to_string(mi++);
          try {
            pullback(h, mu);
            st.rep.add({"pullback-normality", id, true});
          } catch (const error& e) {
            st.rep.add({"pullback-normality", id, false, {}, e.what()});
          }
        }
        ++fi;
      } while (advance());
    }
  }
}

}  // namespace detail

/// Runs the selected checks over every canonical AG-group in the order range
/// and every chain-generated fuzzy AG-subgroup over it. Failures are data;
/// callers inspect report.all_pass().
inline report population_sweep(const sweep_options& opt) {
  detail::sweep_state st{opt, {opt.suite.begin(), opt.suite.end()}, {}};
  for (const std::string& name : opt.suite)
    if (std::find(sweep_check_names().begin(), sweep_check_names().end(), name) ==
        sweep_check_names().end())
      fail(errc::precondition_failed, "unknown check '" + name + "'");

  std::vector<ag_group> cross_groups;
  std::vector<std::string> cross_gids;

  for (int order = opt.min_order; order <= opt.max_order; ++order) {
    std::vector<ag_group> groups = enumerate_ag_groups(order, true, opt.order_cap);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const ag_group& g = groups[gi];
      std::string gid = "n" + std::to_string(order) + "#" + std::to_string(gi);
      detail::sweep_group_checks(st, g, gid);

      std::vector<fuzzy_subset> mus = generate_all_fuzzy_subgroups(g);
      for (std::size_t mi = 0; mi < mus.size(); ++mi)
        detail::sweep_mu_checks(st, g, mus[mi], gid + "/mu" + std::to_string(mi));

      if (order <= opt.cross_max_order) {
        detail::sweep_cross_checks(st, g, mus, gid);
        cross_groups.push_back(g);
        cross_gids.push_back(gid);
      }
    }
  }

  detail::sweep_pullbacks(st, cross_groups, cross_gids);

  if (st.wants("quotient-ag-group"))
    st.rep.add({"quotient-nonnormal-stats", "", true, {},
                std::to_string(st.nonnormal_well_defined) + " of " +
                    std::to_string(st.nonnormal_total) +
                    " non-normal instances have a well-defined quotient"});
  return st.rep;
}

}  // namespace agfuzz
