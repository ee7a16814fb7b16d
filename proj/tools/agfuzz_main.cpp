// Command-line front end: load Cayley tables and grade files, run any single
// construction or the full theorem sweep, and emit text or JSON reports.
//
// Exit codes: 0 all checks passed, 1 a check or assertion failed,
// 2 malformed input, 3 infeasible (order cap exceeded).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agfuzz/agfuzz.hpp"

namespace {

using namespace agfuzz;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_parse = 2;
constexpr int exit_infeasible = 3;

int order_cap_from_env() {
  if (const char* env = std::getenv("AGFUZZ_ORDER_CAP")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1) return cap;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring bad AGFUZZ_ORDER_CAP '" << env << "'\n";
  }
  return default_order_cap;
}

struct output_options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_format_flag(CLI::App* cmd, output_options& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

ag_group load_group(const std::string& path) {
  return promote_to_ag_group(parse_table(read_file(path)));
}

fuzzy_subset load_grades(const std::string& path, const ag_group& g) {
  fuzzy_subset mu{parse_grades(read_file(path))};
  if (mu.size() != g.order())
    fail(errc::parse_error, "'" + path + "' has " + std::to_string(mu.size()) +
                                " grades but the table has order " +
                                std::to_string(g.order()));
  return mu;
}

std::vector<element> parse_element_list(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  std::vector<element> out;
  long long v;
  while (in >> v) out.push_back(static_cast<element>(v));
  if (!in.eof()) fail(errc::parse_error, "bad element list '" + text + "'");
  if (out.empty()) fail(errc::parse_error, "empty element list");
  return out;
}

std::string witness_of(const fuzzy_subgroup_check& chk) {
  if (chk.product_witness)
    return witness_str({chk.product_witness->first, chk.product_witness->second});
  if (chk.inverse_witness) return witness_str({*chk.inverse_witness});
  return "[]";
}

int run_check_group(const std::string& table_path, const output_options& out) {
  cayley_table t = parse_table(read_file(table_path));
  std::string failure;
  std::optional<ag_group> g;
  try {
    g = promote_to_ag_group(t);
  } catch (const error& e) {
    failure = e.what();
  }

  std::vector<identity_check> identities;
  bool identities_ok = true;
  if (g) {
    identities = check_derived_identities(*g);
    for (const auto& c : identities) identities_ok = identities_ok && c.holds;
  }

  if (out.json()) {
    nlohmann::json j{{"schema_version", 1}, {"ag_group", g.has_value()}};
    if (g) {
      j["left_identity"] = g->left_identity;
      j["inverse"] = g->inverse;
      nlohmann::json ids = nlohmann::json::array();
      for (const auto& c : identities)
        ids.push_back({{"name", c.name}, {"holds", c.holds}, {"witness", c.witness}});
      j["derived_identities"] = std::move(ids);
    } else {
      j["error"] = failure;
    }
    std::cout << j.dump(2) << "\n";
  } else if (g) {
    int self_inverse = 0;
    for (element x = 0; x < g->order(); ++x)
      if (g->inv(x) == x) ++self_inverse;
    std::cout << "AG-group: yes, e=" << g->left_identity << ", self-inverse: "
              << (self_inverse == g->order()
                      ? std::string("all")
                      : std::to_string(self_inverse) + " of " + std::to_string(g->order()))
              << "\n";
    for (const auto& c : identities)
      std::cout << "identity " << c.name << ": " << (c.holds ? "holds" : "FAILS") << "\n";
  } else {
    std::cout << "AG-group: no (" << failure << ")\n";
  }
  return (g && identities_ok) ? exit_pass : exit_fail;
}

int run_check_fuzzy(const std::string& table_path, const std::string& grades_path,
                    bool check_normal, const output_options& out) {
  ag_group g = load_group(table_path);
  fuzzy_subset mu = load_grades(grades_path, g);
  auto chk = is_fuzzy_ag_subgroup(g, mu);
  auto norm = is_normal(g, mu);
  std::vector<element> star = level_set(g, mu).members;

  if (out.json()) {
    nlohmann::json j{{"schema_version", 1},
                     {"fuzzy_ag_subgroup", chk.ok},
                     {"level_set", star}};
    if (!chk.ok) j["witness"] = witness_of(chk);
    if (check_normal) {
      j["normal"] = norm.ok;
      if (!norm.ok) j["normal_witness"] = {norm.witness->first, norm.witness->second};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fuzzy AG-subgroup: " << (chk.ok ? "yes" : "NO witness=" + witness_of(chk))
              << "\n";
    if (check_normal) {
      std::cout << "normal: "
                << (norm.ok ? "yes"
                            : "NO witness=" + witness_str({norm.witness->first,
                                                           norm.witness->second}))
                << "\n";
    }
    std::cout << "level set:";
    for (element x : star) std::cout << ' ' << x;
    std::cout << "\n";
  }
  return chk.ok ? exit_pass : exit_fail;
}

int run_cosets(const std::string& table_path, const std::string& grades_path,
               std::optional<int> only, const output_options& out) {
  ag_group g = load_group(table_path);
  fuzzy_subset mu = load_grades(grades_path, g);
  if (!is_fuzzy_ag_subgroup(g, mu))
    fail(errc::precondition_failed, "grades are not a fuzzy AG-subgroup");
  if (only && (*only < 0 || *only >= g.order()))
    fail(errc::parse_error, "element out of range");

  std::vector<fuzzy_coset> cosets;
  if (only)
    cosets.push_back(make_fuzzy_coset(g, mu, *only));
  else
    cosets = all_fuzzy_cosets(g, mu);

  if (out.json()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cosets) {
      nlohmann::json grades = nlohmann::json::array();
      for (const auto& gv : c.grades) grades.push_back(gv.str());
      arr.push_back({{"determinant", c.determinant}, {"grades", std::move(grades)}});
    }
    std::cout << nlohmann::json{{"schema_version", 1}, {"cosets", std::move(arr)}}.dump(2)
              << "\n";
  } else {
    for (const auto& c : cosets) {
      std::cout << "coset " << c.determinant << ":";
      for (const auto& gv : c.grades) std::cout << ' ' << gv.str();
      std::cout << "\n";
    }
  }
  return exit_pass;
}

int run_quotient(const std::string& table_path, const std::string& grades_path,
                 const output_options& out) {
  ag_group g = load_group(table_path);
  fuzzy_subset mu = load_grades(grades_path, g);
  quotient_structure q = build_quotient_by_mu(g, mu);
  std::optional<fuzzy_subset> induced;
  if (is_normal(g, mu)) induced = induced_on_quotient(g, mu).grades;

  if (out.json())
    std::cout << quotient_to_json(q, induced ? &*induced : nullptr).dump(2) << "\n";
  else
    std::cout << format_quotient_text(q, induced ? &*induced : nullptr);
  return exit_pass;
}

int run_crisp_quotient(const std::string& table_path, const std::string& members,
                       const std::string& grades_path, const output_options& out) {
  ag_group g = load_group(table_path);
  std::vector<element> m = parse_element_list(members);
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  if (!is_subgroup(g, m)) fail(errc::precondition_failed, "members are not an AG-subgroup");

  if (grades_path.empty()) {
    quotient_structure q = build_crisp_quotient(g, subgroup{m});
    if (out.json())
      std::cout << quotient_to_json(q).dump(2) << "\n";
    else
      std::cout << format_quotient_text(q);
  } else {
    fuzzy_subset nu = load_grades(grades_path, g);
    induced_fuzzy_subset xi = quotient_fuzzy_subgroup(g, nu, subgroup{m});
    if (out.json())
      std::cout << quotient_to_json(xi.quotient, &xi.grades).dump(2) << "\n";
    else
      std::cout << format_quotient_text(xi.quotient, &xi.grades);
  }
  return exit_pass;
}

int run_lagrange(const std::string& table_path, const std::string& grades_path,
                 const output_options& out) {
  ag_group g = load_group(table_path);
  fuzzy_subset mu = load_grades(grades_path, g);
  report rep = fuzzy_lagrange(g, mu);
  int index = fuzzy_index(g, mu);

  if (out.json()) {
    nlohmann::json j = report_to_json(rep);
    j["index"] = index;
    j["order"] = g.order();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "index " << index << (g.order() % index == 0 ? " divides" : " DOES NOT divide")
              << " order " << g.order() << "\n";
    std::cout << emit_text(rep);
  }
  return rep.all_pass() ? exit_pass : exit_fail;
}

int run_pullback(const std::string& src_path, const std::string& dst_path,
                 const std::string& map_text, const std::string& grades_path,
                 const output_options& out) {
  ag_group src = load_group(src_path);
  ag_group dst = load_group(dst_path);
  std::vector<element> fmap = parse_element_list(map_text);
  homomorphism f = check_homomorphism(fmap, src, dst);
  fuzzy_subset mu = load_grades(grades_path, dst);
  fuzzy_subset on_image = restrict_to_image(f, mu);
  fuzzy_subset pulled = pullback(f, on_image);

  if (out.json()) {
    nlohmann::json j = grades_to_json(pulled.grades);
    j["schema_version"] = 1;
    j["image"] = f.image;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_grades_text(pulled.grades);
  }
  return exit_pass;
}

int run_sweep(const sweep_options& opt, const output_options& out) {
  report rep = population_sweep(opt);
  if (out.json())
    std::cout << report_to_json(rep).dump(2) << "\n";
  else
    std::cout << emit_text(rep);
  return rep.all_pass() ? exit_pass : exit_fail;
}

int run_enumerate(int order, const std::string& mode, bool canonical,
                  const std::string& out_path, int cap) {
  enumeration_task task;
  task.order = order;
  task.canonical_only = canonical;
  task.mode = mode == "ag-groups" ? enum_mode::ag_groups
                                  : enum_mode::ag_groupoids_with_left_identity;

  std::ostringstream buf;
  int count = 0;
  enumerate_tables(task, [&](const cayley_table& t) {
    if (count++) buf << "\n";
    buf << format_table_text(t);
  }, cap);

  if (out_path.empty()) {
    std::cout << buf.str();
    std::cerr << count << " tables\n";
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) fail(errc::parse_error, "cannot write '" + out_path + "'");
    f << buf.str();
    std::cout << count << " tables -> " << out_path << "\n";
  }
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finite AG-groups and fuzzy AG-subgroups"};
  app.require_subcommand(1);
  const int env_cap = order_cap_from_env();

  output_options out;

  std::string table_path, grades_path, src_path, dst_path, map_text, members, out_path;
  bool flag_normal = false;
  std::optional<int> coset_element;

  auto* cg = app.add_subcommand("check-group", "Verify the AG-group axioms on a table");
  cg->add_option("table", table_path, "Cayley table file")->required();
  add_format_flag(cg, out);

  auto* cf = app.add_subcommand("check-fuzzy", "Check a grade vector for fuzzy AG-subgroup-ness");
  cf->add_option("table", table_path)->required();
  cf->add_option("grades", grades_path)->required();
  cf->add_flag("--normal", flag_normal, "Also report normality");
  add_format_flag(cf, out);

  auto* co = app.add_subcommand("cosets", "Print fuzzy cosets g -> mu(g*x')");
  co->add_option("table", table_path)->required();
  co->add_option("grades", grades_path)->required();
  int coset_x = -1;
  co->add_option("--element", coset_x, "Only the coset determined by this element");
  add_format_flag(co, out);

  auto* qu = app.add_subcommand("quotient", "Build G/mu from the distinct fuzzy cosets");
  qu->add_option("table", table_path)->required();
  qu->add_option("grades", grades_path)->required();
  add_format_flag(qu, out);

  auto* cq = app.add_subcommand("crisp-quotient", "Build G/H (optionally with nu/H grades)");
  cq->add_option("table", table_path)->required();
  cq->add_option("--members", members, "Subgroup members, e.g. 0,1")->required();
  cq->add_option("--grades", grades_path, "Grade file for the induced nu/H");
  add_format_flag(cq, out);

  auto* la = app.add_subcommand("lagrange", "Index-divides-order with the coset bijection");
  la->add_option("table", table_path)->required();
  la->add_option("grades", grades_path)->required();
  add_format_flag(la, out);

  auto* pb = app.add_subcommand("pullback", "Pull a normal fuzzy AG-subgroup back along f");
  pb->add_option("--source", src_path, "Source group table")->required();
  pb->add_option("--target", dst_path, "Target group table")->required();
  pb->add_option("--map", map_text, "f as comma-separated target elements")->required();
  pb->add_option("grades", grades_path, "Grades over the target")->required();
  add_format_flag(pb, out);

  sweep_options sw_opt;
  auto* sw = app.add_subcommand("sweep", "Run the theorem suite over all small AG-groups");
  sw->add_option("--min-order", sw_opt.min_order)->capture_default_str();
  sw->add_option("--max-order", sw_opt.max_order)->capture_default_str();
  sw->add_option("--cross-max-order", sw_opt.cross_max_order)->capture_default_str();
  sw->add_option("--suite", sw_opt.suite, "Checks to run (default: all)")->delimiter(',');
  add_format_flag(sw, out);

  int enum_order = 1;
  std::string enum_mode_name = "ag-groups";
  bool enum_canonical = false;
  int enum_cap = env_cap;
  auto* en = app.add_subcommand("enumerate", "Exhaustively generate small AG-groups");
  en->add_option("--order", enum_order, "Carrier size")->required();
  en->add_option("--mode", enum_mode_name)
      ->check(CLI::IsMember({"ag-groups", "ag-groupoids-with-left-identity"}))
      ->capture_default_str();
  en->add_flag("--canonical", enum_canonical, "One table per isomorphism class");
  en->add_option("--out", out_path, "Write blank-line-separated tables here");
  en->add_option("--cap", enum_cap, "Order cap override")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cg->parsed()) return run_check_group(table_path, out);
    if (cf->parsed()) return run_check_fuzzy(table_path, grades_path, flag_normal, out);
    if (co->parsed()) {
      if (co->count("--element")) coset_element = coset_x;
      return run_cosets(table_path, grades_path, coset_element, out);
    }
    if (qu->parsed()) return run_quotient(table_path, grades_path, out);
    if (cq->parsed()) return run_crisp_quotient(table_path, members, grades_path, out);
    if (la->parsed()) return run_lagrange(table_path, grades_path, out);
    if (pb->parsed()) return run_pullback(src_path, dst_path, map_text, grades_path, out);
    if (sw->parsed()) {
      sw_opt.order_cap = env_cap;
      return run_sweep(sw_opt, out);
    }
    if (en->parsed()) {
      if (enum_cap > default_order_cap)
        std::cerr << "warning: order cap " << enum_cap
                  << " above default; the search is exponential in the cell count\n";
      return run_enumerate(enum_order, enum_mode_name, enum_canonical, out_path, enum_cap);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::parse_error:
      case errc::non_square:
      case errc::entry_out_of_range:
        return exit_parse;
      case errc::order_cap_exceeded:
        return exit_infeasible;
      default:
        return exit_fail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  }
  return exit_pass;
}
