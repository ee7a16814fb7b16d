#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace agfuzz {

/// Outcome of one theorem/lemma check on one instance. Witnesses are element
/// indices (lexicographically first violation); grades and other payload go
/// into `detail` as exact fraction strings, never floating point.
struct check_record {
  std::string theorem;
  std::string instance;
  bool pass = true;
  std::vector<int> witness;
  std::string detail;

  check_record() = default;
  check_record(std::string thm, std::string inst, bool ok = true,
               std::vector<int> wit = {}, std::string det = {})
      : theorem(std::move(thm)), instance(std::move(inst)), pass(ok),
        witness(std::move(wit)), detail(std::move(det)) {}
};

struct report {
  std::vector<check_record> records;

  void add(check_record r) { records.push_back(std::move(r)); }

  void merge(const report& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }

  bool all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const check_record& r) { return r.pass; });
  }

  int fail_count() const {
    return static_cast<int>(std::count_if(records.begin(), records.end(),
                                          [](const check_record& r) { return !r.pass; }));
  }

  /// Stable order for emission: by theorem, then instance, then witness.
  void sort() {
    std::sort(records.begin(), records.end(),
              [](const check_record& a, const check_record& b) {
                if (a.theorem != b.theorem) return a.theorem < b.theorem;
                if (a.instance != b.instance) return a.instance < b.instance;
                return a.witness < b.witness;
              });
  }
};

inline std::string witness_str(const std::vector<int>& w) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  out << ']';
  return out.str();
}

/// Line-oriented text report, deterministic and witness-sorted.
inline std::string emit_text(report rep) {
  rep.sort();
  std::ostringstream out;
  std::map<std::string, std::pair<int, int>> tally;  // theorem -> (pass, fail)
  for (const check_record& r : rep.records) {
    auto& [p, f] = tally[r.theorem];
    (r.pass ? p : f) += 1;
    out << (r.pass ? "PASS " : "FAIL ") << r.theorem;
    if (!r.instance.empty()) out << ' ' << r.instance;
    if (!r.pass && !r.witness.empty()) out << " witness=" << witness_str(r.witness);
    if (!r.detail.empty()) out << " | " << r.detail;
    out << "\n";
  }
  for (const auto& [name, pf] : tally)
    out << "summary " << name << " pass=" << pf.first << " fail=" << pf.second << "\n";
  return out.str();
}

/// Canonical JSON mirror: sorted keys, witnesses as index arrays, no floats.
inline nlohmann::json report_to_json(report rep) {
  rep.sort();
  nlohmann::json recs = nlohmann::json::array();
  std::map<std::string, std::pair<int, int>> tally;
  for (const check_record& r : rep.records) {
    auto& [p, f] = tally[r.theorem];
    (r.pass ? p : f) += 1;
    nlohmann::json jr{{"theorem", r.theorem},
                      {"instance", r.instance},
                      {"pass", r.pass}};
    jr["witness"] = r.witness;
    if (!r.detail.empty()) jr["detail"] = r.detail;
    recs.push_back(std::move(jr));
  }
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [name, pf] : tally)
    summary[name] = nlohmann::json{{"pass", pf.first}, {"fail", pf.second}};
  return nlohmann::json{{"schema_version", 1},
                        {"pass", rep.all_pass()},
                        {"records", std::move(recs)},
                        {"summary", std::move(summary)}};
}

}  // namespace agfuzz
