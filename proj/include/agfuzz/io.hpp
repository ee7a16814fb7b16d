#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "agfuzz/cayley_table.hpp"
#include "agfuzz/error.hpp"
#include "agfuzz/grade.hpp"

namespace agfuzz {

namespace detail {

inline bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline long long parse_int(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail(errc::parse_error, std::string(what) + ": '" + tok + "'");
  }
  if (pos != tok.size())
    fail(errc::parse_error, std::string(what) + ": trailing characters in '" + tok + "'");
  return v;
}

}  // namespace detail

/// Text format: first line n, then n lines of n space-separated entries.
/// Anything after the last row is trailing garbage and rejected.
inline cayley_table parse_table_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> toks;
  while (std::getline(in, line)) {
    auto t = detail::tokens(line);
    toks.insert(toks.end(), t.begin(), t.end());
  }
  if (toks.empty()) fail(errc::parse_error, "empty table file");
  long long n = detail::parse_int(toks[0], "table order");
  if (n <= 0) fail(errc::parse_error, "table order must be positive");
  if (static_cast<long long>(toks.size()) != 1 + n * n)
    fail(errc::parse_error, "expected " + std::to_string(n * n) + " entries, found " +
                                std::to_string(toks.size() - 1));
  std::vector<std::vector<long long>> raw(n, std::vector<long long>(n));
  for (long long r = 0; r < n; ++r)
    for (long long c = 0; c < n; ++c)
      raw[r][c] = detail::parse_int(toks[1 + r * n + c], "table entry");
  return validate_table(raw);
}

inline cayley_table parse_table_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    fail(errc::parse_error, "table JSON needs 'order' and 'table'");
  long long n = 0;
  if (!j["order"].is_number_integer())
    fail(errc::parse_error, "'order' must be an integer");
  n = j["order"].get<long long>();
  if (!j["table"].is_array() || static_cast<long long>(j["table"].size()) != n)
    fail(errc::parse_error, "'table' must be an array of " + std::to_string(n) + " rows");
  std::vector<std::vector<long long>> raw;
  for (const auto& row : j["table"]) {
    if (!row.is_array())
      fail(errc::parse_error, "table rows must be arrays");
    std::vector<long long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(errc::parse_error, "table entries must be integers");
      r.push_back(v.get<long long>());
    }
    raw.push_back(std::move(r));
  }
  return validate_table(raw);
}

/// Dispatches on the leading character: '{' means the JSON mirror.
inline cayley_table parse_table(const std::string& text) {
  return detail::looks_like_json(text) ? parse_table_json(text) : parse_table_text(text);
}

inline std::string format_table_text(const cayley_table& t) {
  std::ostringstream out;
  out << t.order() << "\n";
  for (element r = 0; r < t.order(); ++r) {
    for (element c = 0; c < t.order(); ++c) {
      if (c) out << ' ';
      out << t.at(r, c);
    }
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json table_to_json(const cayley_table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (element r = 0; r < t.order(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (element c = 0; c < t.order(); ++c) row.push_back(t.at(r, c));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"order", t.order()}, {"table", std::move(rows)}};
}

/// Grades text format: one line per element, "index p/q", each index
/// 0..n-1 exactly once. Values parse strictly; see grade::try_parse.
inline std::vector<grade> parse_grades_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<long long, grade>> entries;
  while (std::getline(in, line)) {
    auto toks = detail::tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      fail(errc::parse_error, "grade line must be 'index value': '" + line + "'");
    long long idx = detail::parse_int(toks[0], "grade index");
    entries.emplace_back(idx, grade::parse(toks[1]));
  }
  if (entries.empty()) fail(errc::parse_error, "empty grades file");
  const long long n = static_cast<long long>(entries.size());
  std::vector<grade> grades(n);
  std::vector<bool> seen(n, false);
  for (auto& [idx, g] : entries) {
    if (idx < 0 || idx >= n)
      fail(errc::parse_error, "grade index " + std::to_string(idx) + " out of range");
    if (seen[idx]) fail(errc::parse_error, "duplicate grade index " + std::to_string(idx));
    seen[idx] = true;
    grades[idx] = g;
  }
  return grades;
}

inline std::vector<grade> parse_grades_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  if (!j.is_object() || !j.contains("grades") || !j["grades"].is_array())
    fail(errc::parse_error, "grades JSON needs a 'grades' array");
  std::vector<grade> out;
  for (const auto& v : j["grades"]) {
    if (!v.is_string()) fail(errc::parse_error, "grades must be fraction strings");
    out.push_back(grade::parse(v.get<std::string>()));
  }
  if (out.empty()) fail(errc::parse_error, "empty grades array");
  return out;
}

inline std::vector<grade> parse_grades(const std::string& text) {
  return detail::looks_like_json(text) ? parse_grades_json(text) : parse_grades_text(text);
}

inline std::string format_grades_text(const std::vector<grade>& grades) {
  std::ostringstream out;
  for (std::size_t i = 0; i < grades.size(); ++i)
    out << i << ' ' << grades[i].str() << "\n";
  return out.str();
}

inline nlohmann::json grades_to_json(const std::vector<grade>& grades) {
  nlohmann::json arr = nlohmann::json::array();
  for (const grade& g : grades) arr.push_back(g.str());
  return nlohmann::json{{"grades", std::move(arr)}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace agfuzz
