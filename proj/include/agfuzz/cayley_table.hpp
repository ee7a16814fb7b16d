#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "agfuzz/error.hpp"

namespace agfuzz {

/// Element of a finite magma: a dense index in 0..n-1.
using element = int;

/// A finite magma given by its n x n composition table. Construction via
/// validate_table checks closure; no further structure is assumed.
class cayley_table {
 public:
  cayley_table() : order_(0) {}

  cayley_table(int order, std::vector<element> entries)
      : order_(order), entries_(std::move(entries)) {}

  int order() const { return order_; }

  element at(element a, element b) const {
    return entries_[static_cast<std::size_t>(a) * order_ + b];
  }

  const std::vector<element>& entries() const { return entries_; }

  friend bool operator==(const cayley_table& a, const cayley_table& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

  /// Row-major lexicographic order; used for canonical forms and sorting.
  friend bool operator<(const cayley_table& a, const cayley_table& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.entries_ < b.entries_;
  }

 private:
  int order_;
  std::vector<element> entries_;  // row-major, entries_[a*n + b] = a*b
};

/// Checks that `raw` is a square matrix whose entries are valid element
/// indices, and packs it into a cayley_table. Entries pass through bit-exact.
inline cayley_table validate_table(const std::vector<std::vector<long long>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) fail(errc::non_square, "empty table");
  std::vector<element> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (raw[r].size() != n)
      fail(errc::non_square, "row " + std::to_string(r) + " has " +
                                 std::to_string(raw[r].size()) + " entries, expected " +
                                 std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      long long v = raw[r][c];
      if (v < 0 || v >= static_cast<long long>(n))
        fail(errc::entry_out_of_range,
             "entry " + std::to_string(v) + " at (" + std::to_string(r) + "," +
                 std::to_string(c) + ") not in 0.." + std::to_string(n - 1));
      entries.push_back(static_cast<element>(v));
    }
  }
  return cayley_table(static_cast<int>(n), std::move(entries));
}

struct left_invertive_result {
  bool holds = true;
  std::array<element, 3> counterexample{};  // lexicographically first (a,b,c)
  explicit operator bool() const { return holds; }
};

/// Tests the left invertive law (a*b)*c == (c*b)*a over all n^3 triples.
inline left_invertive_result check_left_invertive(const cayley_table& t) {
  const int n = t.order();
  for (element a = 0; a < n; ++a)
    for (element b = 0; b < n; ++b)
      for (element c = 0; c < n; ++c)
        if (t.at(t.at(a, b), c) != t.at(t.at(c, b), a))
          return {false, {a, b, c}};
  return {};
}

}  // namespace agfuzz
