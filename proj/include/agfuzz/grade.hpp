#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "agfuzz/error.hpp"

namespace agfuzz {

/// Exact membership degree: a nonnegative rational in [0,1], stored reduced.
///
/// All lattice operations (==, <, meet, join) are exact; no floating point
/// is involved anywhere. Equal grades always have identical (num, den)
/// representations, so equality is structural.
class grade {
 public:
  constexpr grade() : num_(0), den_(1) {}

  grade(std::int64_t num, std::int64_t den) {
    if (den <= 0) fail(errc::parse_error, "grade denominator must be positive");
    if (num < 0) fail(errc::parse_error, "grade must be nonnegative");
    if (num > den) fail(errc::parse_error, "grade must not exceed 1");
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  static grade zero() { return grade(); }
  static grade one() { return grade(1, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const grade& a, const grade& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const grade& a, const grade& b) {
    // Cross-multiplication in 128 bits; values fit comfortably.
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Lattice meet (minimum); the only t-norm in scope.
  friend grade meet(const grade& a, const grade& b) { return a < b ? a : b; }

  /// Lattice join (maximum).
  friend grade join(const grade& a, const grade& b) { return a < b ? b : a; }

  /// Renders "0", "1" or a reduced "p/q".
  std::string str() const {
    if (num_ == 0) return "0";
    if (num_ == den_) return "1";
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Strict parse of "0", "1" or "p/q" with 0 <= p/q <= 1. Whitespace,
  /// signs, decimals and trailing garbage are all rejected.
  static std::optional<grade> try_parse(std::string_view text) {
    auto digits = [](std::string_view s) -> std::optional<std::int64_t> {
      if (s.empty() || s.size() > 18) return std::nullopt;
      std::int64_t v = 0;
      for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
      }
      return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      auto v = digits(text);
      if (!v || *v > 1) return std::nullopt;
      return grade(*v, 1);
    }
    auto p = digits(text.substr(0, slash));
    auto q = digits(text.substr(slash + 1));
    if (!p || !q || *q == 0 || *p > *q) return std::nullopt;
    return grade(*p, *q);
  }

  static grade parse(std::string_view text) {
    auto g = try_parse(text);
    if (!g) fail(errc::parse_error, "bad grade '" + std::string(text) + "'");
    return *g;
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace agfuzz
