#pragma once

#include <stdexcept>
#include <string>

namespace agfuzz {

/// Failure categories raised by constructions and parsers. Theorem sweeps
/// report violations as data instead of throwing; see report.hpp.
enum class errc {
  non_square,
  entry_out_of_range,
  not_left_invertive,
  no_left_identity,
  multiple_left_identities,
  missing_inverse,
  not_homomorphism,
  not_a_partition,
  not_well_defined,
  not_ag_group,
  precondition_failed,
  theorem_violation,
  parse_error,
  order_cap_exceeded,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_square: return "NonSquare";
    case errc::entry_out_of_range: return "EntryOutOfRange";
    case errc::not_left_invertive: return "NotLeftInvertive";
    case errc::no_left_identity: return "NoLeftIdentity";
    case errc::multiple_left_identities: return "MultipleLeftIdentities";
    case errc::missing_inverse: return "MissingInverse";
    case errc::not_homomorphism: return "NotHomomorphism";
    case errc::not_a_partition: return "NotAPartition";
    case errc::not_well_defined: return "NotWellDefined";
    case errc::not_ag_group: return "NotAGGroup";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::theorem_violation: return "TheoremViolation";
    case errc::parse_error: return "ParseError";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace agfuzz
