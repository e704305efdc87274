#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nestlab {

/// Validation failures raised by the library. Every variant maps to exit code 1 in the CLI.
enum class Errc {
  dimension_mismatch,
  containment_violation,
  incomparable_pair,
  not_an_element,
  zero_subspace,
  zero_vector,
  not_a_bimodule,
  not_in_nest,
  not_a_member,
  not_monotone,
  missing_endpoint,
  missing_annotation,
  invalid_annotation,
  limit_with_finite_gap,
  adjacency_mismatch,
  inconsistent_left_limit,
  join_not_represented,
  invalid_pair,
  p_property_violation,
  p_infinity_violation,
  not_essential,
  pair_inadmissible,
  nonzero_at_zero,
  unknown_command,
  unknown_suite,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::containment_violation: return "containment-violation";
    case Errc::incomparable_pair: return "incomparable-pair";
    case Errc::not_an_element: return "not-an-element";
    case Errc::zero_subspace: return "zero-subspace";
    case Errc::zero_vector: return "zero-vector";
    case Errc::not_a_bimodule: return "not-a-bimodule";
    case Errc::not_in_nest: return "not-in-nest";
    case Errc::not_a_member: return "not-a-member";
    case Errc::not_monotone: return "not-monotone";
    case Errc::missing_endpoint: return "missing-endpoint";
    case Errc::missing_annotation: return "missing-annotation";
    case Errc::invalid_annotation: return "invalid-annotation";
    case Errc::limit_with_finite_gap: return "limit-with-finite-gap";
    case Errc::adjacency_mismatch: return "adjacency-mismatch";
    case Errc::inconsistent_left_limit: return "inconsistent-left-limit";
    case Errc::join_not_represented: return "join-not-represented";
    case Errc::invalid_pair: return "invalid-pair";
    case Errc::p_property_violation: return "p-property-violation";
    case Errc::p_infinity_violation: return "p-infinity-violation";
    case Errc::not_essential: return "not-essential";
    case Errc::pair_inadmissible: return "pair-inadmissible";
    case Errc::nonzero_at_zero: return "nonzero-at-zero";
    case Errc::unknown_command: return "unknown-command";
    case Errc::unknown_suite: return "unknown-suite";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed input text (bad rational literal, wrong document shape). Exit code 2 in the CLI.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nestlab
