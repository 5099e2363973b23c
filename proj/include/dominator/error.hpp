#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dominator {

enum class ErrorCode {
  malformed_line,
  endpoint_out_of_range,
  self_loop,
  duplicate_edge,
  bad_header,
  truncated_payload,
  non_canonical_padding,
  q_not_prime,
  infeasible_degree,
  generation_retry_limit,
  empty_graph,
  vertex_out_of_range,
  degree_too_small,
  not_enough_distinct_endpoints,
  missing_spanning_subgraph,
  verification_failed,
  parameter_out_of_range,
  resample_budget_exceeded,
  coloring_not_good,
  k_out_of_range,
  not_applicable,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_line: return "malformed-line";
    case ErrorCode::endpoint_out_of_range: return "endpoint-out-of-range";
    case ErrorCode::self_loop: return "self-loop";
    case ErrorCode::duplicate_edge: return "duplicate-edge";
    case ErrorCode::bad_header: return "bad-header";
    case ErrorCode::truncated_payload: return "truncated-payload";
    case ErrorCode::non_canonical_padding: return "non-canonical-padding";
    case ErrorCode::q_not_prime: return "q-not-prime";
    case ErrorCode::infeasible_degree: return "infeasible-degree";
    case ErrorCode::generation_retry_limit: return "generation-retry-limit";
    case ErrorCode::empty_graph: return "empty-graph";
    case ErrorCode::vertex_out_of_range: return "vertex-out-of-range";
    case ErrorCode::degree_too_small: return "degree-too-small";
    case ErrorCode::not_enough_distinct_endpoints: return "not-enough-distinct-endpoints";
    case ErrorCode::missing_spanning_subgraph: return "missing-spanning-subgraph";
    case ErrorCode::verification_failed: return "verification-failed";
    case ErrorCode::parameter_out_of_range: return "parameter-out-of-range";
    case ErrorCode::resample_budget_exceeded: return "resample-budget-exceeded";
    case ErrorCode::coloring_not_good: return "coloring-not-good";
    case ErrorCode::k_out_of_range: return "k-out-of-range";
    case ErrorCode::not_applicable: return "not-applicable";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dominator
