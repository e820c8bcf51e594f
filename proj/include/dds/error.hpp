#pragma once

#include <stdexcept>
#include <string>

namespace dds {

// Error taxonomy shared across the library.  CLI maps these to exit codes:
// parse/usage-class errors -> 2, theorem/check failures -> 1.
enum class Err {
  invalid_state,
  invalid_index,
  invalid_rank,
  dimension_mismatch,
  unsupported_space,
  big_count,
  oracle_cap,
  precondition,
  feasibility,
  contract_inapplicable,
  theorem_violation,
  construction_failure,
  infeasible,
  input_range,
  not_applicable,
  parse,
  duplicate_state,
  incomplete_map,
  range,
  invalid_permutation,
  invalid_attractor,
  usage,
};

class DdsError : public std::runtime_error {
 public:
  DdsError(Err kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  Err kind() const { return kind_; }

 private:
  Err kind_;
};

const char* err_name(Err kind);

}  // namespace dds
