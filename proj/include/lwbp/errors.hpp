#pragma once

#include <stdexcept>
#include <string>

namespace lwbp {

/// Malformed text input (passport, permutation, label or rational token).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValidationKind {
  weight_sum,           // passport weights do not sum to zero
  zero_weight,
  duplicate_label,
  single_color,         // all weights of one sign
  not_full,             // multiplicity > 1 where a full passport is required
  unknown_label,
  not_a_permutation,
  mismatched_passport,
  bad_vertex,
  nonpositive_edge_weight,
  parallel_edge,
  odd_cycle,
  monochromatic_edge,
  cycle,
  rotation_mismatch,
  weight_mismatch,
  disconnected,
  bad_marks,
  not_a_tree_permutation,
  too_large,
  schema,
};

const char* to_string(ValidationKind kind) noexcept;

/// Input that parsed but violates a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ValidationKind kind() const noexcept { return kind_; }

 private:
  ValidationKind kind_;
};

/// Exhaustive enumeration requested above the configured vertex limit.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lwbp
