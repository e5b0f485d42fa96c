#pragma once

#include <stdexcept>
#include <string>

namespace tressec {

enum class errc {
  bad_involution,
  not_a_poset,
  involution_not_order_reversing,
  not_essential,
  not_regular,
  not_a_tree_set,
  not_an_order_tree,
  not_nested,
  too_large,
  unextendable,
  unknown_node,
  unknown_element,
  not_unique,
  not_found,
  precondition_violated,
  mismatch,
  violation_found,
  invalid_family,
  premise_failed_first,
  premise_failed_second,
  premise_failed_uniqueness,
  missing_directed_label,
  not_injective_embedding,
  not_over_family,
  degenerate_element,
  invalid_decomposition,
  not_separations_of_graph,
  unsupported_conversion,
  parse_error,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

inline void require(bool condition, errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace tressec
