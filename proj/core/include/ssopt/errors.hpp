#pragma once

#include <stdexcept>
#include <string>

namespace ssopt {

enum class errc {
  non_square,
  non_positive_entry,
  broken_reciprocity,
  bad_diagonal,
  no_convergence,
  numeric_overflow,
  zero_weight,
  dimension_mismatch,
  insufficient_capacity,
  degenerate_problem,
  non_positive_temperature,
  infeasible_initial,
  too_large,
  unknown_mode,
  non_positive_response,
  parse_error,
  bad_input,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ssopt
