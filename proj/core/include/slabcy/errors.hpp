#pragma once

#include <stdexcept>
#include <string>

namespace slabcy {

enum class errc {
  non_unimodular_cell,
  singular_base,
  inconsistent_triangulation,
  relation_not_integral,
  no_grading_found,
  grading_mismatch,
  bad_constant_term,
  exponent_beyond_order,
  substitution_not_grading_compatible,
  internal_laurent_leak,
  round_trip_failure,
  parse_error,
  validation_error,
  index_out_of_range,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace slabcy
