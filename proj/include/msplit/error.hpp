#pragma once

#include <stdexcept>
#include <string>

namespace msplit {

enum class errc {
  not_a_topology,
  duplicate_label,
  unknown_label,
  space_mismatch,
  not_a_partition,
  empty_value,
  empty_candidate,
  search_space_too_large,
  not_hausdorff,
  hypothesis_violated,
  internal_mismatch,
  invalid_choice,
  validation_failed,
  out_of_range,
  unknown_example,
  bad_size,
  too_large,
  unknown_property,
  parse_error,
  dangling_reference,
  arithmetic_overflow,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace msplit
