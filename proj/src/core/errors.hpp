#pragma once

#include <stdexcept>
#include <string>

namespace onecount {

enum class errc : int {
  ok = 0,
  invalid_argument = 1,
  out_of_range = 2,
  not_found = 3,
  overflow = 4,
  nonpositive_subterm = 5,
  parse_error = 6,
  io_error = 7,
  format_error = 8,
  checksum_mismatch = 9,
  limit_too_large = 10,
  witness_not_found = 11,
  out_of_budget = 12,
  internal = 13,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace onecount
