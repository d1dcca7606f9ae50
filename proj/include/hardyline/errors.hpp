#pragma once

#include <stdexcept>
#include <string>

namespace hardyline {

/// Failure categories surfaced by the library. The CLI maps these to its
/// exit-code contract: wraparound_risk -> 3, everything else -> 2.
enum class errc {
  invalid_parameter,
  frequency_off_grid,
  grid_mismatch,
  wraparound_risk,
  bad_normalizer,
  not_in_subspace,
  interval_too_small,
  degenerate_profiles,
  empty_family,
  precondition_violation,
  parse_error,
  io_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hardyline
