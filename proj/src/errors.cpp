#include "hardyline/errors.hpp"

namespace hardyline {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::frequency_off_grid: return "frequency-off-grid";
    case errc::grid_mismatch: return "grid-mismatch";
    case errc::wraparound_risk: return "wraparound-risk";
    case errc::bad_normalizer: return "bad-normalizer";
    case errc::not_in_subspace: return "not-in-subspace";
    case errc::interval_too_small: return "interval-too-small";
    case errc::degenerate_profiles: return "degenerate-profiles";
    case errc::empty_family: return "empty-family";
    case errc::precondition_violation: return "precondition-violation";
    case errc::parse_error: return "parse-error";
    case errc::io_error: return "io-error";
  }
  return "unknown-error";
}

}  // namespace hardyline
