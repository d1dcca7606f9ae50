#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardyline/grid.hpp"

namespace hardyline {

/// Symbolic recipe for a test function. Frequencies are given in physical
/// units (radians per unit length) and must be integer multiples of dxi once
/// a grid is attached; sigma_bins/center_bins variants fix the multiple
/// directly and are grid-portable.
struct FunctionDescriptor {
  enum class Kind {
    pure_tone,      // e^{i sigma x}
    gaussian_space, // e^{-(x-center)^2 / (2 width^2)}
    gaussian_band,  // spectral Gaussian e^{-(xi-center)^2/(2 bandwidth^2)}
    cauchy_sq,      // 1/(x+i)^2
    haar_profile,   // +1 on the left half of [a,b), -1 on the right half
    tent_profile,   // 1 - |2(x-mid)/(b-a)| on [a,b)
    random_band,    // seeded complex Gaussians on bins [lo,hi], smooth envelope
    combination,    // sum of weights[i] * terms[i]
  };

  Kind kind = Kind::cauchy_sq;

  // pure_tone: sigma (physical) or sigma_bins (grid multiple; used if >= set)
  double sigma = 0.0;
  bool sigma_in_bins = false;

  // gaussian_space / gaussian_band
  double center = 0.0;
  double width = 1.0;

  // haar_profile / tent_profile
  double a = 0.0;
  double b = 1.0;

  // random_band
  long long lo = 1;
  long long hi = 8;
  std::uint64_t seed = 0;

  // combination
  std::vector<FunctionDescriptor> terms;
  std::vector<cplx> weights;
};

const char* kind_name(FunctionDescriptor::Kind k);
FunctionDescriptor::Kind kind_from_name(const std::string& s);

/// Samples the described function on g. random_band is a pure function of
/// (bins, seed): identical output for identical arguments.
SampledFunction synthesize(const FunctionDescriptor& d, const GridSpec& g);

/// Frequency as an exact bin multiple; throws frequency-off-grid otherwise.
long long frequency_to_bin(double sigma, const GridSpec& g);

FunctionDescriptor tone_descriptor_bins(long long bin);

}  // namespace hardyline
