#pragma once

#include <complex>
#include <vector>

namespace hardyline {

using cplx = std::complex<double>;

/// In-place radix-2 transform, unnormalized:
///   sign = -1:  a[k] <- sum_j a[j] e^{-2*pi*i*j*k/n}
///   sign = +1:  a[j] <- sum_k a[k] e^{+2*pi*i*j*k/n}   (no 1/n factor)
/// n must be a power of two.
void fft_pow2(std::vector<cplx>& a, int sign);

/// O(n^2) reference transform with the same convention, for oracle tests.
std::vector<cplx> dft_direct(const std::vector<cplx>& a, int sign);

bool is_power_of_two(std::size_t n);

}  // namespace hardyline
