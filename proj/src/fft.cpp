#include "hardyline/fft.hpp"

#include <cmath>
#include <numbers>

namespace hardyline {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // full-precision twiddle table: tw[m] = e^{sign*2*pi*i*m/n}
  std::vector<cplx> tw(n / 2);
  for (std::size_t m = 0; m < n / 2; ++m) {
    const double ang = sign * 2.0 * std::numbers::pi * double(m) / double(n);
    tw[m] = cplx(std::cos(ang), std::sin(ang));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        cplx u = a[i + j];
        cplx v = a[i + j + len / 2] * tw[j * stride];
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

std::vector<cplx> dft_direct(const std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double ang =
          sign * 2.0 * std::numbers::pi * double((j * k) % n) / double(n);
      acc += a[j] * cplx(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace hardyline
