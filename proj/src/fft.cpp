#include "ongate/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace ongate {

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");
  // bit-reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

std::vector<cplx> dft(std::span<const cplx> a, bool inverse) {
  const size_t n = a.size();
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  const double sgn = inverse ? 1.0 : -1.0;
  for (size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (size_t j = 0; j < n; ++j) {
      const double ang = sgn * 2.0 * M_PI * static_cast<double>(j * k % n) / static_cast<double>(n);
      acc += a[j] * cplx(std::cos(ang), std::sin(ang));
    }
    out[k] = inverse ? acc / static_cast<double>(n) : acc;
  }
  return out;
}

std::vector<cplx> spectral_derivative(std::span<const cplx> f, double dx) {
  const size_t n = f.size();
  if (n < 2) throw std::invalid_argument("spectral_derivative: need at least 2 samples");
  std::vector<cplx> F(f.begin(), f.end());
  const bool pow2 = is_pow2(n);
  if (pow2)
    fft_pow2(F, false);
  else
    F = dft(F, false);
  const double dk = 2.0 * M_PI / (static_cast<double>(n) * dx);
  for (size_t j = 0; j < n; ++j) {
    double k;
    if (2 * j < n)
      k = dk * static_cast<double>(j);
    else if (2 * j == n)
      k = 0.0;  // Nyquist bin carries no usable derivative information
    else
      k = dk * (static_cast<double>(j) - static_cast<double>(n));
    F[j] *= cplx(0.0, k);
  }
  if (pow2) {
    fft_pow2(F, true);
    return F;
  }
  return dft(F, true);
}

}  // namespace ongate
