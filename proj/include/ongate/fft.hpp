#pragma once

#include <span>
#include <vector>

#include "ongate/grid.hpp"

namespace ongate {

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_pow2(std::vector<cplx>& a, bool inverse);

// O(n^2) DFT for arbitrary sizes; fallback used by spectral_derivative on
// grids whose point count is not a power of two.
std::vector<cplx> dft(std::span<const cplx> a, bool inverse);

// df/dx by Fourier differentiation on the periodic extension of the grid
// (period n*dx). Accurate to ~1e-10 for smooth states that decay below
// roundoff at the grid edges.
std::vector<cplx> spectral_derivative(std::span<const cplx> f, double dx);

}  // namespace ongate
