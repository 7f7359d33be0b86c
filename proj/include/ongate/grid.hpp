#pragma once

// Uniform position lattice, trapezoid quadrature and inverse-CDF sampling.
// Every wavefunction and homodyne density in this library lives on a Grid.
// Natural units throughout: x dimensionless, hbar = 1.

#include <complex>
#include <span>
#include <vector>

namespace ongate {

using cplx = std::complex<double>;

// x_k = x_min + k*dx, k = 0 .. n_points-1, dx = (x_max - x_min)/(n_points - 1).
struct Grid {
  double x_min = -12.0;
  double x_max = 12.0;
  int n_points = 4096;

  static Grid uniform(double x_min, double x_max, int n_points);
  static Grid symmetric(double x_max, int n_points);

  // Symmetric grid wide enough that every state the simulator handles
  // (Fock n <= 5, <= 9.5 dB of squeezing, |x0| <= 1.5) carries less than
  // 1e-25 of probability outside it.
  static Grid default_grid() { return Grid{-12.0, 12.0, 4096}; }

  double dx() const { return (x_max - x_min) / (n_points - 1); }
  double x(int k) const { return x_min + k * dx(); }
  std::vector<double> points() const;
  bool is_symmetric() const;

  bool operator==(const Grid&) const = default;
};

// Trapezoid rule; exact for piecewise-linear integrands. Throws
// std::invalid_argument on a length mismatch.
double integrate(std::span<const double> samples, const Grid& g);
cplx integrate(std::span<const cplx> samples, const Grid& g);

// Nonnegative samples of a probability density over a grid.
struct DensitySamples {
  Grid grid;
  std::vector<double> values;

  DensitySamples(Grid g, std::vector<double> v);
  double mass() const { return integrate(values, grid); }
};

// Trapezoid integral of the density restricted to [lo, hi], with linear
// interpolation at the window edges. The window is clipped to the grid.
double window_mass(const DensitySamples& d, double lo, double hi);

// Inverse-CDF draw with linear interpolation inside bins; deterministic in
// u in [0, 1). Throws guard_error when the density has zero total mass.
double sample_from_density(const DensitySamples& d, double u);

}  // namespace ongate
