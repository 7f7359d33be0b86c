#pragma once

// Position-representation test and resource states, and the single-mode
// gates that act directly on wavefunctions. Vacuum convention:
// psi_0(x) = pi^{-1/4} e^{-x^2/2}, so <x^2> = 1/2.

#include <complex>
#include <string>
#include <vector>

#include "ongate/grid.hpp"

namespace ongate {

struct PositionWaveFunction {
  Grid grid;
  std::vector<cplx> amp;
  bool normalized = false;

  double norm2() const;  // trapezoid of |amp|^2
};

// Quadrature phase gate exp(i gamma x^N): order N and strength gamma.
struct GateSpec {
  int order = 3;
  double gamma = 0.0;
};

// Superposition c (|0> + a |N>), c = (1 + |a|^2)^{-1/2}.
struct ONSpec {
  int n = 3;
  cplx a{0.0, 0.0};

  double normalization() const { return 1.0 / std::sqrt(1.0 + std::norm(a)); }
};

// a = i sqrt(3) a0 / 2 makes the N=3 bracket equal 1 + i a0 (x^3 - 3x/2).
ONSpec on3_spec(double a0);
// a = i sqrt(3/2) a0 makes the N=4 bracket equal 1 + i a0 (x^4 - 3x^2 + 3/4).
ONSpec on4_spec(double a0);

PositionWaveFunction fock_wavefunction(int n, const Grid& g);

// pi^{-1/4} e^{-(x-x0)^2/2}; x-displaced vacuum (momentum displacements do
// not affect any quantity computed here). Errors if the boundary mass check
// |psi(edge)|^2 < 1e-12 fails.
PositionWaveFunction coherent_x_wavefunction(double x0, const Grid& g);

// (s/pi)^{1/4} e^{-s x^2/2}; ground Gaussian with x-variance 1/(2s).
PositionWaveFunction gaussian_wavefunction(double s, const Grid& g);

// x-squeezed vacuum: s = 10^{db/10}, i.e. the x-quadrature variance is
// reduced by the dB factor relative to vacuum.
PositionWaveFunction squeezed_vacuum_wavefunction(double db, const Grid& g);

PositionWaveFunction on_wavefunction(const ONSpec& spec, const Grid& g);

// psi(x) -> psi(x) e^{i gamma x^N}; |psi(x)|^2 is pointwise unchanged.
PositionWaveFunction apply_phase_gate(const PositionWaveFunction& psi, const GateSpec& gate);

struct DampedState {
  PositionWaveFunction state;  // flagged unnormalized
  double norm2;                // squared norm of the damped state
};

// psi(x) -> e^{-(x+q)^2/2} psi(x); the Gaussian noise factor inherited from
// the resource's vacuum envelope.
DampedState apply_damping(const PositionWaveFunction& psi, double q);

enum class Observable { X, X2, P };

// <x>, <x^2> by quadrature; <p> via Fourier differentiation. Requires a
// normalized state.
double expectation(const PositionWaveFunction& psi, Observable obs);

cplx overlap(const PositionWaveFunction& a, const PositionWaveFunction& b);
PositionWaveFunction normalize(PositionWaveFunction psi);

// W(x,p) = Ai(b0 (3 gamma x^2 - p)), b0 = (4/(3 gamma))^{1/3}, prefactor
// fixed to 1: the cubic phase state is not normalizable, so only the shape
// and the parabolic contours 3 gamma x^2 - p = const are meaningful.
struct WignerField {
  std::vector<double> x, p;
  std::vector<double> values;  // row-major over p rows: values[ip*nx + ix]
};
WignerField wigner_cubic(double gamma, const Grid& x_axis, const Grid& p_axis);

}  // namespace ongate
