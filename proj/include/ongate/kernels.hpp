#pragma once

// Data-parallel inner loops of the simulator. Each kernel exists twice:
// the OpenMP version used by the library (namespace kernels) and a serial
// reference kept for testing (kernels::serial). Both call the same
// per-output-element routines and reduce in the same order, so their
// results are bit-identical; tests assert exact equality and
// tools/bench.cpp compares their throughput.

#include <span>
#include <vector>

#include "ongate/grid.hpp"

namespace ongate::kernels {

// Cubic-Lagrange value of uniformly sampled data at fractional index t;
// zero outside the sampled range. Exact at the nodes.
cplx sample_cubic(std::span<const cplx> f, double t);

// Samples of f shifted by q on its own grid: out_k = f(x_k + q).
std::vector<cplx> shift_samples(std::span<const cplx> f, const Grid& g, double q);

namespace serial {

// p(q_j) = trapezoid_x |psi(x)|^2 |phi(x + q_j)|^2, unnormalized.
std::vector<double> homodyne_density(std::span<const cplx> psi, std::span<const cplx> phi,
                                     const Grid& xg, std::span<const double> q);

// Per-outcome gate fidelity table over q:
//   F(q) = int |psi|^2 e^{-(x+q)^2/2} / sqrt(int |psi|^2 e^{-(x+q)^2}).
std::vector<double> gate_fidelity_table(std::span<const cplx> psi, const Grid& xg,
                                        std::span<const double> q);

// Airy-form Wigner function of the cubic phase state on an (x, p) lattice,
// row-major over p rows: out[ip*nx + ix] = Ai(b0 (3 gamma x^2 - p)).
std::vector<double> wigner_cubic_field(double gamma, std::span<const double> xs,
                                       std::span<const double> ps);

// Position synthesis of a Fock-basis vector: sum_n c_n psi_n(x_k).
std::vector<cplx> fock_synthesis(std::span<const cplx> coeffs, const Grid& g);

}  // namespace serial

std::vector<double> homodyne_density(std::span<const cplx> psi, std::span<const cplx> phi,
                                     const Grid& xg, std::span<const double> q);
std::vector<double> gate_fidelity_table(std::span<const cplx> psi, const Grid& xg,
                                        std::span<const double> q);
std::vector<double> wigner_cubic_field(double gamma, std::span<const double> xs,
                                       std::span<const double> ps);
std::vector<cplx> fock_synthesis(std::span<const cplx> coeffs, const Grid& g);

}  // namespace ongate::kernels
