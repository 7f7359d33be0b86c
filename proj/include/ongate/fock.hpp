#pragma once

// Truncated photon-number-basis linear algebra for one and two modes.
// Single-mode unitaries are dense matrix exponentials of the truncated
// generator (scaling and squaring); two-mode unitaries apply the
// exponential to the state vector directly, scaling-and-squaring the
// action, so doubled cutoffs stay cheap. Truncated generators remain
// anti-Hermitian, so every evolution is unitary up to roundoff.

#include <span>
#include <utility>
#include <vector>

#include "ongate/expm.hpp"
#include "ongate/grid.hpp"
#include "ongate/states.hpp"

namespace ongate {

// Tail-mass guard: the top two Fock levels must each stay below this after
// an evolution, otherwise the state carries a cutoff warning.
inline constexpr double kTailGuard = 1e-10;

struct FockVector {
  int cutoff = 0;              // highest retained Fock level n_max
  std::vector<cplx> c;         // c[0..cutoff]
  bool normalized = false;
  bool tail_warning = false;   // set when an evolution breached the guard

  double norm2() const;
  double tail_mass() const;    // |c_{nmax}|^2 + |c_{nmax-1}|^2
};

struct TwoModeFockVector {
  int cutoff1 = 0, cutoff2 = 0;
  std::vector<cplx> c;         // row-major: c[m*(cutoff2+1) + n]
  bool normalized = false;
  bool tail_warning = false;

  int dim2() const { return cutoff2 + 1; }
  cplx& at(int m, int n) { return c[size_t(m) * dim2() + n]; }
  const cplx& at(int m, int n) const { return c[size_t(m) * dim2() + n]; }
  double norm2() const;
  double tail_mass() const;    // worst top-two-level mass over either mode
};

FockVector fock_basis(int n, int cutoff);
FockVector coherent_fock(cplx alpha, int cutoff);

// (a v)_n = sqrt(n+1) v_{n+1}; unnormalized, zero vector on vacuum.
FockVector annihilate(const FockVector& v);
// (a^dag v)_n = sqrt(n) v_{n-1}; output cutoff grows by one.
FockVector create(const FockVector& v);

// D(beta) = exp(beta a^dag - beta* a), truncated.
FockVector displace(const FockVector& v, cplx beta);
// S(r) = exp(r/2 (a^dag^2 - a^2)), truncated.
FockVector single_mode_squeeze(const FockVector& v, double r);

TwoModeFockVector tensor(const FockVector& a, const FockVector& b);

// BS(theta) = exp(theta (a^dag b - a b^dag)); photon-number conserving.
TwoModeFockVector beamsplitter(const TwoModeFockVector& v, double theta);
// S2(r) = exp(r (a^dag b^dag - a b)).
TwoModeFockVector two_mode_squeeze(const TwoModeFockVector& v, double r);

// sech r * sum_n (tanh r)^n |n,n>, exact coefficients.
TwoModeFockVector tmss(double r, int cutoff1, int cutoff2);

// Dense single-mode operator applied to one mode of a two-mode state.
TwoModeFockVector apply_mode1(const CMatrix& m, const TwoModeFockVector& v);
TwoModeFockVector apply_mode2(const CMatrix& m, const TwoModeFockVector& v);

// Contract <outcome| on the chosen mode (1 or 2). Returns the unnormalized
// residue on the other mode and its squared norm (the outcome probability
// when the input is normalized).
std::pair<FockVector, double> postselect(const TwoModeFockVector& v, int mode, int outcome);

// Generator of D(beta) on the truncated space.
CMatrix displacement_generator(cplx beta, int cutoff);
CMatrix displacement_matrix(cplx beta, int cutoff);

// |<a|b>| / (||a|| ||b||); vectors of different cutoffs are zero-padded.
double fock_fidelity(const FockVector& a, const FockVector& b);

// Position synthesis sum_n c_n psi_n(x); errors when the boundary mass
// check fails.
PositionWaveFunction fock_to_position(const FockVector& v, const Grid& g);

// Minimal density-operator utility for validating the beam-splitter
// displacement element, which traces out the ancilla mode.
struct DensityMatrix {
  int n = 0;
  std::vector<cplx> a;  // row-major n*n, Hermitian

  cplx at(int i, int j) const { return a[size_t(i) * n + j]; }
  double purity() const;                          // Tr rho^2
  double fidelity_pure(const FockVector& t) const;  // sqrt(<t|rho|t>)
};

DensityMatrix partial_trace_mode2(const TwoModeFockVector& v);

}  // namespace ongate
