#pragma once

// Optical preparation of the 03 resource state: two-mode squeezed vacuum,
// the three-fold displaced photon subtraction filter
// Y = (a + b1)(a + b2)(a + b3), and a vacuum projection on the subtracted
// arm. Also the elementary conditional elements: beam-splitter photon
// subtraction, photon addition via a weak two-mode squeezer, and
// displacement via a beam splitter with a large coherent ancilla.

#include <array>
#include <string>
#include <vector>

#include "ongate/fock.hpp"
#include "ongate/grid.hpp"

namespace ongate {

// The beta triple c e^{i pi/6}, c e^{i 5pi/6}, c e^{i 3pi/2} consists of c
// times the three cube roots of i, so b1 b2 b3 = i c^3 and both the sum
// and the pairwise-product sum vanish. With that choice the |1> and |2>
// components of the filtered state cancel exactly.
struct PrepParams {
  double r = 0.55;        // two-mode squeezing, y = tanh r
  double c = 1.0;         // magnitude of the displaced-subtraction beta triple
  double a0_target = 0.0;

  double y() const;
  std::array<cplx, 3> betas() const;
};

// Coefficients of <0|(1 x Y)|TMSS> on |0..3>, before normalization:
//   b1 b2 b3, y (b1 b2 + b2 b3 + b3 b1), y^2 sqrt(2) (b1 + b2 + b3), sqrt(6) y^3.
std::array<cplx, 4> on3_closed_form(const std::array<cplx, 3>& beta, double y);

// Closed-form prepared state, normalized with the global phase chosen so
// the vacuum coefficient is real positive. With the beta-root choice the
// result is |0> - i sqrt(6) (y/c)^3 |3>. Errors when c = 0.
FockVector prepare_on3_ideal(const PrepParams& p);

struct PrepResult {
  FockVector state;             // normalized output of the untouched arm
  double success_probability;   // vacuum-projection probability on the filtered state
  std::vector<std::string> warnings;
};

// Full truncated-Fock-space pipeline: TMSS, Y on arm 2 (directly as the
// ladder polynomial, or through the displaced-annihilation chain
// D(-b1) a D(b1-b2) a D(b2-b3) a D(b3) whose global scalar is absorbed by
// the final normalization), then the vacuum projection on arm 2.
PrepResult prepare_on3_circuit(const PrepParams& p, int cutoff1, int cutoff2,
                               bool displaced_chain = false);

// Chooses c at fixed y so that sqrt(6) (y/c)^3 = sqrt(3) a0 / 2, i.e. the
// prepared |3>/|0> amplitude ratio has the magnitude of the 03 state for
// gate strength a0 (its phase is -i with this beta triple). a0 = 0 returns
// the vacuum recipe (r = 0).
PrepParams solve_prep_params(double a0_target, double y = 0.5);

struct ConditionalResult {
  FockVector state;     // normalized
  double probability;   // detection probability
};

// BS(theta) with vacuum ancilla and a single-photon count on the ancilla:
// approximates a |psi> with fidelity >= 1 - K theta^2; on the states
// exercised here the measured deficit is O(theta^4) with K <= 1 over
// theta in (0, 0.2]. Success probability ~ theta^2 <n>.
ConditionalResult photon_subtract_bs(const FockVector& psi, double theta);

// Weak two-mode squeezer with vacuum ancilla and a single-photon count:
// approximates a^dag |psi>, success probability ~ r^2 (<n> + 1).
ConditionalResult photon_add_via_s2(const FockVector& psi, double r);

struct DisplacementElementReport {
  DensityMatrix rho;   // reduced output after tracing the ancilla
  cplx alpha;          // realized displacement z sin(theta)
  double fidelity;     // against D(alpha)|psi>
  double purity;
};

// BS(theta) against a coherent ancilla |z>, ancilla traced out. Converges
// to the exact displacement D(z sin theta) as theta -> 0 at fixed
// z sin(theta). Validation-only: the preparation pipeline itself uses the
// exact truncated displacement.
DisplacementElementReport displace_by_bs(const FockVector& psi, cplx z, double theta);

}  // namespace ongate
