#pragma once

// The measurement-induced gate engine. Input and resource modes are
// coupled by the inverse controlled-X gate and the resource mode is read
// out by x-homodyne; conditioned on outcome q the input is filtered by
// phi_r(x + q), with probability density p(q) = int |psi|^2 |phi_r(x+q)|^2.
// A Gaussian feed-forward then turns the filter into the target phase gate
// times the damping factor A_q = e^{-(x+q)^2/2}.

#include <vector>

#include "ongate/grid.hpp"
#include "ongate/states.hpp"

namespace ongate {

// Idealized cubic teleportation resource for strength a0: the 03-state
// bracket promoted to a unitary phase,
//   phi(x) = pi^{-1/4} e^{-x^2/2} e^{i a0 (x^3 - 3x/2)}.
// With this resource the feed-forward correction reproduces
// A_q e^{i a0 x^3} exactly. The raw first-order resource (the physical
// superposition, bracket 1 + i a0 (x^3 - 3x/2)) is on_wavefunction(on3_spec(a0));
// it is never silently replaced by this exponential form.
PositionWaveFunction cubic_phase_resource(double a0, const Grid& g);

// Conditional filter T1(q): psi(x) -> psi(x) phi_r(x + q), the shifted
// resource obtained by cubic interpolation of its samples. Unnormalized.
PositionWaveFunction effective_operator(const PositionWaveFunction& psi,
                                        const PositionWaveFunction& phi_r, double q);

struct HomodyneDensity {
  DensitySamples density;  // renormalized to unit integral over the q-grid
  double raw_mass;         // on-grid mass before renormalization
  bool narrow_warning;     // raw_mass < 0.999: q-grid too narrow
};

HomodyneDensity homodyne_density(const PositionWaveFunction& psi,
                                 const PositionWaveFunction& phi_r, const Grid& q_grid);

// Outcome-dependent Gaussian correction
//   F_G = e^{i 3 a0 q / 2} e^{-i a0 (3 x^2 q + 3 x q^2 + q^3)} Z(3 a0 / 2),
// a quadratic phase plus displacements.
PositionWaveFunction feed_forward(const PositionWaveFunction& psi, double q, double a0);

// X(t): psi(x) -> psi(x - t) by cubic-interpolated translation.
PositionWaveFunction shift_wavefunction(const PositionWaveFunction& psi, double t);

struct CircuitOutcome {
  double q = 0.0;                  // homodyne outcome
  PositionWaveFunction output;     // normalized
  double raw_norm2 = 0.0;          // squared norm of the filtered state; equals p(q)
  DensitySamples density;          // p(q) over the q-grid
  bool accepted = true;            // post-selected mode only
  double acceptance_mass = 1.0;    // integral of p over the accepted window
};

// One run with dynamic feed-forward: builds the cubic resource for a0,
// draws q from p(q) via the inverse CDF at u, filters, corrects,
// normalizes. Output equals the normalized A_q e^{i a0 x^3} psi.
CircuitOutcome run_deterministic(const PositionWaveFunction& psi, double a0, double u);

// Accepted homodyne window q0 +- epsilon.
struct PostSelectSpec {
  double q0 = 0.0;
  double epsilon = 1e-2;
};

// Post-selected variant: fixed pre-displacement X(-q0) and fixed post
// displacements Z(3 a0/2) X(q0) replace the dynamic feed-forward; a run is
// accepted iff |q - q0| <= epsilon. At q = q0 the output equals the
// normalized A_0 e^{i a0 x^3} psi. With dynamic_feed_forward the fixed
// corrections are swapped back for F_G; at q0 = 0 with a wide window this
// reproduces run_deterministic run for run.
CircuitOutcome run_postselected(const PositionWaveFunction& psi, double a0,
                                const PostSelectSpec& sel, double u,
                                bool dynamic_feed_forward = false);

// Diagonal kernel of the squeezed effective operation
//   exp[-(x/r + q)^2 / 2 + i a0 (x/r)^3],
// the filter seen by inputs prepared as S(r)|psi> with S(r)^dag x S(r) = x/r.
// r = 1 reproduces the A_q e^{i a0 x^3} samples.
std::vector<cplx> squeezed_effective(double q, double r, double a0, const Grid& g);

struct QuarticFilterPair {
  PositionWaveFunction raw;            // e^{-s^2/2} [1 + i a0 (s^4 - 3 s^2 + 3/4)] psi, s = x+q
  PositionWaveFunction exponentiated;  // e^{-beta s^2/2} e^{i a0 s^4} psi, beta = 1 + i 6 a0,
                                       // constant phase e^{i 3 a0/4} dropped
};

// First-order quartic filter from the 04 resource and its resummed
// unitary-like form; both unnormalized. Valid for |a0| <= 0.1.
QuarticFilterPair quartic_effective(const PositionWaveFunction& psi, double q, double a0);

// (1 + i gamma x^3 / n)^n psi: the product expansion of the cubic gate.
// n = 2 differs from the second-order Taylor expansion by exactly
// (gamma^2 x^6 / 4) psi.
PositionWaveFunction product_step(const PositionWaveFunction& psi, double gamma, int n_steps);

}  // namespace ongate
