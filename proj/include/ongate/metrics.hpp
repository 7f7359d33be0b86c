#pragma once

// Gate-performance figures of merit. The per-outcome gate fidelity compares
// the corrected circuit output A_q V(gamma)|psi> against V(gamma)|psi>; the
// cubic phases cancel, leaving
//   F_q = int |psi|^2 A_q / sqrt(int |psi|^2 A_q^2),  A_q = e^{-(x+q)^2/2},
// which depends on |psi|^2 only. The homodyne average weights F_q by the
// outcome density p(q) induced by the physical 03 resource at the same
// strength being scored.

#include <string>
#include <utility>
#include <vector>

#include "ongate/grid.hpp"
#include "ongate/states.hpp"

namespace ongate {

// |<psi|phi>| after normalizing both; phase-insensitive.
double state_fidelity(const PositionWaveFunction& psi, const PositionWaveFunction& phi);

// sqrt(1 - F^2) for pure states.
double trace_distance(const PositionWaveFunction& psi, const PositionWaveFunction& phi);

// Per-outcome gate fidelity; psi must be normalized. Always in (0, 1).
double gate_fidelity_q(const PositionWaveFunction& psi, double q);

struct FidelityReport {
  std::vector<std::pair<double, double>> per_q;  // (q, F_q) over the q-grid
  double average = 0.0;                          // int p(q) F_q dq
  GateSpec gate;
  std::string test_state;
};

FidelityReport avg_gate_fidelity(const PositionWaveFunction& psi, double a0,
                                 const std::string& descriptor = "");

enum class SweepKind {
  GammaCoherent,     // F_gamma over gamma in [0, 0.1], coherent input
  SqueezingAtGamma,  // F_sq over 0..9.5 dB at gamma = 0.1
  FockAtGamma,       // F_n over n = 0..5 at gamma = 0.1
};

struct SweepRow {
  double parameter;
  double value;
};

struct SweepTable {
  SweepKind kind;
  double gamma;
  std::vector<SweepRow> rows;
};

// The squeezing axis measures momentum-quadrature squeezing: the input's
// x-variance grows by the dB factor, which is what widens the outcome
// density and lowers the fidelity as the squeezing increases.
SweepTable fidelity_sweep(SweepKind kind, const Grid& g, double gamma = 0.1);

}  // namespace ongate
