#include "ongate/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "ongate/circuit.hpp"
#include "ongate/errors.hpp"
#include "ongate/kernels.hpp"

namespace ongate {

double state_fidelity(const PositionWaveFunction& psi, const PositionWaveFunction& phi) {
  const double np = psi.norm2(), nq = phi.norm2();
  if (!(np > 0.0) || !(nq > 0.0)) throw guard_error("state_fidelity: zero-norm state");
  return std::abs(overlap(psi, phi)) / std::sqrt(np * nq);
}

double trace_distance(const PositionWaveFunction& psi, const PositionWaveFunction& phi) {
  const double f = state_fidelity(psi, phi);
  return std::sqrt(std::max(0.0, 1.0 - f * f));
}

double gate_fidelity_q(const PositionWaveFunction& psi, double q) {
  if (!psi.normalized) throw std::invalid_argument("gate_fidelity_q: state must be normalized");
  const double qs[1] = {q};
  const auto f = kernels::serial::gate_fidelity_table(psi.amp, psi.grid, qs);
  if (!std::isfinite(f[0]) || !(f[0] > 0.0))
    throw guard_error("gate_fidelity_q: vanishing damping denominator");
  return f[0];
}

FidelityReport avg_gate_fidelity(const PositionWaveFunction& psi, double a0,
                                 const std::string& descriptor) {
  if (!psi.normalized) throw std::invalid_argument("avg_gate_fidelity: state must be normalized");
  const Grid& qg = psi.grid;
  const PositionWaveFunction resource = on_wavefunction(on3_spec(a0), psi.grid);
  const HomodyneDensity hd = homodyne_density(psi, resource, qg);
  const auto qs = qg.points();
  const auto fq = kernels::gate_fidelity_table(psi.amp, psi.grid, qs);
  std::vector<double> integrand(qs.size());
  for (size_t k = 0; k < qs.size(); ++k) integrand[k] = hd.density.values[k] * fq[k];
  FidelityReport rep;
  rep.per_q.reserve(qs.size());
  for (size_t k = 0; k < qs.size(); ++k) rep.per_q.emplace_back(qs[k], fq[k]);
  rep.average = integrate(integrand, qg);
  rep.gate = GateSpec{3, a0};
  rep.test_state = descriptor;
  return rep;
}

SweepTable fidelity_sweep(SweepKind kind, const Grid& g, double gamma) {
  SweepTable table{kind, gamma, {}};
  switch (kind) {
    case SweepKind::GammaCoherent: {
      const PositionWaveFunction psi = coherent_x_wavefunction(0.0, g);
      for (int k = 0; k <= 20; ++k) {
        const double gm = 0.005 * k;
        table.rows.push_back({gm, avg_gate_fidelity(psi, gm).average});
      }
      break;
    }
    case SweepKind::SqueezingAtGamma: {
      for (int k = 0; k <= 19; ++k) {
        const double db = 0.5 * k;
        const PositionWaveFunction psi = gaussian_wavefunction(std::pow(10.0, -db / 10.0), g);
        table.rows.push_back({db, avg_gate_fidelity(psi, gamma).average});
      }
      break;
    }
    case SweepKind::FockAtGamma: {
      for (int n = 0; n <= 5; ++n) {
        const PositionWaveFunction psi = fock_wavefunction(n, g);
        table.rows.push_back({static_cast<double>(n), avg_gate_fidelity(psi, gamma).average});
      }
      break;
    }
  }
  return table;
}

}  // namespace ongate
