#include "ongate/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include "ongate/errors.hpp"
#include "ongate/kernels.hpp"

namespace ongate {

PositionWaveFunction cubic_phase_resource(double a0, const Grid& g) {
  const double norm = std::pow(M_PI, -0.25);
  std::vector<cplx> amp(g.n_points);
  for (int k = 0; k < g.n_points; ++k) {
    const double x = g.x(k);
    const double phase = a0 * (x * x * x - 1.5 * x);
    amp[k] = norm * std::exp(-0.5 * x * x) * cplx(std::cos(phase), std::sin(phase));
  }
  return PositionWaveFunction{g, std::move(amp), true};
}

PositionWaveFunction effective_operator(const PositionWaveFunction& psi,
                                        const PositionWaveFunction& phi_r, double q) {
  if (!(psi.grid == phi_r.grid)) throw std::invalid_argument("effective_operator: grids differ");
  const double k = q / psi.grid.dx();
  PositionWaveFunction out = psi;
  out.normalized = false;
  for (int i = 0; i < psi.grid.n_points; ++i)
    out.amp[i] = psi.amp[i] * kernels::sample_cubic(phi_r.amp, i + k);
  return out;
}

HomodyneDensity homodyne_density(const PositionWaveFunction& psi,
                                 const PositionWaveFunction& phi_r, const Grid& q_grid) {
  if (!(psi.grid == phi_r.grid)) throw std::invalid_argument("homodyne_density: grids differ");
  const auto qs = q_grid.points();
  std::vector<double> p = kernels::homodyne_density(psi.amp, phi_r.amp, psi.grid, qs);
  DensitySamples raw(q_grid, std::move(p));
  const double mass = raw.mass();
  if (!(mass > 0.0)) throw guard_error("homodyne_density: zero outcome mass");
  for (auto& v : raw.values) v /= mass;
  return HomodyneDensity{std::move(raw), mass, mass < 0.999};
}

PositionWaveFunction feed_forward(const PositionWaveFunction& psi, double q, double a0) {
  PositionWaveFunction out = psi;
  for (int k = 0; k < psi.grid.n_points; ++k) {
    const double x = psi.grid.x(k);
    const double phase = 1.5 * a0 * q                                   // e^{i 3 a0 q / 2}
                         - a0 * (3.0 * x * x * q + 3.0 * x * q * q + q * q * q)
                         + 1.5 * a0 * x;                                // Z(3 a0 / 2)
    out.amp[k] *= cplx(std::cos(phase), std::sin(phase));
  }
  return out;
}

PositionWaveFunction shift_wavefunction(const PositionWaveFunction& psi, double t) {
  PositionWaveFunction out = psi;
  // psi(x - t): sample the original at index i - t/dx
  out.amp = kernels::shift_samples(psi.amp, psi.grid, -t);
  return out;
}

CircuitOutcome run_deterministic(const PositionWaveFunction& psi, double a0, double u) {
  if (!psi.normalized) throw std::invalid_argument("run_deterministic: input must be normalized");
  const PositionWaveFunction phi = cubic_phase_resource(a0, psi.grid);
  HomodyneDensity hd = homodyne_density(psi, phi, psi.grid);
  const double q = sample_from_density(hd.density, u);
  PositionWaveFunction filtered = effective_operator(psi, phi, q);
  const double raw_norm2 = filtered.norm2();
  PositionWaveFunction out = normalize(feed_forward(filtered, q, a0));
  return CircuitOutcome{q, std::move(out), raw_norm2, std::move(hd.density), true, 1.0};
}

CircuitOutcome run_postselected(const PositionWaveFunction& psi, double a0,
                                const PostSelectSpec& sel, double u,
                                bool dynamic_feed_forward) {
  if (!psi.normalized) throw std::invalid_argument("run_postselected: input must be normalized");
  if (!(sel.epsilon > 0.0)) throw std::invalid_argument("run_postselected: epsilon must be positive");
  // fixed pre-displacement X(-q0)
  PositionWaveFunction pre = sel.q0 == 0.0 ? psi : shift_wavefunction(psi, -sel.q0);
  pre.normalized = true;
  const PositionWaveFunction phi = cubic_phase_resource(a0, psi.grid);
  HomodyneDensity hd = homodyne_density(pre, phi, psi.grid);
  const double mass = window_mass(hd.density, sel.q0 - sel.epsilon, sel.q0 + sel.epsilon);
  if (!(mass > 0.0)) throw guard_error("run_postselected: zero acceptance mass in the window");
  const double q = sample_from_density(hd.density, u);
  const bool accepted = std::abs(q - sel.q0) <= sel.epsilon;
  PositionWaveFunction filtered = effective_operator(pre, phi, q);
  const double raw_norm2 = filtered.norm2();
  PositionWaveFunction corrected;
  if (dynamic_feed_forward) {
    corrected = feed_forward(filtered, q, a0);
  } else {
    // fixed post displacements Z(3 a0 / 2) X(q0)
    corrected = sel.q0 == 0.0 ? std::move(filtered) : shift_wavefunction(filtered, sel.q0);
    for (int k = 0; k < corrected.grid.n_points; ++k) {
      const double phase = 1.5 * a0 * corrected.grid.x(k);
      corrected.amp[k] *= cplx(std::cos(phase), std::sin(phase));
    }
  }
  PositionWaveFunction out = normalize(std::move(corrected));
  return CircuitOutcome{q, std::move(out), raw_norm2, std::move(hd.density), accepted, mass};
}

std::vector<cplx> squeezed_effective(double q, double r, double a0, const Grid& g) {
  if (!(r > 0.0)) throw guard_error("squeezed_effective: squeeze factor r must be positive");
  std::vector<cplx> out(g.n_points);
  for (int k = 0; k < g.n_points; ++k) {
    const double xs = g.x(k) / r;
    const double damp = xs + q;
    const double phase = a0 * xs * xs * xs;
    out[k] = std::exp(-0.5 * damp * damp) * cplx(std::cos(phase), std::sin(phase));
  }
  return out;
}

QuarticFilterPair quartic_effective(const PositionWaveFunction& psi, double q, double a0) {
  if (std::abs(a0) > 0.1)
    throw std::invalid_argument("quartic_effective: first-order filter needs |a0| <= 0.1");
  QuarticFilterPair pair{psi, psi};
  pair.raw.normalized = false;
  pair.exponentiated.normalized = false;
  for (int k = 0; k < psi.grid.n_points; ++k) {
    const double s = psi.grid.x(k) + q;
    const double s2 = s * s;
    const double poly = s2 * s2 - 3.0 * s2 + 0.75;
    const double gauss = std::exp(-0.5 * s2);
    pair.raw.amp[k] = psi.amp[k] * gauss * cplx(1.0, a0 * poly);
    // e^{-(1 + i 6 a0) s^2 / 2} e^{i a0 s^4} = e^{-s^2/2} e^{i a0 (s^4 - 3 s^2)}
    const double phase = a0 * (s2 * s2 - 3.0 * s2);
    pair.exponentiated.amp[k] = psi.amp[k] * gauss * cplx(std::cos(phase), std::sin(phase));
  }
  return pair;
}

PositionWaveFunction product_step(const PositionWaveFunction& psi, double gamma, int n_steps) {
  if (n_steps < 1) throw std::invalid_argument("product_step: need at least one step");
  PositionWaveFunction out = psi;
  out.normalized = false;
  for (int k = 0; k < psi.grid.n_points; ++k) {
    const double x = psi.grid.x(k);
    const cplx z(1.0, gamma * x * x * x / n_steps);
    cplx f(1.0, 0.0);
    for (int m = 0; m < n_steps; ++m) f *= z;
    out.amp[k] = psi.amp[k] * f;
  }
  return out;
}

}  // namespace ongate
