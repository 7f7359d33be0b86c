#include "ongate/states.hpp"

#include <cmath>
#include <stdexcept>

#include "ongate/errors.hpp"
#include "ongate/fft.hpp"
#include "ongate/kernels.hpp"

namespace ongate {

namespace {

constexpr double kBoundaryMassLimit = 1e-12;

void check_boundary(const PositionWaveFunction& psi, const char* who, double expected_norm2) {
  const double edge = std::max(std::norm(psi.amp.front()), std::norm(psi.amp.back()));
  if (edge >= kBoundaryMassLimit || std::abs(psi.norm2() - expected_norm2) > 1e-6)
    throw guard_error(std::string(who) + ": state reaches or leaves the grid; enlarge x_max");
}

}  // namespace

double PositionWaveFunction::norm2() const {
  std::vector<double> d(amp.size());
  for (size_t i = 0; i < amp.size(); ++i) d[i] = std::norm(amp[i]);
  return integrate(d, grid);
}

ONSpec on3_spec(double a0) { return ONSpec{3, cplx(0.0, std::sqrt(3.0) * a0 / 2.0)}; }
ONSpec on4_spec(double a0) { return ONSpec{4, cplx(0.0, std::sqrt(1.5) * a0)}; }

PositionWaveFunction fock_wavefunction(int n, const Grid& g) {
  if (n < 0) throw std::invalid_argument("fock_wavefunction: n must be nonnegative");
  std::vector<cplx> basis(n + 1, cplx(0.0, 0.0));
  basis[n] = 1.0;
  return PositionWaveFunction{g, kernels::fock_synthesis(basis, g), true};
}

PositionWaveFunction coherent_x_wavefunction(double x0, const Grid& g) {
  const double norm = std::pow(M_PI, -0.25);
  std::vector<cplx> amp(g.n_points);
  for (int k = 0; k < g.n_points; ++k) {
    const double d = g.x(k) - x0;
    amp[k] = norm * std::exp(-0.5 * d * d);
  }
  PositionWaveFunction psi{g, std::move(amp), true};
  check_boundary(psi, "coherent_x_wavefunction", 1.0);
  return psi;
}

PositionWaveFunction gaussian_wavefunction(double s, const Grid& g) {
  if (!(s > 0.0)) throw std::invalid_argument("gaussian_wavefunction: scale must be positive");
  const double norm = std::pow(s / M_PI, 0.25);
  std::vector<cplx> amp(g.n_points);
  for (int k = 0; k < g.n_points; ++k) {
    const double x = g.x(k);
    amp[k] = norm * std::exp(-0.5 * s * x * x);
  }
  return PositionWaveFunction{g, std::move(amp), true};
}

PositionWaveFunction squeezed_vacuum_wavefunction(double db, const Grid& g) {
  if (db < 0.0) throw std::invalid_argument("squeezed_vacuum_wavefunction: dB must be nonnegative");
  return gaussian_wavefunction(std::pow(10.0, db / 10.0), g);
}

PositionWaveFunction on_wavefunction(const ONSpec& spec, const Grid& g) {
  if (spec.n < 1) throw std::invalid_argument("on_wavefunction: N must be >= 1");
  std::vector<cplx> basis(spec.n + 1, cplx(0.0, 0.0));
  const double c = spec.normalization();
  basis[0] = c;
  basis[spec.n] = c * spec.a;
  return PositionWaveFunction{g, kernels::fock_synthesis(basis, g), true};
}

PositionWaveFunction apply_phase_gate(const PositionWaveFunction& psi, const GateSpec& gate) {
  if (gate.order < 1) throw std::invalid_argument("apply_phase_gate: order must be >= 1");
  PositionWaveFunction out = psi;
  for (int k = 0; k < out.grid.n_points; ++k) {
    const double x = out.grid.x(k);
    double xn = 1.0;
    for (int m = 0; m < gate.order; ++m) xn *= x;
    out.amp[k] *= cplx(std::cos(gate.gamma * xn), std::sin(gate.gamma * xn));
  }
  return out;
}

DampedState apply_damping(const PositionWaveFunction& psi, double q) {
  PositionWaveFunction out = psi;
  out.normalized = false;
  for (int k = 0; k < out.grid.n_points; ++k) {
    const double s = out.grid.x(k) + q;
    out.amp[k] *= std::exp(-0.5 * s * s);
  }
  const double n2 = out.norm2();
  return DampedState{std::move(out), n2};
}

double expectation(const PositionWaveFunction& psi, Observable obs) {
  if (!psi.normalized) throw std::invalid_argument("expectation: state must be normalized");
  const int n = psi.grid.n_points;
  if (obs == Observable::P) {
    const auto dpsi = spectral_derivative(psi.amp, psi.grid.dx());
    std::vector<cplx> f(n);
    for (int k = 0; k < n; ++k) f[k] = std::conj(psi.amp[k]) * cplx(0.0, -1.0) * dpsi[k];
    return integrate(f, psi.grid).real();
  }
  std::vector<double> f(n);
  for (int k = 0; k < n; ++k) {
    const double x = psi.grid.x(k);
    const double w = (obs == Observable::X) ? x : x * x;
    f[k] = w * std::norm(psi.amp[k]);
  }
  return integrate(f, psi.grid);
}

cplx overlap(const PositionWaveFunction& a, const PositionWaveFunction& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("overlap: grids differ");
  std::vector<cplx> f(a.amp.size());
  for (size_t k = 0; k < f.size(); ++k) f[k] = std::conj(a.amp[k]) * b.amp[k];
  return integrate(f, a.grid);
}

PositionWaveFunction normalize(PositionWaveFunction psi) {
  const double n2 = psi.norm2();
  if (!(n2 > 0.0)) throw guard_error("normalize: zero-norm state");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : psi.amp) a *= inv;
  psi.normalized = true;
  return psi;
}

WignerField wigner_cubic(double gamma, const Grid& x_axis, const Grid& p_axis) {
  if (gamma == 0.0) throw guard_error("wigner_cubic: gamma must be nonzero");
  WignerField f;
  f.x = x_axis.points();
  f.p = p_axis.points();
  f.values = kernels::wigner_cubic_field(gamma, f.x, f.p);
  return f;
}

}  // namespace ongate
