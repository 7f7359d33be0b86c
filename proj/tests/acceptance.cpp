// Acceptance suite: every release-gating check runs at its pinned
// tolerance and prints one PASS/FAIL line. Exit status is the number of
// failed criteria. Default grid (|x| <= 12, 4096 points) and Fock cutoff
// 40 throughout.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ongate/circuit.hpp"
#include "ongate/fock.hpp"
#include "ongate/kernels.hpp"
#include "ongate/metrics.hpp"
#include "ongate/prep.hpp"
#include "ongate/symplectic.hpp"

using namespace ongate;

namespace {

const Grid g = Grid::default_grid();

double l2_distance(const PositionWaveFunction& a, const PositionWaveFunction& b) {
  std::vector<double> d(a.amp.size());
  for (size_t k = 0; k < d.size(); ++k) d[k] = std::norm(a.amp[k] - b.amp[k]);
  return std::sqrt(integrate(d, a.grid));
}

PositionWaveFunction damped_cubic(const PositionWaveFunction& psi, double a0, double q) {
  return normalize(apply_damping(apply_phase_gate(psi, GateSpec{3, a0}), q).state);
}

// the standard density-sweep inputs: Fock 0..5, momentum-
// squeezed vacuum 0..9.5 dB, x-displaced vacuum -1..1.5
std::vector<std::pair<std::string, PositionWaveFunction>> sweep_states() {
  std::vector<std::pair<std::string, PositionWaveFunction>> out;
  for (int n = 0; n <= 5; ++n)
    out.emplace_back("fock:" + std::to_string(n), fock_wavefunction(n, g));
  for (double db : {0.0, 4.5, 9.5}) {
    std::ostringstream name;
    name << "squeezed:" << db;
    out.emplace_back(name.str(), gaussian_wavefunction(std::pow(10.0, -db / 10.0), g));
  }
  for (double x0 : {-1.0, 0.0, 1.5}) {
    std::ostringstream name;
    name << "coherent:" << x0;
    out.emplace_back(name.str(), coherent_x_wavefunction(x0, g));
  }
  return out;
}

double density_variance(const DensitySamples& d) {
  std::vector<double> m1(d.values.size()), m2(d.values.size());
  for (size_t k = 0; k < d.values.size(); ++k) {
    const double q = d.grid.x(static_cast<int>(k));
    m1[k] = q * d.values[k];
    m2[k] = q * q * d.values[k];
  }
  const double mean = integrate(m1, d.grid);
  return integrate(m2, d.grid) - mean * mean;
}

// u driving the inverse CDF onto q exactly
double u_at(const DensitySamples& d, double q) {
  std::vector<double> cum(d.values.size(), 0.0);
  const double h = d.grid.dx();
  for (size_t k = 1; k < d.values.size(); ++k)
    cum[k] = cum[k - 1] + 0.5 * (d.values[k - 1] + d.values[k]) * h;
  int bin = 0;
  while (d.grid.x(bin + 1) < q) ++bin;
  const double frac = (q - d.grid.x(bin)) / h;
  return (cum[bin] + frac * (cum[bin + 1] - cum[bin])) / cum.back();
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome c01_closed_form_fidelity() {
  const double pref = std::sqrt(2.0 * std::sqrt(2.0) / 3.0);
  double worst = 0.0;
  for (double x0 : {-1.0, 0.0, 1.5}) {
    const auto psi = coherent_x_wavefunction(x0, g);
    for (int k = 0; k <= 60; ++k) {
      const double q = -3.0 + 0.1 * k;
      const double expected = pref * std::exp(-(q + x0) * (q + x0) / 12.0);
      worst = std::max(worst, std::abs(gate_fidelity_q(psi, q) - expected));
    }
  }
  std::ostringstream s;
  s << "max |F_q - closed form| = " << worst << " (tol 1e-6)";
  return {worst <= 1e-6, s.str()};
}

Outcome c02_displacement_invariance() {
  double worst = 0.0;
  for (double gamma : {0.0, 0.05, 0.1}) {
    double lo = 2.0, hi = 0.0;
    for (double x0 : {-1.0, 0.0, 1.5}) {
      const double f = avg_gate_fidelity(coherent_x_wavefunction(x0, g), gamma).average;
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
    worst = std::max(worst, hi - lo);
  }
  std::ostringstream s;
  s << "max spread over x0 = " << worst << " (tol 1e-4)";
  return {worst <= 1e-4, s.str()};
}

Outcome c03_fidelity_sweeps() {
  bool ok = true;
  std::ostringstream s;
  const auto tg = fidelity_sweep(SweepKind::GammaCoherent, g);
  double lo = 2.0, hi = 0.0;
  for (const auto& row : tg.rows) {
    lo = std::min(lo, row.value);
    hi = std::max(hi, row.value);
  }
  ok = ok && lo >= 0.85 && hi <= 0.95;
  const auto tsq = fidelity_sweep(SweepKind::SqueezingAtGamma, g);
  for (size_t k = 1; k < tsq.rows.size(); ++k)
    ok = ok && tsq.rows[k].value < tsq.rows[k - 1].value;
  const auto tn = fidelity_sweep(SweepKind::FockAtGamma, g);
  for (size_t k = 1; k < tn.rows.size(); ++k) ok = ok && tn.rows[k].value < tn.rows[k - 1].value;
  s << "F_gamma in [" << lo << ", " << hi
    << "] (band [0.85, 0.95]); F_sq and F_n strictly decreasing";
  return {ok, s.str()};
}

Outcome c04_density_morphology() {
  const auto resource = on_wavefunction(on3_spec(0.1), g);
  bool ok = true;
  double prev = -1.0;
  for (int n = 0; n <= 5; ++n) {
    const double var =
        density_variance(homodyne_density(fock_wavefunction(n, g), resource, g).density);
    ok = ok && var > prev;
    prev = var;
  }
  prev = -1.0;
  for (int k = 0; k <= 19; ++k) {
    const double db = 0.5 * k;
    const auto psi = gaussian_wavefunction(std::pow(10.0, -db / 10.0), g);
    const double var = density_variance(homodyne_density(psi, resource, g).density);
    ok = ok && var > prev;
    prev = var;
  }
  const auto p0 = homodyne_density(coherent_x_wavefunction(0.0, g), resource, g);
  std::vector<cplx> cvals(p0.density.values.begin(), p0.density.values.end());
  double shift_dev = 0.0;
  for (double x0 : {-1.0, 1.5}) {
    const auto px = homodyne_density(coherent_x_wavefunction(x0, g), resource, g);
    for (int k = 0; k < g.n_points; ++k) {
      const double q = g.x(k) + x0;
      if (std::abs(q) > 10.0) continue;
      const double ref = kernels::sample_cubic(cvals, (q - g.x_min) / g.dx()).real();
      shift_dev = std::max(shift_dev, std::abs(px.density.values[k] - ref));
    }
  }
  ok = ok && shift_dev <= 1e-6;
  std::ostringstream s;
  s << "variances strictly increasing in n and dB; shift identity dev = " << shift_dev
    << " (tol 1e-6)";
  return {ok, s.str()};
}

Outcome c05_composition_identity() {
  const std::vector<PositionWaveFunction> states = {
      fock_wavefunction(0, g), coherent_x_wavefunction(1.0, g),
      squeezed_vacuum_wavefunction(6.0, g), fock_wavefunction(3, g)};
  double worst = 0.0;
  for (const auto& psi : states)
    for (double q : {-2.0, -1.0, 0.0, 1.0, 2.0})
      for (double a0 : {0.01, 0.05, 0.1}) {
        const auto filtered = effective_operator(psi, cubic_phase_resource(a0, g), q);
        const auto corrected = normalize(feed_forward(filtered, q, a0));
        worst = std::max(worst, l2_distance(corrected, damped_cubic(psi, a0, q)));
      }
  std::ostringstream s;
  s << "max L2 distance = " << worst << " (tol 1e-8)";
  return {worst <= 1e-8, s.str()};
}

Outcome c06_postselection() {
  bool ok = true;
  double mass_lo = 1.0, mass_hi = 0.0;
  for (const auto& [name, psi] : sweep_states()) {
    const auto outcome = run_postselected(psi, 0.1, PostSelectSpec{0.0, 1e-2}, 0.5);
    mass_lo = std::min(mass_lo, outcome.acceptance_mass);
    mass_hi = std::max(mass_hi, outcome.acceptance_mass);
    ok = ok && outcome.acceptance_mass >= 2e-4 && outcome.acceptance_mass <= 2e-2;
  }
  // accepted output at the window centre against A_0 e^{i a0 x^3}
  double out_dev = 0.0;
  for (const auto& psi : {fock_wavefunction(0, g), coherent_x_wavefunction(1.0, g)}) {
    const auto probe = run_deterministic(psi, 0.1, 0.5);
    const double u = u_at(probe.density, 0.0);
    const auto outcome = run_postselected(psi, 0.1, PostSelectSpec{0.0, 1e-3}, u);
    ok = ok && outcome.accepted;
    out_dev = std::max(out_dev, l2_distance(outcome.output, damped_cubic(psi, 0.1, 0.0)));
  }
  ok = ok && out_dev <= 1e-4;
  std::ostringstream s;
  s << "acceptance mass in [" << mass_lo << ", " << mass_hi
    << "] (band [2e-4, 2e-2]); centre-output dev = " << out_dev << " (tol 1e-4)";
  return {ok, s.str()};
}

Outcome c07_resource_preparation() {
  const PrepParams p{0.55, 1.0, 0.0};
  const auto ideal = prepare_on3_ideal(p);
  const auto c40 = prepare_on3_circuit(p, 40, 40, false);
  const auto chain = prepare_on3_circuit(p, 40, 40, true);
  const auto c80 = prepare_on3_circuit(p, 80, 80, false);
  const double fid = fock_fidelity(c40.state, ideal);
  const double fid80 = fock_fidelity(c80.state, ideal);
  const double agree = fock_fidelity(c40.state, chain.state);
  const double amp12 = std::max(std::abs(c40.state.c[1]), std::abs(c40.state.c[2]));
  const bool ok = fid >= 1.0 - 1e-6 && amp12 <= 1e-8 && agree >= 1.0 - 1e-8 &&
                  std::abs(fid80 - fid) < 1e-8;
  std::ostringstream s;
  s << "fidelity = " << fid << " (>= 1-1e-6); |c1|,|c2| <= " << amp12
    << " (tol 1e-8); path agreement = " << agree
    << "; cutoff-doubling delta = " << std::abs(fid80 - fid);
  return {ok, s.str()};
}

Outcome c08_element_checks() {
  bool ok = true;
  std::ostringstream s;
  // photon subtraction on coherent(0.8)
  const auto coh = coherent_fock(cplx(0.8, 0.0), 30);
  const auto sub = photon_subtract_bs(coh, 0.01);
  const double f_sub = fock_fidelity(sub.state, annihilate(coh));
  ok = ok && f_sub >= 1.0 - 1e-3;
  // arm identity (1 x a)|TMSS> = y (a^dag x 1)|TMSS>
  const double r = 0.55, y = std::tanh(r);
  const auto v = tmss(r, 40, 40);
  double arm_dev = 0.0;
  for (int m = 0; m < 40; ++m)
    for (int n = 0; n < 40; ++n) {
      const cplx lhs = std::sqrt(n + 1.0) * v.at(m, n + 1);
      const cplx rhs = (m >= 1) ? y * std::sqrt(double(m)) * v.at(m - 1, n) : cplx(0.0, 0.0);
      arm_dev = std::max(arm_dev, std::abs(lhs - rhs));
    }
  ok = ok && arm_dev <= 1e-10;
  // symplectic decomposition of the two-mode squeezer
  const auto sq = SymplecticMatrix::direct_sum(SymplecticMatrix::single_mode_squeeze(0.5),
                                               SymplecticMatrix::single_mode_squeeze(-0.5));
  const SymplecticMatrix factors[] = {SymplecticMatrix::beamsplitter(-M_PI / 4.0), sq,
                                      SymplecticMatrix::beamsplitter(M_PI / 4.0)};
  const double sym_dev = max_abs_diff(compose_symplectic(factors), two_mode_squeezer_form(0.5));
  ok = ok && sym_dev <= 1e-12;
  // displacement element: alpha = 0.3, theta = 0.02, monotone in 1/theta
  const auto probe = fock_basis(1, 24);
  double prev_f = 0.0;
  bool monotone = true;
  double f_disp = 0.0;
  for (double theta : {0.08, 0.04, 0.02}) {
    const cplx z = cplx(0.3, 0.0) / std::sin(theta);
    const auto rep = displace_by_bs(probe, z, theta);
    monotone = monotone && rep.fidelity > prev_f;
    prev_f = rep.fidelity;
    f_disp = rep.fidelity;
  }
  ok = ok && monotone && f_disp >= 0.99;
  s << "subtraction F = " << f_sub << " (>= 1-1e-3); arm-identity dev = " << arm_dev
    << " (tol 1e-10); symplectic dev = " << sym_dev
    << " (tol 1e-12); displacement F = " << f_disp << " (>= 0.99, monotone "
    << (monotone ? "yes" : "no") << ")";
  return {ok, s.str()};
}

Outcome c09_heisenberg() {
  auto states = sweep_states();
  states.emplace_back("on3:0.1", on_wavefunction(on3_spec(0.1), g));
  states.emplace_back("on4:0.1", on_wavefunction(on4_spec(0.1), g));
  states.emplace_back("xsqueezed:6", squeezed_vacuum_wavefunction(6.0, g));
  const double gamma = 0.1;
  double worst_p = 0.0, worst_mod = 0.0;
  for (const auto& [name, psi] : states) {
    const auto out = apply_phase_gate(psi, GateSpec{3, gamma});
    const double expected = 3.0 * gamma * expectation(psi, Observable::X2);
    const double got = expectation(out, Observable::P) - expectation(psi, Observable::P);
    worst_p = std::max(worst_p, std::abs(got - expected));
    double mod = 0.0;
    for (int k = 0; k < g.n_points; ++k)
      mod = std::max(mod, std::abs(std::norm(out.amp[k]) - std::norm(psi.amp[k])));
    worst_mod = std::max(worst_mod, mod);
  }
  std::ostringstream s;
  s << "max |d<p> - 3 gamma <x^2>| = " << worst_p
    << " (tol 1e-6); max pointwise |psi|^2 change = " << worst_mod << " (tol 1e-14)";
  return {worst_p <= 1e-6 && worst_mod <= 1e-14, s.str()};
}

Outcome c10_quartic() {
  bool ok = true;
  std::ostringstream s;
  const auto psi = fock_wavefunction(0, g);
  s << "rel L2 diff:";
  for (double a0 : {1e-2, 3e-2}) {
    const auto pair = quartic_effective(psi, 0.0, a0);
    const cplx phase(std::cos(0.75 * a0), std::sin(0.75 * a0));
    double num = 0.0, den = 0.0;
    for (int k = 0; k < g.n_points; ++k) {
      num += std::norm(pair.raw.amp[k] - phase * pair.exponentiated.amp[k]);
      den += std::norm(pair.raw.amp[k]);
    }
    const double rel = std::sqrt(num / den);
    ok = ok && rel <= 10.0 * a0 * a0;
    s << " " << rel << " (tol " << 10.0 * a0 * a0 << ")";
  }
  const double a0 = 0.05;
  const auto via_resource =
      normalize(effective_operator(psi, on_wavefunction(on4_spec(a0), g), 0.0));
  const double res_dev =
      l2_distance(via_resource, normalize(quartic_effective(psi, 0.0, a0).raw));
  ok = ok && res_dev <= 1e-10;
  s << "; resource-path dev = " << res_dev << " (tol 1e-10)";
  return {ok, s.str()};
}

Outcome c11_product_expansion() {
  const auto psi = fock_wavefunction(0, g);
  const double gamma = 0.05;
  const auto p2 = product_step(psi, gamma, 2);
  double dev = 0.0;
  for (int k = 0; k < g.n_points; ++k) {
    const double x3 = std::pow(g.x(k), 3);
    const cplx taylor = psi.amp[k] * (cplx(1.0, gamma * x3) - 0.5 * gamma * gamma * x3 * x3);
    const cplx expected = psi.amp[k] * (0.25 * gamma * gamma * x3 * x3);
    dev = std::max(dev, std::abs((p2.amp[k] - taylor) - expected));
  }
  const double fid = state_fidelity(normalize(product_step(psi, gamma, 64)),
                                    apply_phase_gate(psi, GateSpec{3, gamma}));
  std::ostringstream s;
  s << "n=2 identity dev = " << dev << " (tol 1e-12); n=64 fidelity = " << fid << " (>= 0.999)";
  return {dev <= 1e-12 && fid >= 0.999, s.str()};
}

Outcome c12_probability_bookkeeping() {
  bool ok = true;
  double worst_consistency = 0.0, worst_mass = 0.0;
  const auto resource = on_wavefunction(on3_spec(0.1), g);
  for (const auto& [name, psi] : sweep_states()) {
    const auto hd = homodyne_density(psi, resource, g);
    worst_mass = std::max(worst_mass, std::abs(hd.raw_mass - 1.0));
    for (double q : {-1.3, 0.0, 0.9}) {
      const double raw_norm2 = effective_operator(psi, resource, q).norm2();
      std::vector<cplx> cvals(hd.density.values.begin(), hd.density.values.end());
      // undo the documented on-grid renormalization: the physical density
      // of the measurement is raw_mass * (returned density)
      const double pq =
          hd.raw_mass * kernels::sample_cubic(cvals, (q - g.x_min) / g.dx()).real();
      worst_consistency = std::max(worst_consistency, std::abs(raw_norm2 - pq));
    }
    for (double v : hd.density.values) ok = ok && v >= 0.0;
  }
  // per-run bookkeeping from the engine itself
  for (double u : {0.2, 0.5, 0.9}) {
    const auto outcome = run_deterministic(fock_wavefunction(2, g), 0.1, u);
    std::vector<cplx> cvals(outcome.density.values.begin(), outcome.density.values.end());
    const double pq = kernels::sample_cubic(cvals, (outcome.q - g.x_min) / g.dx()).real();
    worst_consistency = std::max(worst_consistency, std::abs(outcome.raw_norm2 - pq));
    ok = ok && outcome.raw_norm2 > 0.0;
  }
  // window masses and preparation probabilities are genuine probabilities
  const auto post = run_postselected(fock_wavefunction(1, g), 0.1, PostSelectSpec{0.0, 0.5}, 0.5);
  ok = ok && post.acceptance_mass >= 0.0 && post.acceptance_mass <= 1.0;
  const auto prep = prepare_on3_circuit(PrepParams{0.55, 1.0, 0.0}, 40, 40);
  ok = ok && prep.success_probability >= 0.0 && prep.success_probability <= 1.0;
  ok = ok && worst_consistency <= 1e-8 && worst_mass <= 1e-6;
  std::ostringstream s;
  s << "max |raw_norm^2 - p(q)| = " << worst_consistency
    << " (tol 1e-8); max |int p dq - 1| before renormalization = " << worst_mass
    << " (tol 1e-6)";
  return {ok, s.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* summary;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"C01", "coherent-state closed-form gate fidelity", c01_closed_form_fidelity},
      {"C02", "average fidelity independent of displacement", c02_displacement_invariance},
      {"C03", "fidelity sweeps: band and monotonicity", c03_fidelity_sweeps},
      {"C04", "outcome-density morphology", c04_density_morphology},
      {"C05", "feed-forward composition identity", c05_composition_identity},
      {"C06", "post-selection mass and centre output", c06_postselection},
      {"C07", "03 resource preparation", c07_resource_preparation},
      {"C08", "optical element checks", c08_element_checks},
      {"C09", "Heisenberg propagation under the cubic gate", c09_heisenberg},
      {"C10", "quartic filter first order", c10_quartic},
      {"C11", "product expansion accuracy", c11_product_expansion},
      {"C12", "probability bookkeeping", c12_probability_bookkeeping},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome r{false, "exception"};
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s  %s — %s\n", r.pass ? "PASS" : "FAIL", c.id, c.summary,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
