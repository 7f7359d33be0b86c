#include "ongate/prep.hpp"

#include <cmath>
#include <stdexcept>

#include "ongate/errors.hpp"

namespace ongate {

namespace {

// (a + beta) acting on arm 2.
TwoModeFockVector shifted_annihilate_mode2(const TwoModeFockVector& v, cplx beta) {
  TwoModeFockVector out = v;
  for (int m = 0; m <= v.cutoff1; ++m) {
    for (int n = 0; n <= v.cutoff2; ++n) {
      cplx acc = beta * v.at(m, n);
      if (n + 1 <= v.cutoff2) acc += std::sqrt(n + 1.0) * v.at(m, n + 1);
      out.at(m, n) = acc;
    }
  }
  out.normalized = false;
  return out;
}

TwoModeFockVector annihilate_mode2(const TwoModeFockVector& v) {
  return shifted_annihilate_mode2(v, cplx(0.0, 0.0));
}

FockVector normalize_fock(FockVector v) {
  const double n2 = v.norm2();
  if (!(n2 > 0.0)) throw guard_error("prep: zero-norm state");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& x : v.c) x *= inv;
  v.normalized = true;
  return v;
}

}  // namespace

double PrepParams::y() const { return std::tanh(r); }

std::array<cplx, 3> PrepParams::betas() const {
  auto root = [&](double angle) { return c * cplx(std::cos(angle), std::sin(angle)); };
  return {root(M_PI / 6.0), root(5.0 * M_PI / 6.0), root(3.0 * M_PI / 2.0)};
}

std::array<cplx, 4> on3_closed_form(const std::array<cplx, 3>& b, double y) {
  return {
      b[0] * b[1] * b[2],
      y * (b[0] * b[1] + b[1] * b[2] + b[2] * b[0]),
      y * y * std::sqrt(2.0) * (b[0] + b[1] + b[2]),
      std::sqrt(6.0) * y * y * y,
  };
}

FockVector prepare_on3_ideal(const PrepParams& p) {
  if (!(p.c > 0.0)) throw guard_error("prepare_on3_ideal: beta magnitude c must be positive");
  const auto k = on3_closed_form(p.betas(), p.y());
  FockVector v{3, {k[0], k[1], k[2], k[3]}, false, false};
  // fix the global phase: rotate the vacuum coefficient onto the positive
  // real axis before normalizing
  const cplx phase = k[0] / std::abs(k[0]);
  for (auto& x : v.c) x /= phase;
  return normalize_fock(std::move(v));
}

PrepResult prepare_on3_circuit(const PrepParams& p, int cutoff1, int cutoff2,
                               bool displaced_chain) {
  if (!(p.c > 0.0)) throw guard_error("prepare_on3_circuit: beta magnitude c must be positive");
  PrepResult res;
  TwoModeFockVector v = tmss(p.r, cutoff1, cutoff2);
  if (v.tail_warning)
    res.warnings.push_back("tmss: tail mass above guard; raise the cutoff");
  const auto b = p.betas();
  if (!displaced_chain) {
    // Y = (a + b1)(a + b2)(a + b3), rightmost factor first
    v = shifted_annihilate_mode2(v, b[2]);
    v = shifted_annihilate_mode2(v, b[1]);
    v = shifted_annihilate_mode2(v, b[0]);
  } else {
    // Y = delta D(-b1) a D(b1-b2) a D(b2-b3) a D(b3); the scalar delta is
    // absorbed by the final normalization
    v = apply_mode2(displacement_matrix(b[2], cutoff2), v);
    v = annihilate_mode2(v);
    v = apply_mode2(displacement_matrix(b[1] - b[2], cutoff2), v);
    v = annihilate_mode2(v);
    v = apply_mode2(displacement_matrix(b[0] - b[1], cutoff2), v);
    v = annihilate_mode2(v);
    v = apply_mode2(displacement_matrix(-b[0], cutoff2), v);
  }
  if (v.tail_warning)
    res.warnings.push_back("filter: tail mass above guard; raise the cutoff");
  const double filtered_norm2 = v.norm2();
  if (!(filtered_norm2 > 0.0)) throw guard_error("prepare_on3_circuit: filtered state has zero norm");
  const double inv = 1.0 / std::sqrt(filtered_norm2);
  for (auto& x : v.c) x *= inv;
  // vacuum projection on the subtracted arm; the prepared state lives on
  // the untouched arm
  auto [residue, prob] = postselect(v, 2, 0);
  if (!(prob > 0.0)) throw guard_error("prepare_on3_circuit: vacuum projection has zero weight");
  res.success_probability = prob;
  res.state = normalize_fock(std::move(residue));
  return res;
}

PrepParams solve_prep_params(double a0_target, double y) {
  if (a0_target < 0.0) throw std::invalid_argument("solve_prep_params: a0 must be nonnegative");
  if (!(y > 0.0 && y < 1.0)) throw std::invalid_argument("solve_prep_params: y must lie in (0,1)");
  if (a0_target == 0.0) return PrepParams{0.0, 1.0, 0.0};
  // sqrt(6) (y/c)^3 = sqrt(3) a0 / 2  =>  c = y (2 sqrt(2) / a0)^{1/3}
  const double c = y * std::cbrt(2.0 * std::sqrt(2.0) / a0_target);
  return PrepParams{std::atanh(y), c, a0_target};
}

ConditionalResult photon_subtract_bs(const FockVector& psi, double theta) {
  if (!(theta > 0.0 && theta <= 0.2))
    throw std::invalid_argument("photon_subtract_bs: theta must lie in (0, 0.2]");
  if (annihilate(psi).norm2() < 1e-14 * psi.norm2())
    throw guard_error("photon_subtract_bs: nothing to subtract from (near-)vacuum input");
  TwoModeFockVector v = tensor(psi, fock_basis(0, psi.cutoff));
  v = beamsplitter(v, theta);
  auto [residue, prob] = postselect(v, 2, 1);
  return {normalize_fock(std::move(residue)), prob};
}

ConditionalResult photon_add_via_s2(const FockVector& psi, double r) {
  if (!(r > 0.0 && r <= 0.2))
    throw std::invalid_argument("photon_add_via_s2: r must lie in (0, 0.2]");
  // headroom for the raised support
  FockVector in{psi.cutoff + 8, std::vector<cplx>(psi.cutoff + 9, cplx(0.0, 0.0)),
                psi.normalized, psi.tail_warning};
  for (size_t k = 0; k < psi.c.size(); ++k) in.c[k] = psi.c[k];
  TwoModeFockVector v = tensor(in, fock_basis(0, 8));
  v = two_mode_squeeze(v, r);
  auto [residue, prob] = postselect(v, 2, 1);
  return {normalize_fock(std::move(residue)), prob};
}

DisplacementElementReport displace_by_bs(const FockVector& psi, cplx z, double theta) {
  if (!(theta > 0.0 && theta < M_PI / 2.0))
    throw std::invalid_argument("displace_by_bs: theta must lie in (0, pi/2)");
  const double zmag = std::abs(z);
  const int anc_cutoff = static_cast<int>(std::ceil(zmag * zmag + 8.0 * zmag + 16.0));
  TwoModeFockVector v = tensor(psi, coherent_fock(z, anc_cutoff));
  v = beamsplitter(v, theta);
  DisplacementElementReport rep;
  rep.alpha = z * std::sin(theta);
  rep.rho = partial_trace_mode2(v);
  const FockVector target = displace(psi, rep.alpha);
  rep.fidelity = rep.rho.fidelity_pure(target);
  rep.purity = rep.rho.purity();
  return rep;
}

}  // namespace ongate
