#include "ongate/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "ongate/special.hpp"

namespace ongate::kernels {

namespace {

// 4-point Lagrange weights at fractional offset u in [0,1) relative to the
// second stencil point.
inline void lagrange4(double u, double w[4]) {
  w[0] = -u * (u - 1.0) * (u - 2.0) / 6.0;
  w[1] = (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0;
  w[2] = -(u + 1.0) * u * (u - 2.0) / 2.0;
  w[3] = (u + 1.0) * u * (u - 1.0) / 6.0;
}

inline cplx sample_cubic_impl(const cplx* f, int n, double t) {
  if (t <= -1.0 || t >= static_cast<double>(n)) return cplx(0.0, 0.0);
  int j = static_cast<int>(std::floor(t));
  double u = t - j;
  double w[4];
  lagrange4(u, w);
  cplx acc(0.0, 0.0);
  for (int m = -1; m <= 2; ++m) {
    const int idx = j + m;
    if (idx >= 0 && idx < n) acc += w[m + 1] * f[idx];
  }
  return acc;
}

// One homodyne-density sample; shared by the serial and OpenMP loops so
// both produce identical bits.
inline double density_at(const cplx* psi, const cplx* phi, int n, double shift_idx) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx p = sample_cubic_impl(phi, n, i + shift_idx);
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    acc += w * std::norm(psi[i]) * std::norm(p);
  }
  return acc;
}

inline double fidelity_at(const cplx* psi, const double* xs, int n, double dx, double q) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s = xs[i] + q;
    const double g = std::exp(-0.5 * s * s);
    const double w = ((i == 0 || i == n - 1) ? 0.5 : 1.0) * std::norm(psi[i]);
    num += w * g;
    den += w * g * g;
  }
  num *= dx;
  den *= dx;
  return num / std::sqrt(den);
}

inline cplx synth_at(const cplx* c, int m, double x) {
  // normalized oscillator eigenfunctions with the Gaussian envelope folded
  // into the recurrence:
  //   p_0 = pi^{-1/4} e^{-x^2/2},  p_1 = sqrt(2) x p_0,
  //   p_{k+1} = sqrt(2/(k+1)) x p_k - sqrt(k/(k+1)) p_{k-1}
  const double p0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  double pm = p0;
  cplx acc = c[0] * p0;
  if (m == 1) return acc;
  double pk = std::sqrt(2.0) * x * p0;
  acc += c[1] * pk;
  for (int k = 1; k + 1 < m; ++k) {
    const double pn = std::sqrt(2.0 / (k + 1.0)) * x * pk - std::sqrt(k / (k + 1.0)) * pm;
    pm = pk;
    pk = pn;
    acc += c[k + 1] * pn;
  }
  return acc;
}

void check_density_args(std::span<const cplx> psi, std::span<const cplx> phi, const Grid& xg) {
  if (static_cast<int>(psi.size()) != xg.n_points || psi.size() != phi.size())
    throw std::invalid_argument("homodyne_density: sample count does not match grid");
}

}  // namespace

cplx sample_cubic(std::span<const cplx> f, double t) {
  return sample_cubic_impl(f.data(), static_cast<int>(f.size()), t);
}

std::vector<cplx> shift_samples(std::span<const cplx> f, const Grid& g, double q) {
  const int n = static_cast<int>(f.size());
  if (n != g.n_points) throw std::invalid_argument("shift_samples: sample count does not match grid");
  const double k = q / g.dx();
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) out[i] = sample_cubic_impl(f.data(), n, i + k);
  return out;
}

namespace serial {

std::vector<double> homodyne_density(std::span<const cplx> psi, std::span<const cplx> phi,
                                     const Grid& xg, std::span<const double> q) {
  check_density_args(psi, phi, xg);
  const int n = xg.n_points;
  const double dx = xg.dx();
  std::vector<double> out(q.size());
  for (size_t j = 0; j < q.size(); ++j)
    out[j] = density_at(psi.data(), phi.data(), n, q[j] / dx) * dx;
  return out;
}

std::vector<double> gate_fidelity_table(std::span<const cplx> psi, const Grid& xg,
                                        std::span<const double> q) {
  if (static_cast<int>(psi.size()) != xg.n_points)
    throw std::invalid_argument("gate_fidelity_table: sample count does not match grid");
  const auto xs = xg.points();
  std::vector<double> out(q.size());
  for (size_t j = 0; j < q.size(); ++j)
    out[j] = fidelity_at(psi.data(), xs.data(), xg.n_points, xg.dx(), q[j]);
  return out;
}

std::vector<double> wigner_cubic_field(double gamma, std::span<const double> xs,
                                       std::span<const double> ps) {
  const double b0 = std::cbrt(4.0 / (3.0 * gamma));
  std::vector<double> out(xs.size() * ps.size());
  for (size_t ip = 0; ip < ps.size(); ++ip)
    for (size_t ix = 0; ix < xs.size(); ++ix)
      out[ip * xs.size() + ix] = airy_ai(b0 * (3.0 * gamma * xs[ix] * xs[ix] - ps[ip]));
  return out;
}

std::vector<cplx> fock_synthesis(std::span<const cplx> coeffs, const Grid& g) {
  if (coeffs.empty()) throw std::invalid_argument("fock_synthesis: empty coefficient vector");
  std::vector<cplx> out(g.n_points);
  for (int i = 0; i < g.n_points; ++i)
    out[i] = synth_at(coeffs.data(), static_cast<int>(coeffs.size()), g.x(i));
  return out;
}

}  // namespace serial

std::vector<double> homodyne_density(std::span<const cplx> psi, std::span<const cplx> phi,
                                     const Grid& xg, std::span<const double> q) {
  check_density_args(psi, phi, xg);
  const int n = xg.n_points;
  const double dx = xg.dx();
  std::vector<double> out(q.size());
  const int nq = static_cast<int>(q.size());
#pragma omp parallel for schedule(static)
  for (int j = 0; j < nq; ++j)
    out[j] = density_at(psi.data(), phi.data(), n, q[j] / dx) * dx;
  return out;
}

std::vector<double> gate_fidelity_table(std::span<const cplx> psi, const Grid& xg,
                                        std::span<const double> q) {
  if (static_cast<int>(psi.size()) != xg.n_points)
    throw std::invalid_argument("gate_fidelity_table: sample count does not match grid");
  const auto xs = xg.points();
  std::vector<double> out(q.size());
  const int nq = static_cast<int>(q.size());
#pragma omp parallel for schedule(static)
  for (int j = 0; j < nq; ++j)
    out[j] = fidelity_at(psi.data(), xs.data(), xg.n_points, xg.dx(), q[j]);
  return out;
}

std::vector<double> wigner_cubic_field(double gamma, std::span<const double> xs,
                                       std::span<const double> ps) {
  const double b0 = std::cbrt(4.0 / (3.0 * gamma));
  std::vector<double> out(xs.size() * ps.size());
  const int np = static_cast<int>(ps.size());
  const int nx = static_cast<int>(xs.size());
#pragma omp parallel for schedule(static)
  for (int ip = 0; ip < np; ++ip)
    for (int ix = 0; ix < nx; ++ix)
      out[size_t(ip) * nx + ix] = airy_ai(b0 * (3.0 * gamma * xs[ix] * xs[ix] - ps[ip]));
  return out;
}

std::vector<cplx> fock_synthesis(std::span<const cplx> coeffs, const Grid& g) {
  if (coeffs.empty()) throw std::invalid_argument("fock_synthesis: empty coefficient vector");
  std::vector<cplx> out(g.n_points);
  const int n = g.n_points;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i)
    out[i] = synth_at(coeffs.data(), static_cast<int>(coeffs.size()), g.x(i));
  return out;
}

}  // namespace ongate::kernels
