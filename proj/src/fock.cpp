#include "ongate/fock.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "ongate/errors.hpp"
#include "ongate/kernels.hpp"

namespace ongate {

namespace {

double vec_norm2(std::span<const cplx> v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return acc;
}

// w = exp(G) v with scaling and squaring applied to the action: split into
// 2^s substeps with unit-bounded norm and sum the Taylor series of each.
void exp_action(const std::function<void(const std::vector<cplx>&, std::vector<cplx>&)>& apply_g,
                std::vector<cplx>& v, double norm_est) {
  int s = 0;
  while (norm_est > 1.0) {
    norm_est *= 0.5;
    ++s;
  }
  const double inv_sub = std::ldexp(1.0, -s);
  const int substeps = 1 << s;
  std::vector<cplx> term(v.size()), next(v.size()), acc(v.size());
  for (int step = 0; step < substeps; ++step) {
    acc = v;
    term = v;
    for (int k = 1; k <= 96; ++k) {
      apply_g(term, next);
      const double f = inv_sub / k;
      double tn = 0.0;
      for (size_t i = 0; i < next.size(); ++i) {
        next[i] *= f;
        acc[i] += next[i];
        tn += std::norm(next[i]);
      }
      term.swap(next);
      if (tn < 1e-36 * vec_norm2(acc)) break;
    }
    v = acc;
  }
}

void flag_tail(bool& warning, double tail) {
  if (tail > kTailGuard) warning = true;
}

}  // namespace

double FockVector::norm2() const { return vec_norm2(c); }

double FockVector::tail_mass() const {
  double t = std::norm(c.back());
  if (c.size() > 1) t += std::norm(c[c.size() - 2]);
  return t;
}

double TwoModeFockVector::norm2() const { return vec_norm2(c); }

double TwoModeFockVector::tail_mass() const {
  double t1 = 0.0, t2 = 0.0;
  for (int n = 0; n <= cutoff2; ++n) {
    t1 += std::norm(at(cutoff1, n));
    if (cutoff1 > 0) t1 += std::norm(at(cutoff1 - 1, n));
  }
  for (int m = 0; m <= cutoff1; ++m) {
    t2 += std::norm(at(m, cutoff2));
    if (cutoff2 > 0) t2 += std::norm(at(m, cutoff2 - 1));
  }
  return std::max(t1, t2);
}

FockVector fock_basis(int n, int cutoff) {
  if (n < 0 || n > cutoff) throw std::invalid_argument("fock_basis: level outside cutoff");
  FockVector v{cutoff, std::vector<cplx>(cutoff + 1, cplx(0.0, 0.0)), true, false};
  v.c[n] = 1.0;
  return v;
}

FockVector coherent_fock(cplx alpha, int cutoff) {
  FockVector v{cutoff, std::vector<cplx>(cutoff + 1), true, false};
  v.c[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n < cutoff; ++n) v.c[n + 1] = v.c[n] * alpha / std::sqrt(n + 1.0);
  flag_tail(v.tail_warning, v.tail_mass());
  return v;
}

FockVector annihilate(const FockVector& v) {
  FockVector out{v.cutoff, std::vector<cplx>(v.cutoff + 1, cplx(0.0, 0.0)), false, v.tail_warning};
  for (int n = 0; n < v.cutoff; ++n) out.c[n] = std::sqrt(n + 1.0) * v.c[n + 1];
  return out;
}

FockVector create(const FockVector& v) {
  FockVector out{v.cutoff + 1, std::vector<cplx>(v.cutoff + 2, cplx(0.0, 0.0)), false, v.tail_warning};
  for (int n = 0; n <= v.cutoff; ++n) out.c[n + 1] = std::sqrt(n + 1.0) * v.c[n];
  return out;
}

CMatrix displacement_generator(cplx beta, int cutoff) {
  CMatrix g = CMatrix::zero(cutoff + 1);
  for (int n = 0; n < cutoff; ++n) {
    const double r = std::sqrt(n + 1.0);
    g.at(n + 1, n) = beta * r;               // beta a^dag
    g.at(n, n + 1) = -std::conj(beta) * r;   // -beta* a
  }
  return g;
}

CMatrix displacement_matrix(cplx beta, int cutoff) {
  return expm(displacement_generator(beta, cutoff));
}

FockVector displace(const FockVector& v, cplx beta) {
  FockVector out = v;
  out.c = matvec(displacement_matrix(beta, v.cutoff), v.c);
  flag_tail(out.tail_warning, out.tail_mass());
  return out;
}

FockVector single_mode_squeeze(const FockVector& v, double r) {
  CMatrix g = CMatrix::zero(v.cutoff + 1);
  for (int n = 0; n + 2 <= v.cutoff; ++n) {
    const double w = 0.5 * r * std::sqrt((n + 1.0) * (n + 2.0));
    g.at(n + 2, n) = w;
    g.at(n, n + 2) = -w;
  }
  FockVector out = v;
  out.c = matvec(expm(g), v.c);
  flag_tail(out.tail_warning, out.tail_mass());
  return out;
}

TwoModeFockVector tensor(const FockVector& a, const FockVector& b) {
  TwoModeFockVector v{a.cutoff, b.cutoff,
                      std::vector<cplx>(size_t(a.cutoff + 1) * (b.cutoff + 1)),
                      a.normalized && b.normalized, a.tail_warning || b.tail_warning};
  for (int m = 0; m <= a.cutoff; ++m)
    for (int n = 0; n <= b.cutoff; ++n) v.at(m, n) = a.c[m] * b.c[n];
  return v;
}

TwoModeFockVector beamsplitter(const TwoModeFockVector& v, double theta) {
  const int d1 = v.cutoff1 + 1, d2 = v.cutoff2 + 1;
  auto apply_g = [&, theta](const std::vector<cplx>& in, std::vector<cplx>& out) {
    out.assign(in.size(), cplx(0.0, 0.0));
    for (int m = 0; m < d1; ++m) {
      for (int n = 0; n < d2; ++n) {
        cplx acc(0.0, 0.0);
        // theta (a^dag b - a b^dag)
        if (m >= 1 && n + 1 < d2) acc += theta * std::sqrt(double(m) * (n + 1.0)) * in[size_t(m - 1) * d2 + n + 1];
        if (m + 1 < d1 && n >= 1) acc -= theta * std::sqrt((m + 1.0) * double(n)) * in[size_t(m + 1) * d2 + n - 1];
        out[size_t(m) * d2 + n] = acc;
      }
    }
  };
  TwoModeFockVector out = v;
  exp_action(apply_g, out.c, 2.0 * std::abs(theta) * std::sqrt(double(d1) * d2));
  flag_tail(out.tail_warning, out.tail_mass());
  return out;
}

TwoModeFockVector two_mode_squeeze(const TwoModeFockVector& v, double r) {
  const int d1 = v.cutoff1 + 1, d2 = v.cutoff2 + 1;
  auto apply_g = [&, r](const std::vector<cplx>& in, std::vector<cplx>& out) {
    out.assign(in.size(), cplx(0.0, 0.0));
    for (int m = 0; m < d1; ++m) {
      for (int n = 0; n < d2; ++n) {
        cplx acc(0.0, 0.0);
        // r (a^dag b^dag - a b)
        if (m >= 1 && n >= 1) acc += r * std::sqrt(double(m) * double(n)) * in[size_t(m - 1) * d2 + n - 1];
        if (m + 1 < d1 && n + 1 < d2) acc -= r * std::sqrt((m + 1.0) * (n + 1.0)) * in[size_t(m + 1) * d2 + n + 1];
        out[size_t(m) * d2 + n] = acc;
      }
    }
  };
  TwoModeFockVector out = v;
  exp_action(apply_g, out.c, 2.0 * std::abs(r) * std::sqrt(double(d1) * d2));
  flag_tail(out.tail_warning, out.tail_mass());
  return out;
}

TwoModeFockVector tmss(double r, int cutoff1, int cutoff2) {
  TwoModeFockVector v{cutoff1, cutoff2,
                      std::vector<cplx>(size_t(cutoff1 + 1) * (cutoff2 + 1), cplx(0.0, 0.0)),
                      true, false};
  const double y = std::tanh(r);
  const double sech = 1.0 / std::cosh(r);
  double coeff = sech;
  for (int n = 0; n <= std::min(cutoff1, cutoff2); ++n) {
    v.at(n, n) = coeff;
    coeff *= y;
  }
  flag_tail(v.tail_warning, v.tail_mass());
  return v;
}

TwoModeFockVector apply_mode1(const CMatrix& m, const TwoModeFockVector& v) {
  if (m.n != v.cutoff1 + 1) throw std::invalid_argument("apply_mode1: dimension mismatch");
  TwoModeFockVector out = v;
  const int d2 = v.dim2();
  for (int j = 0; j < d2; ++j) {
    for (int i = 0; i < m.n; ++i) {
      cplx acc(0.0, 0.0);
      for (int k = 0; k < m.n; ++k) acc += m.at(i, k) * v.at(k, j);
      out.at(i, j) = acc;
    }
  }
  flag_tail(out.tail_warning, out.tail_mass());
  return out;
}

TwoModeFockVector apply_mode2(const CMatrix& m, const TwoModeFockVector& v) {
  if (m.n != v.cutoff2 + 1) throw std::invalid_argument("apply_mode2: dimension mismatch");
  TwoModeFockVector out = v;
  for (int i = 0; i <= v.cutoff1; ++i) {
    for (int j = 0; j < m.n; ++j) {
      cplx acc(0.0, 0.0);
      for (int k = 0; k < m.n; ++k) acc += m.at(j, k) * v.at(i, k);
      out.at(i, j) = acc;
    }
  }
  flag_tail(out.tail_warning, out.tail_mass());
  return out;
}

std::pair<FockVector, double> postselect(const TwoModeFockVector& v, int mode, int outcome) {
  if (mode != 1 && mode != 2) throw std::invalid_argument("postselect: mode must be 1 or 2");
  const int cut = (mode == 1) ? v.cutoff1 : v.cutoff2;
  if (outcome < 0 || outcome > cut) throw std::invalid_argument("postselect: outcome above cutoff");
  FockVector out;
  out.cutoff = (mode == 1) ? v.cutoff2 : v.cutoff1;
  out.c.assign(out.cutoff + 1, cplx(0.0, 0.0));
  out.normalized = false;
  out.tail_warning = v.tail_warning;
  if (mode == 1)
    for (int n = 0; n <= v.cutoff2; ++n) out.c[n] = v.at(outcome, n);
  else
    for (int m = 0; m <= v.cutoff1; ++m) out.c[m] = v.at(m, outcome);
  return {out, out.norm2()};
}

double fock_fidelity(const FockVector& a, const FockVector& b) {
  const double na = a.norm2(), nb = b.norm2();
  if (!(na > 0.0) || !(nb > 0.0)) throw guard_error("fock_fidelity: zero-norm state");
  cplx acc(0.0, 0.0);
  const size_t n = std::min(a.c.size(), b.c.size());
  for (size_t k = 0; k < n; ++k) acc += std::conj(a.c[k]) * b.c[k];
  return std::abs(acc) / std::sqrt(na * nb);
}

PositionWaveFunction fock_to_position(const FockVector& v, const Grid& g) {
  PositionWaveFunction psi{g, kernels::fock_synthesis(v.c, g), v.normalized};
  const double edge = std::max(std::norm(psi.amp.front()), std::norm(psi.amp.back()));
  if (edge >= 1e-12 || std::abs(psi.norm2() - v.norm2()) > 1e-6 * std::max(1.0, v.norm2()))
    throw guard_error("fock_to_position: state reaches or leaves the grid; enlarge x_max");
  return psi;
}

double DensityMatrix::purity() const {
  double acc = 0.0;
  for (const auto& x : a) acc += std::norm(x);
  return acc;
}

double DensityMatrix::fidelity_pure(const FockVector& t) const {
  if (static_cast<int>(t.c.size()) != n)
    throw std::invalid_argument("fidelity_pure: dimension mismatch");
  const double tn = t.norm2();
  if (!(tn > 0.0)) throw guard_error("fidelity_pure: zero-norm target");
  cplx acc(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    cplx row(0.0, 0.0);
    for (int j = 0; j < n; ++j) row += at(i, j) * t.c[j];
    acc += std::conj(t.c[i]) * row;
  }
  return std::sqrt(std::max(0.0, acc.real() / tn));
}

DensityMatrix partial_trace_mode2(const TwoModeFockVector& v) {
  const int d1 = v.cutoff1 + 1;
  DensityMatrix rho{d1, std::vector<cplx>(size_t(d1) * d1, cplx(0.0, 0.0))};
  for (int m = 0; m < d1; ++m)
    for (int mp = 0; mp < d1; ++mp) {
      cplx acc(0.0, 0.0);
      for (int n = 0; n <= v.cutoff2; ++n) acc += v.at(m, n) * std::conj(v.at(mp, n));
      rho.a[size_t(m) * d1 + mp] = acc;
    }
  return rho;
}

}  // namespace ongate
