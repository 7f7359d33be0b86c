#include "ongate/special.hpp"

#include <cmath>
#include <stdexcept>

namespace ongate {

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: order must be nonnegative");
  if (n == 0) return 1.0;
  double hm = 1.0;          // H_0
  double h = 2.0 * x;       // H_1
  for (int k = 1; k < n; ++k) {
    const double hp = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hp;
  }
  return h;
}

namespace {

// Ai(0) and -Ai'(0)
double airy_c1() {
  static const double c1 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
  return c1;
}
double airy_c2() {
  static const double c2 = std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
  return c2;
}

// Ai(t) = c1*f(t) - c2*g(t), with term recurrences
//   f: t0 = 1,  t_{k+1} = t_k * t^3 / ((3k+2)(3k+3))
//   g: u0 = t,  u_{k+1} = u_k * t^3 / ((3k+3)(3k+4))
double airy_series(double t) {
  const double t3 = t * t * t;
  double f = 1.0, g = t;
  double tf = 1.0, tg = t;
  for (int k = 0; k < 120; ++k) {
    tf *= t3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
    tg *= t3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
    f += tf;
    g += tg;
    if (std::abs(tf) < 1e-18 && std::abs(tg) < 1e-18) break;
  }
  return airy_c1() * f - airy_c2() * g;
}

// u_{k+1}/u_k for the asymptotic coefficient sequence
// u_k = Gamma(3k + 1/2) / (54^k k! Gamma(k + 1/2)).
double asym_ratio(int k) {
  return (3.0 * k + 2.5) * (3.0 * k + 1.5) * (3.0 * k + 0.5) /
         (54.0 * (k + 1.0) * (k + 0.5));
}

// t > 8: Ai(t) ~ e^{-z} / (2 sqrt(pi) t^{1/4}) * sum_k (-1)^k u_k z^{-k},
// z = (2/3) t^{3/2}.
double airy_asym_pos(double t) {
  const double z = (2.0 / 3.0) * std::pow(t, 1.5);
  double sum = 0.0, term = 1.0;
  for (int k = 0; k < 40; ++k) {
    sum += term;
    const double next = -term * asym_ratio(k) / z;
    if (std::abs(next) >= std::abs(term)) break;  // asymptotic tail started growing
    term = next;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return std::exp(-z) / (2.0 * std::sqrt(M_PI) * std::pow(t, 0.25)) * sum;
}

// t < -8: oscillatory branch,
// Ai(-s) ~ pi^{-1/2} s^{-1/4} [ sin(z + pi/4) P(z) - cos(z + pi/4) Q(z) ],
// P = sum (-1)^k u_{2k} z^{-2k}, Q = sum (-1)^k u_{2k+1} z^{-2k-1}.
double airy_asym_neg(double t) {
  const double s = -t;
  const double z = (2.0 / 3.0) * std::pow(s, 1.5);
  double p = 0.0, q = 0.0;
  double u = 1.0;   // u_k, walked upward
  double zp = 1.0;  // z^{-k}
  double prev = HUGE_VAL;
  for (int k = 0; k < 40; ++k) {
    const double term = u * zp;
    if (std::abs(term) > prev) break;  // asymptotic tail started growing
    prev = std::abs(term);
    const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0)
      p += sgn * term;
    else
      q += sgn * term;
    u *= asym_ratio(k);
    zp /= z;
    if (std::abs(u * zp) < 1e-18) break;
  }
  const double phase = z + M_PI / 4.0;
  return (std::sin(phase) * p - std::cos(phase) * q) /
         (std::sqrt(M_PI) * std::pow(s, 0.25));
}

}  // namespace

double airy_ai(double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("airy_ai: argument must be finite");
  // The positive-axis crossover sits at 6.5 rather than 8: past that point
  // the series loses absolute accuracy to cancellation (~e^{2 t^{3/2}/3} eps)
  // while the asymptotic tail is already below 1e-15 relative.
  if (t > 6.5) return airy_asym_pos(t);
  if (t < -8.0) return airy_asym_neg(t);
  return airy_series(t);
}

}  // namespace ongate
