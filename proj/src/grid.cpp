#include "ongate/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "ongate/errors.hpp"

namespace ongate {

Grid Grid::uniform(double x_min, double x_max, int n_points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max))
    throw std::invalid_argument("Grid: bounds must be finite");
  if (!(x_max > x_min)) throw std::invalid_argument("Grid: x_max must exceed x_min");
  if (n_points < 2) throw std::invalid_argument("Grid: need at least 2 points");
  return Grid{x_min, x_max, n_points};
}

Grid Grid::symmetric(double x_max, int n_points) {
  return uniform(-x_max, x_max, n_points);
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n_points);
  const double h = dx();
  for (int k = 0; k < n_points; ++k) xs[k] = x_min + k * h;
  return xs;
}

bool Grid::is_symmetric() const {
  return std::abs(x_min + x_max) <= 1e-12 * (std::abs(x_max) + 1.0);
}

namespace {

template <typename T>
T trapezoid(std::span<const T> f, const Grid& g) {
  if (static_cast<int>(f.size()) != g.n_points)
    throw std::invalid_argument("integrate: sample count does not match grid");
  T acc = 0.5 * (f.front() + f.back());
  for (size_t k = 1; k + 1 < f.size(); ++k) acc += f[k];
  return acc * g.dx();
}

}  // namespace

double integrate(std::span<const double> samples, const Grid& g) {
  return trapezoid(samples, g);
}

cplx integrate(std::span<const cplx> samples, const Grid& g) {
  return trapezoid(samples, g);
}

DensitySamples::DensitySamples(Grid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.n_points)
    throw std::invalid_argument("DensitySamples: sample count does not match grid");
  double vmax = 0.0;
  for (double x : values) vmax = std::max(vmax, std::abs(x));
  for (double& x : values) {
    if (x < -1e-9 * vmax)
      throw std::invalid_argument("DensitySamples: negative density value");
    if (x < 0.0) x = 0.0;  // clamp roundoff-level noise
  }
}

double window_mass(const DensitySamples& d, double lo, double hi) {
  const Grid& g = d.grid;
  lo = std::max(lo, g.x_min);
  hi = std::min(hi, g.x_max);
  if (!(hi > lo)) return 0.0;
  const double h = g.dx();
  auto value_at = [&](double x) {
    double t = (x - g.x_min) / h;
    int j = static_cast<int>(std::floor(t));
    j = std::min(std::max(j, 0), g.n_points - 2);
    double f = t - j;
    return (1.0 - f) * d.values[j] + f * d.values[j + 1];
  };
  const int k_lo = static_cast<int>(std::ceil((lo - g.x_min) / h));
  const int k_hi = static_cast<int>(std::floor((hi - g.x_min) / h));
  if (k_lo > k_hi) {
    // window inside a single cell
    return 0.5 * (value_at(lo) + value_at(hi)) * (hi - lo);
  }
  double acc = 0.0;
  for (int k = k_lo; k < k_hi; ++k) acc += 0.5 * (d.values[k] + d.values[k + 1]) * h;
  const double x_lo = g.x(k_lo), x_hi = g.x(k_hi);
  if (x_lo > lo) acc += 0.5 * (value_at(lo) + d.values[k_lo]) * (x_lo - lo);
  if (hi > x_hi) acc += 0.5 * (d.values[k_hi] + value_at(hi)) * (hi - x_hi);
  return acc;
}

double sample_from_density(const DensitySamples& d, double u) {
  if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("sample_from_density: u outside [0,1)");
  const Grid& g = d.grid;
  const double h = g.dx();
  std::vector<double> cdf(d.values.size());
  cdf[0] = 0.0;
  for (size_t k = 1; k < d.values.size(); ++k)
    cdf[k] = cdf[k - 1] + 0.5 * (d.values[k - 1] + d.values[k]) * h;
  const double total = cdf.back();
  if (!(total > 0.0)) throw guard_error("sample_from_density: density has zero total mass");
  const double target = u * total;
  size_t k = 1;
  while (k + 1 < cdf.size() && cdf[k] < target) ++k;
  const double span = cdf[k] - cdf[k - 1];
  if (span <= 0.0) return g.x(static_cast<int>(k) - 1);
  const double frac = (target - cdf[k - 1]) / span;
  return g.x(static_cast<int>(k) - 1) + frac * h;
}

}  // namespace ongate
