#include "ongate/symplectic.hpp"

#include <cmath>
#include <stdexcept>

namespace ongate {

SymplecticMatrix SymplecticMatrix::identity(int modes) {
  SymplecticMatrix s{modes, std::vector<double>(size_t(2 * modes) * (2 * modes), 0.0)};
  for (int i = 0; i < 2 * modes; ++i) s.at(i, i) = 1.0;
  return s;
}

SymplecticMatrix SymplecticMatrix::single_mode_squeeze(double r) {
  SymplecticMatrix s = identity(1);
  s.at(0, 0) = std::exp(-r);
  s.at(1, 1) = std::exp(r);
  return s;
}

SymplecticMatrix SymplecticMatrix::beamsplitter(double theta) {
  SymplecticMatrix s{2, std::vector<double>(16, 0.0)};
  const double c = std::cos(theta), t = std::sin(theta);
  for (int k = 0; k < 2; ++k) {
    s.at(k, k) = c;
    s.at(k + 2, k + 2) = c;
    s.at(k, k + 2) = t;
    s.at(k + 2, k) = -t;
  }
  return s;
}

SymplecticMatrix SymplecticMatrix::direct_sum(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  const int m = a.modes + b.modes;
  SymplecticMatrix s{m, std::vector<double>(size_t(2 * m) * (2 * m), 0.0)};
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) s.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) s.at(a.dim() + i, a.dim() + j) = b.at(i, j);
  return s;
}

bool SymplecticMatrix::is_symplectic(double tol) const {
  // Omega: per mode [[0, 1], [-1, 0]]
  const int d = dim();
  auto omega = [](int i, int j) -> double {
    if (i / 2 != j / 2) return 0.0;
    if (i % 2 == 0 && j == i + 1) return 1.0;
    if (i % 2 == 1 && j == i - 1) return -1.0;
    return 0.0;
  };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      double acc = 0.0;
      for (int k = 0; k < d; ++k) {
        const int kp = (k % 2 == 0) ? k + 1 : k - 1;
        const double w = (k % 2 == 0) ? 1.0 : -1.0;  // Omega(k, kp)
        acc += at(k, i) * w * at(kp, j);
      }
      if (std::abs(acc - omega(i, j)) > tol) return false;
    }
  }
  return true;
}

SymplecticMatrix sym_product(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.modes != b.modes) throw std::invalid_argument("sym_product: mode count mismatch");
  const int d = a.dim();
  SymplecticMatrix out{a.modes, std::vector<double>(size_t(d) * d, 0.0)};
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < d; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

SymplecticMatrix compose_symplectic(std::span<const SymplecticMatrix> factors) {
  if (factors.empty()) throw std::invalid_argument("compose_symplectic: no factors");
  for (const auto& f : factors)
    if (!f.is_symplectic()) throw std::invalid_argument("compose_symplectic: non-symplectic factor");
  SymplecticMatrix acc = factors.front();
  for (size_t k = 1; k < factors.size(); ++k) acc = sym_product(acc, factors[k]);
  return acc;
}

SymplecticMatrix two_mode_squeezer_form(double r) {
  SymplecticMatrix s{2, std::vector<double>(16, 0.0)};
  const double ch = std::cosh(r), sh = std::sinh(r);
  s.at(0, 0) = ch;
  s.at(1, 1) = ch;
  s.at(2, 2) = ch;
  s.at(3, 3) = ch;
  // -sinh r * sigma3 off-diagonal blocks
  s.at(0, 2) = -sh;
  s.at(1, 3) = sh;
  s.at(2, 0) = -sh;
  s.at(3, 1) = sh;
  return s;
}

double max_abs_diff(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  double best = 0.0;
  for (size_t k = 0; k < a.a.size(); ++k) best = std::max(best, std::abs(a.a[k] - b.a[k]));
  return best;
}

}  // namespace ongate
