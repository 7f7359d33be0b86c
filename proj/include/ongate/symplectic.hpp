#pragma once

// Real symplectic matrices on the quadrature vector (x1, p1, x2, p2, ...),
// used to validate the optical decomposition of the two-mode squeezer.

#include <span>
#include <vector>

namespace ongate {

struct SymplecticMatrix {
  int modes = 0;
  std::vector<double> a;  // row-major (2m) x (2m)

  int dim() const { return 2 * modes; }
  double& at(int i, int j) { return a[size_t(i) * dim() + j]; }
  double at(int i, int j) const { return a[size_t(i) * dim() + j]; }

  static SymplecticMatrix identity(int modes);
  // diag(e^{-r}, e^{r}): scales x by e^{-r}, p by e^{r}.
  static SymplecticMatrix single_mode_squeeze(double r);
  // Two-mode 50-50-style mixer: block form [[cos I2, sin I2], [-sin I2, cos I2]].
  static SymplecticMatrix beamsplitter(double theta);
  static SymplecticMatrix direct_sum(const SymplecticMatrix& a, const SymplecticMatrix& b);

  bool is_symplectic(double tol = 1e-12) const;  // S^T Omega S = Omega
};

SymplecticMatrix sym_product(const SymplecticMatrix& a, const SymplecticMatrix& b);

// Product of factors, validating each is symplectic; rightmost acts first.
SymplecticMatrix compose_symplectic(std::span<const SymplecticMatrix> factors);

// Expected two-mode-squeezer form: blocks [[cosh r I2, -sinh r s3],
// [-sinh r s3, cosh r I2]] with s3 = diag(1, -1); equals
// BS(pi/4)^{-1} (S(r) + S(r)^{-1}) BS(pi/4).
SymplecticMatrix two_mode_squeezer_form(double r);

double max_abs_diff(const SymplecticMatrix& a, const SymplecticMatrix& b);

}  // namespace ongate
