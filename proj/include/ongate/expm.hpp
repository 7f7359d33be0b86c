#pragma once

#include <span>
#include <vector>

#include "ongate/grid.hpp"

namespace ongate {

// Small dense complex matrix, row-major. Sized for truncated single-mode
// operators (dimension <= a few hundred).
struct CMatrix {
  int n = 0;
  std::vector<cplx> a;

  static CMatrix zero(int n) { return CMatrix{n, std::vector<cplx>(size_t(n) * n)}; }
  static CMatrix identity(int n);

  cplx& at(int i, int j) { return a[size_t(i) * n + j]; }
  const cplx& at(int i, int j) const { return a[size_t(i) * n + j]; }
};

CMatrix matmul(const CMatrix& A, const CMatrix& B);
std::vector<cplx> matvec(const CMatrix& A, std::span<const cplx> v);
double norm1(const CMatrix& A);  // max column sum

// exp(A) by scaling and squaring with a machine-precision Taylor kernel.
CMatrix expm(const CMatrix& A);

}  // namespace ongate
