#include "ongate/expm.hpp"

#include <cmath>
#include <stdexcept>

namespace ongate {

CMatrix CMatrix::identity(int n) {
  CMatrix m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix matmul(const CMatrix& A, const CMatrix& B) {
  if (A.n != B.n) throw std::invalid_argument("matmul: dimension mismatch");
  const int n = A.n;
  CMatrix C = CMatrix::zero(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = A.at(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      const cplx* brow = &B.a[size_t(k) * n];
      cplx* crow = &C.a[size_t(i) * n];
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
  return C;
}

std::vector<cplx> matvec(const CMatrix& A, std::span<const cplx> v) {
  if (static_cast<int>(v.size()) != A.n) throw std::invalid_argument("matvec: dimension mismatch");
  std::vector<cplx> out(A.n, cplx(0.0, 0.0));
  for (int i = 0; i < A.n; ++i) {
    cplx acc(0.0, 0.0);
    const cplx* row = &A.a[size_t(i) * A.n];
    for (int j = 0; j < A.n; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

double norm1(const CMatrix& A) {
  double best = 0.0;
  for (int j = 0; j < A.n; ++j) {
    double col = 0.0;
    for (int i = 0; i < A.n; ++i) col += std::abs(A.at(i, j));
    best = std::max(best, col);
  }
  return best;
}

CMatrix expm(const CMatrix& A) {
  const int n = A.n;
  // scale so the Taylor series of the scaled matrix converges at machine
  // precision within ~24 terms
  int s = 0;
  double nrm = norm1(A);
  while (nrm > 0.25) {
    nrm *= 0.5;
    ++s;
  }
  CMatrix As = A;
  const double scale = std::ldexp(1.0, -s);
  for (auto& x : As.a) x *= scale;

  CMatrix X = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k <= 32; ++k) {
    term = matmul(term, As);
    const double inv = 1.0 / k;
    for (auto& x : term.a) x *= inv;
    for (size_t i = 0; i < X.a.size(); ++i) X.a[i] += term.a[i];
    if (norm1(term) < 1e-18 * norm1(X)) break;
  }
  for (int k = 0; k < s; ++k) X = matmul(X, X);
  return X;
}

}  // namespace ongate
