// Benchmark of the OpenMP kernels against their serial references.
// Reports wall time, speedup, and the maximum absolute difference
// (expected to be exactly zero: both variants share the per-element code).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ongate/circuit.hpp"
#include "ongate/kernels.hpp"
#include "ongate/states.hpp"

using namespace ongate;

namespace {

double now_ms() {
  using clock = std::chrono::high_resolution_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_ms(F&& f, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now_ms();
    f();
    best = std::min(best, now_ms() - t0);
  }
  return best;
}

template <typename T>
double max_abs_diff(const std::vector<T>& a, const std::vector<T>& b) {
  double best = 0.0;
  for (size_t k = 0; k < a.size(); ++k) best = std::max(best, std::abs(a[k] - b[k]));
  return best;
}

void report(const char* name, double ms_serial, double ms_omp, double diff) {
  std::printf("%-22s serial %9.2f ms   omp %9.2f ms   speedup %5.2fx   max|diff| %.3g\n",
              name, ms_serial, ms_omp, ms_serial / ms_omp, diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both variants run serially\n");
#endif

  const Grid g = Grid::default_grid();
  const auto psi = fock_wavefunction(3, g);
  const auto phi = cubic_phase_resource(0.1, g);
  const auto qs = g.points();

  {
    std::vector<double> a, b;
    const double ts = time_ms([&] { a = kernels::serial::homodyne_density(psi.amp, phi.amp, g, qs); });
    const double tp = time_ms([&] { b = kernels::homodyne_density(psi.amp, phi.amp, g, qs); });
    report("homodyne_density", ts, tp, max_abs_diff(a, b));
  }
  {
    std::vector<double> a, b;
    const double ts = time_ms([&] { a = kernels::serial::gate_fidelity_table(psi.amp, g, qs); });
    const double tp = time_ms([&] { b = kernels::gate_fidelity_table(psi.amp, g, qs); });
    report("gate_fidelity_table", ts, tp, max_abs_diff(a, b));
  }
  {
    const Grid wg = Grid::symmetric(4.0, 512);
    const auto xs = wg.points();
    std::vector<double> a, b;
    const double ts = time_ms([&] { a = kernels::serial::wigner_cubic_field(0.1, xs, xs); });
    const double tp = time_ms([&] { b = kernels::wigner_cubic_field(0.1, xs, xs); });
    report("wigner_cubic_field", ts, tp, max_abs_diff(a, b));
  }
  {
    std::vector<cplx> coeffs(61, cplx(0.0, 0.0));
    for (int n = 0; n <= 60; ++n) coeffs[n] = 1.0 / std::sqrt(61.0);
    const Grid fg = Grid::symmetric(12.0, 8192);
    std::vector<cplx> a, b;
    const double ts = time_ms([&] { a = kernels::serial::fock_synthesis(coeffs, fg); });
    const double tp = time_ms([&] { b = kernels::fock_synthesis(coeffs, fg); });
    report("fock_synthesis", ts, tp, max_abs_diff(a, b));
  }
  return 0;
}
