#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ongate/errors.hpp"
#include "ongate/fock.hpp"
#include "ongate/symplectic.hpp"

using namespace ongate;

TEST_CASE("matrix exponential basics") {
  // rotation generator [[0, -t], [t, 0]] exponentiates to cos/sin
  const double t = 0.83;
  CMatrix a = CMatrix::zero(2);
  a.at(0, 1) = -t;
  a.at(1, 0) = t;
  const CMatrix e = expm(a);
  CHECK(e.at(0, 0).real() == doctest::Approx(std::cos(t)).epsilon(1e-14));
  CHECK(e.at(0, 1).real() == doctest::Approx(-std::sin(t)).epsilon(1e-14));
  CHECK(e.at(1, 0).real() == doctest::Approx(std::sin(t)).epsilon(1e-14));

  const CMatrix id = expm(CMatrix::zero(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(id.at(i, j) == cplx(i == j ? 1.0 : 0.0, 0.0));
}

TEST_CASE("ladder operators") {
  SUBCASE("a |1> = |0>") {
    const auto out = annihilate(fock_basis(1, 10));
    CHECK(std::abs(out.c[0] - cplx(1.0, 0.0)) < 1e-15);
    CHECK(out.norm2() == doctest::Approx(1.0));
  }
  SUBCASE("a |0> = 0") {
    CHECK(annihilate(fock_basis(0, 10)).norm2() == 0.0);
  }
  SUBCASE("coherent states are annihilation eigenstates") {
    const cplx alpha(0.5, 0.0);
    const auto v = coherent_fock(alpha, 30);
    const auto av = annihilate(v);
    FockVector scaled = v;
    for (auto& c : scaled.c) c *= alpha;
    CHECK(fock_fidelity(av, scaled) >= 1.0 - 1e-10);
  }
  SUBCASE("commutator expectation <[a, a^dag]> = 1 under the tail guard") {
    const auto v = coherent_fock(cplx(0.8, 0.3), 40);
    double aadag = 0.0, adaga = 0.0;
    for (int n = 0; n <= v.cutoff; ++n) {
      if (n < v.cutoff) aadag += (n + 1.0) * std::norm(v.c[n]);  // truncated a a^dag
      adaga += n * std::norm(v.c[n]);
    }
    CHECK(std::abs(aadag - adaga - 1.0) < 1e-8);
  }
}

TEST_CASE("displacement operator") {
  SUBCASE("beta = 0 is the identity") {
    const auto v = coherent_fock(cplx(0.4, 0.2), 30);
    const auto w = displace(v, cplx(0.0, 0.0));
    double worst = 0.0;
    for (int n = 0; n <= 30; ++n) worst = std::max(worst, std::abs(w.c[n] - v.c[n]));
    CHECK(worst < 1e-15);
  }
  SUBCASE("D(1)|0> is the coherent state with alpha = 1") {
    const auto w = displace(fock_basis(0, 40), cplx(1.0, 0.0));
    const auto oracle = coherent_fock(cplx(1.0, 0.0), 40);
    double worst = 0.0;
    for (int n = 0; n <= 40; ++n) worst = std::max(worst, std::abs(w.c[n] - oracle.c[n]));
    CHECK(worst < 1e-8);
    CHECK(w.norm2() == doctest::Approx(1.0).epsilon(1e-12));  // unitary within truncation
  }
  SUBCASE("inverse pair") {
    const auto v = coherent_fock(cplx(0.3, -0.4), 40);
    const auto w = displace(displace(v, cplx(0.7, 0.2)), cplx(-0.7, -0.2));
    CHECK(fock_fidelity(v, w) >= 1.0 - 1e-10);
  }
  SUBCASE("tail guard raises the cutoff warning") {
    const auto w = displace(fock_basis(0, 12), cplx(4.0, 0.0));
    CHECK(w.tail_warning);
  }
}

TEST_CASE("beam splitter") {
  SUBCASE("vacuum is unchanged") {
    const auto v = beamsplitter(tensor(fock_basis(0, 8), fock_basis(0, 8)), 0.7);
    CHECK(std::abs(v.at(0, 0) - cplx(1.0, 0.0)) < 1e-14);
    CHECK(v.norm2() == doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("total photon number is conserved") {
    auto v = tensor(coherent_fock(cplx(0.5, 0.1), 20), fock_basis(1, 20));
    double before = 0.0, after = 0.0;
    for (int m = 0; m <= 20; ++m)
      for (int n = 0; n <= 20; ++n) before += (m + n) * std::norm(v.at(m, n));
    const auto w = beamsplitter(v, 0.4);
    for (int m = 0; m <= 20; ++m)
      for (int n = 0; n <= 20; ++n) after += (m + n) * std::norm(w.at(m, n));
    CHECK(std::abs(before - after) < 1e-10);
  }
  SUBCASE("single photon at theta = pi/4 splits evenly") {
    const auto w = beamsplitter(tensor(fock_basis(1, 4), fock_basis(0, 4)), M_PI / 4.0);
    // 2x2 rotation oracle: |1,0> -> cos|1,0> - sin|0,1>
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(w.at(1, 0) - cplx(s, 0.0)) < 1e-10);
    CHECK(std::abs(w.at(0, 1) + cplx(s, 0.0)) < 1e-10);
    CHECK(std::norm(w.at(1, 0)) + std::norm(w.at(0, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("two-mode squeezed vacuum") {
  SUBCASE("r = 0 gives vacuum") {
    const auto v = tmss(0.0, 10, 10);
    CHECK(std::abs(v.at(0, 0) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(v.norm2() == doctest::Approx(1.0));
  }
  SUBCASE("geometric coefficient ratio tanh r") {
    const double r = 0.55;
    const auto v = tmss(r, 20, 20);
    for (int n = 0; n + 1 <= 20; ++n)
      CHECK(std::abs(v.at(n + 1, n + 1) / v.at(n, n) - std::tanh(r)) < 1e-12);
  }
  SUBCASE("normalized at cutoff 40") {
    CHECK(tmss(0.55, 40, 40).norm2() == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("exponential route matches the closed form") {
    const double r = 0.35;
    const auto direct = tmss(r, 30, 30);
    const auto evolved = two_mode_squeeze(tensor(fock_basis(0, 30), fock_basis(0, 30)), r);
    cplx ip(0.0, 0.0);
    for (size_t k = 0; k < direct.c.size(); ++k) ip += std::conj(direct.c[k]) * evolved.c[k];
    CHECK(std::abs(ip) >= 1.0 - 1e-8);
  }
}

TEST_CASE("single-mode squeeze has even support only") {
  const auto v = single_mode_squeeze(fock_basis(0, 20), 0.3);
  for (int n = 1; n <= 20; n += 2) CHECK(std::abs(v.c[n]) < 1e-14);
  CHECK(std::norm(v.c[2]) > 1e-4);
  CHECK(v.norm2() == doctest::Approx(1.0).epsilon(1e-12));

  const auto id = single_mode_squeeze(fock_basis(3, 20), 0.0);
  CHECK(std::abs(id.c[3] - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("postselection") {
  SUBCASE("vacuum projects onto vacuum with probability one") {
    const auto [res, p] = postselect(tensor(fock_basis(0, 6), fock_basis(0, 6)), 2, 0);
    CHECK(p == doctest::Approx(1.0));
    CHECK(std::abs(res.c[0] - cplx(1.0, 0.0)) < 1e-15);
  }
  SUBCASE("TMSS outcome probabilities follow sech^2 tanh^{2k}") {
    const double r = 0.62;
    const auto v = tmss(r, 30, 30);
    const double sech2 = 1.0 / (std::cosh(r) * std::cosh(r));
    double total = 0.0;
    for (int k = 0; k <= 30; ++k) {
      const auto [res, p] = postselect(v, 2, k);
      const double expected = sech2 * std::pow(std::tanh(r), 2 * k);
      CHECK(std::abs(p - expected) < 1e-12);
      CHECK(fock_fidelity(res, fock_basis(k, 30)) >= 1.0 - 1e-12);
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("fock to position round trips") {
  const Grid g = Grid::default_grid();
  SUBCASE("|0> gives the vacuum wavefunction") {
    const auto psi = fock_to_position(fock_basis(0, 5), g);
    const auto vac = fock_wavefunction(0, g);
    double worst = 0.0;
    for (int k = 0; k < g.n_points; ++k) worst = std::max(worst, std::abs(psi.amp[k] - vac.amp[k]));
    CHECK(worst < 1e-14);
  }
  SUBCASE("c(|0> + a|3>) matches the direct ON construction") {
    const auto spec = on3_spec(0.1);
    FockVector v{3, {cplx(spec.normalization(), 0.0), 0.0, 0.0, spec.normalization() * spec.a},
                 true, false};
    const auto psi = fock_to_position(v, g);
    const auto direct = on_wavefunction(spec, g);
    double worst = 0.0;
    for (int k = 0; k < g.n_points; ++k)
      worst = std::max(worst, std::abs(psi.amp[k] - direct.amp[k]));
    CHECK(worst < 1e-10);
  }
  SUBCASE("norm is preserved") {
    const auto v = coherent_fock(cplx(0.9, 0.0), 40);
    CHECK(fock_to_position(v, g).norm2() == doctest::Approx(v.norm2()).epsilon(1e-8));
  }
}

TEST_CASE("cutoff doubling does not move fidelities") {
  const auto a40 = displace(fock_basis(0, 40), cplx(0.8, 0.2));
  const auto b40 = displace(fock_basis(1, 40), cplx(0.8, 0.2));
  const auto a80 = displace(fock_basis(0, 80), cplx(0.8, 0.2));
  const auto b80 = displace(fock_basis(1, 80), cplx(0.8, 0.2));
  CHECK(std::abs(fock_fidelity(a40, b40) - fock_fidelity(a80, b80)) < 1e-8);
}

TEST_CASE("partial trace of a product state is pure") {
  const auto v = tensor(coherent_fock(cplx(0.5, 0.0), 12), fock_basis(2, 6));
  const auto rho = partial_trace_mode2(v);
  CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rho.fidelity_pure(coherent_fock(cplx(0.5, 0.0), 12)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("symplectic identities") {
  SUBCASE("builders are symplectic") {
    CHECK(SymplecticMatrix::identity(2).is_symplectic());
    CHECK(SymplecticMatrix::single_mode_squeeze(0.7).is_symplectic());
    CHECK(SymplecticMatrix::beamsplitter(M_PI / 4.0).is_symplectic());
  }
  SUBCASE("r = 0 composes to the identity") {
    const auto s = SymplecticMatrix::direct_sum(SymplecticMatrix::single_mode_squeeze(0.0),
                                                SymplecticMatrix::single_mode_squeeze(0.0));
    const SymplecticMatrix factors[] = {SymplecticMatrix::beamsplitter(-M_PI / 4.0), s,
                                        SymplecticMatrix::beamsplitter(M_PI / 4.0)};
    const auto prod = compose_symplectic(factors);
    CHECK(max_abs_diff(prod, SymplecticMatrix::identity(2)) < 1e-14);
  }
  SUBCASE("beam-splitter conjugation of opposite squeezers is the two-mode squeezer") {
    const double r = 0.5;
    const auto s = SymplecticMatrix::direct_sum(SymplecticMatrix::single_mode_squeeze(r),
                                                SymplecticMatrix::single_mode_squeeze(-r));
    const SymplecticMatrix factors[] = {SymplecticMatrix::beamsplitter(-M_PI / 4.0), s,
                                        SymplecticMatrix::beamsplitter(M_PI / 4.0)};
    const auto prod = compose_symplectic(factors);
    CHECK(max_abs_diff(prod, two_mode_squeezer_form(r)) < 1e-12);
    CHECK(prod.is_symplectic(1e-12));
  }
  SUBCASE("non-symplectic input is rejected") {
    SymplecticMatrix bad = SymplecticMatrix::identity(1);
    bad.at(0, 0) = 2.0;  // breaks S^T Omega S = Omega
    const SymplecticMatrix factors[] = {bad};
    CHECK_THROWS_AS(compose_symplectic(factors), std::invalid_argument);
  }
}
