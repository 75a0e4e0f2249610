#include <doctest.h>

#include <cmath>

#include "hybridcomb/error.hpp"
#include "hybridcomb/scattering.hpp"
#include "hybridcomb/transfer.hpp"
#include "oracles.hpp"

using namespace hybridcomb;

namespace {

bool near(Complex x, Complex y, double tol) { return std::abs(x - y) < tol; }

}  // namespace

TEST_CASE("free particle scatters nothing") {
  const auto s = one_species_amplitudes(Momentum::real(1.0), {0.0, 0.0, 1.0});
  CHECK(near(s.t, 1.0, 1e-15));
  CHECK(near(s.rR, 0.0, 1e-15));
  CHECK(near(s.rL, 0.0, 1e-15));
}

TEST_CASE("opaque node reflects everything from the right") {
  for (double w0 : {-7.0, 0.0, 3.0}) {
    const auto s = one_species_amplitudes(Momentum::real(1.0), {w0, 1.0, 1.0});
    CHECK(std::abs(s.t) < 1e-15);
    CHECK(near(s.rR, -1.0, 1e-14));
  }
}

TEST_CASE("one node against direct complex evaluation") {
  // k = 1, w0 = -5, w1 = 0.5: denominator 1.25 - 2.5i.
  const Complex den{1.25, -2.5};
  const Complex t_ref = 0.75 / den;
  const Complex rR_ref = -Complex{1.0, -2.5} / den;
  const Complex rL_ref = Complex{1.0, 2.5} / den;
  const auto s = one_species_amplitudes(Momentum::real(1.0), {-5.0, 0.5, 1.0});
  CHECK(near(s.t, t_ref, 1e-15));
  CHECK(near(s.rR, rR_ref, 1e-15));
  CHECK(near(s.rL, rL_ref, 1e-15));
  CHECK(std::abs(std::norm(s.t) + std::norm(s.rR) - 1.0) < 1e-12);

  // Second route: the matching-condition matrix.
  const auto via_jump = scattering_from_jump(Momentum::real(1.0), jump_matrix(-5.0, 0.5));
  CHECK(near(via_jump.t, s.t, 1e-12));
  CHECK(near(via_jump.rR, s.rR, 1e-12));
  CHECK(near(via_jump.rL, s.rL, 1e-12));
}

TEST_CASE("amplitude errors") {
  CHECK_THROWS_AS(one_species_amplitudes(Momentum::real(0.0), {1.0, 0.0, 1.0}), Error);
  try {
    one_species_amplitudes(Momentum{}, {1.0, 0.0, 1.0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateMomentum);
  }
  // w1 = 0, w0 = -2: the pole sits at k = i·w0·(-1/2) = i.
  try {
    one_species_amplitudes(Momentum::imaginary(1.0), {-2.0, 0.0, 1.0});
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleHit);
  }
  try {
    two_species_amplitudes(Momentum::real(0.0), TwoSpeciesParams{});
    FAIL("expected DegenerateMomentum");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateMomentum);
  }
}

TEST_CASE("two nodes reduce to one when the second is switched off") {
  testing::Draws draws(11);
  for (int i = 0; i < 200; ++i) {
    TwoSpeciesParams p = draws.two_species();
    p.v0 = 0.0;
    p.v1 = 0.0;
    const OneSpeciesParams one{p.w0, p.w1, p.a};
    for (double k : {0.1, 0.7, 2.0, 9.5, 30.0}) {
      const auto two = two_species_amplitudes(Momentum::real(k), p);
      const auto ref = one_species_amplitudes(Momentum::real(k), one);
      CHECK(near(two.t, ref.t, 1e-12));
      // The w node sits at -d/2, so reflections pick up e^{∓ikd} relative to the origin.
      const Complex shift = std::exp(Complex{0.0, k * p.d});
      CHECK(near(two.rR, ref.rR / shift, 1e-12));
      CHECK(near(two.rL, ref.rL * shift, 1e-12));
    }
  }
}

TEST_CASE("two critical nodes are opaque") {
  TwoSpeciesParams p{2.0, 1.0, -3.0, 1.0, 0.4, 1.0};
  for (double k : {0.3, 1.0, 4.0}) {
    CHECK(std::abs(two_species_amplitudes(Momentum::real(k), p).t) < 1e-15);
  }
  p.w1 = -1.0;
  CHECK(std::abs(two_species_amplitudes(Momentum::real(2.0), p).t) < 1e-15);
}

TEST_CASE("two-node amplitudes are unitary") {
  const TwoSpeciesParams p{-5.0, 0.2, 5.0, 0.0, 1.0 / 3.0, 1.0};
  const auto r = unitarity_residuals(two_species_amplitudes(Momentum::real(2.0), p));
  CHECK(r.max() < 1e-12);
}

TEST_CASE("check_unitarity") {
  const auto free = one_species_amplitudes(Momentum::real(2.5), {0.0, 0.0, 1.0});
  CHECK(check_unitarity(free, 1e-12));

  auto scaled = one_species_amplitudes(Momentum::real(1.0), {-5.0, 0.5, 1.0});
  scaled.t *= 1.01;
  CHECK_FALSE(check_unitarity(scaled, 1e-6));

  CHECK(check_unitarity(one_species_amplitudes(Momentum::real(3.0), {7.0, -0.4, 1.0}), 1e-10));

  const auto bound = one_species_amplitudes(Momentum::imaginary(0.5), {-5.0, 0.5, 1.0});
  try {
    check_unitarity(bound, 1e-10);
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotApplicable);
  }
}

TEST_CASE("property: unitarity over random couplings and momenta") {
  testing::Draws draws(2024);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double k = draws.uniform(0.01, 50.0);
    worst = std::max(worst, unitarity_residuals(one_species_amplitudes(Momentum::real(k), draws.one_species())).max());
    worst = std::max(worst, unitarity_residuals(two_species_amplitudes(Momentum::real(k), draws.two_species())).max());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("property: transmission vanishes linearly at critical coupling") {
  // |t| / |w1² - 1| stays bounded as w1 → ±1.
  for (double sign : {1.0, -1.0}) {
    for (double delta : {1e-2, 1e-4, 1e-6, 1e-8}) {
      const double w1 = sign * (1.0 - delta);
      for (double k : {0.2, 1.0, 5.0, 20.0}) {
        const auto s = one_species_amplitudes(Momentum::real(k), {3.0, w1, 1.0});
        CHECK(std::abs(s.t) <= 1.0 * std::abs(w1 * w1 - 1.0));
      }
    }
  }
}

TEST_CASE("property: reflections differ whenever the node is asymmetric") {
  testing::Draws draws(5);
  for (int i = 0; i < 100; ++i) {
    OneSpeciesParams p = draws.one_species();
    if (std::abs(p.w1) < 1e-3) continue;
    const auto s = one_species_amplitudes(Momentum::real(draws.uniform(0.1, 10.0)), p);
    CHECK(std::abs(s.rR - s.rL) > 1e-6);
  }
}

TEST_CASE("momentum convention") {
  CHECK(Momentum::from_energy(4.0).value() == Complex{2.0, 0.0});
  CHECK(Momentum::from_energy(-9.0).value() == Complex{0.0, 3.0});
  CHECK(Momentum::from_energy(0.0).is_zero());
  CHECK(Momentum::from_energy(-9.0).energy() == doctest::Approx(-9.0));
  CHECK_THROWS_AS(Momentum::real(-1.0), Error);
}
