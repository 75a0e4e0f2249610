#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hybridcomb/error.hpp"
#include "hybridcomb/scattering.hpp"
#include "hybridcomb/secular.hpp"
#include "hybridcomb/transfer.hpp"
#include "oracles.hpp"

using namespace hybridcomb;

namespace {

bool matrix_near(const TransferMatrix& m, double m11, double m12, double m21, double m22, double tol) {
  return std::abs(m.m11 - m11) <= tol && std::abs(m.m12 - m12) <= tol && std::abs(m.m21 - m21) <= tol &&
         std::abs(m.m22 - m22) <= tol;
}

}  // namespace

TEST_CASE("jump matrices") {
  CHECK(matrix_near(jump_matrix(0.0, 0.0), 1, 0, 0, 1, 0.0));
  CHECK(matrix_near(jump_matrix(3.0, 0.0), 1, 0, 3, 1, 0.0));
  const auto j = jump_matrix(-5.0, 0.5);
  CHECK(matrix_near(j, 3.0, 0.0, -5.0 / 0.75, 1.0 / 3.0, 1e-15));
  CHECK(std::abs(j.det() - 1.0) < 1e-15);
  try {
    jump_matrix(1.0, -1.0);
    FAIL("expected OpaqueRegime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OpaqueRegime);
  }
}

TEST_CASE("jump calibration against closed-form amplitudes") {
  for (double k : {0.5, 1.0, 2.0, 5.0}) {
    const auto m = Momentum::real(k);
    const auto via_jump = scattering_from_jump(m, jump_matrix(-5.0, 0.5));
    const auto closed = one_species_amplitudes(m, {-5.0, 0.5, 1.0});
    CHECK(std::abs(via_jump.t - closed.t) < 1e-12);
    CHECK(std::abs(via_jump.rR - closed.rR) < 1e-12);
    CHECK(std::abs(via_jump.rL - closed.rL) < 1e-12);
  }
}

TEST_CASE("conversion of simple jumps") {
  const auto id = scattering_from_jump(Momentum::real(1.3), TransferMatrix::identity());
  CHECK(std::abs(id.t - 1.0) < 1e-15);
  CHECK(std::abs(id.rR) < 1e-15);
  CHECK(std::abs(id.rL) < 1e-15);

  for (double w0 : {-4.0, 0.5, 9.0}) {
    const double k = 1.7;
    const auto s = scattering_from_jump(Momentum::real(k), jump_matrix(w0, 0.0));
    CHECK(std::abs(s.t - k / Complex{k, w0 / 2.0}) < 1e-14);
  }

  try {
    scattering_from_jump(Momentum::imaginary(1.0), TransferMatrix::identity());
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotApplicable);
  }
  try {
    scattering_from_jump(Momentum::real(1.0), TransferMatrix{0.0, 0.0, 0.0, 0.0});
    FAIL("expected SingularConversion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularConversion);
  }
}

TEST_CASE("free propagation") {
  const double pi = std::numbers::pi;
  CHECK(matrix_near(propagation_matrix(pi * pi, 1.0), -1, 0, 0, -1, 1e-14));
  CHECK(matrix_near(propagation_matrix(0.0, 1.0), 1, 1, 0, 1, 0.0));
  CHECK(matrix_near(propagation_matrix(1e-14, 1.0), 1, 1, 0, 1, 1e-13));
  for (double e : {-10.0, -1.0, 0.001, 1.0, 100.0}) {
    CHECK(std::abs(propagation_matrix(e, 1.0).det() - 1.0) < 1e-12);
  }
  const auto hyper = propagation_matrix(-4.0, 0.5);
  CHECK(std::abs(hyper.m11 - std::cosh(1.0)) < 1e-15);
  CHECK(std::abs(hyper.m12 - std::sinh(1.0) / 2.0) < 1e-15);
  CHECK_THROWS_AS(propagation_matrix(1.0, 0.0), Error);
}

TEST_CASE("one-species monodromy") {
  for (double e : {0.3, 4.0, 50.0}) {
    CHECK(std::abs(monodromy_one_species(e, {0.0, 0.0, 1.0}).half_trace() - std::cos(std::sqrt(e))) <
          1e-14);
  }
  const double expected = std::cos(1.0) - 0.25 * std::sin(1.0);
  CHECK(std::abs(monodromy_one_species(1.0, {-0.5, 0.0, 1.0}).half_trace() - expected) < 1e-14);
}

TEST_CASE("two-species monodromy with an empty second node") {
  testing::Draws draws(21);
  for (int i = 0; i < 100; ++i) {
    TwoSpeciesParams p = draws.two_species();
    p.v0 = p.v1 = 0.0;
    const double e = draws.uniform(-20.0, 100.0);
    const double two = monodromy_two_species(e, p).half_trace();
    const double one = monodromy_one_species(e, {p.w0, p.w1, p.a}).half_trace();
    CHECK(std::abs(two - one) < 1e-10 * (1.0 + std::abs(one)));
  }
}

TEST_CASE("property: closed forms equal the monodromy trace") {
  testing::Draws draws(4242);
  double worst1 = 0.0;
  double worst2 = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double e = draws.uniform(-20.0, 100.0);
    const auto p1 = draws.one_species();
    const auto p2 = draws.two_species();
    worst1 = std::max(worst1, std::abs(secular_one_species(e, p1).F - monodromy_one_species(e, p1).half_trace()));
    worst2 = std::max(worst2, std::abs(secular_two_species(e, p2).F - monodromy_two_species(e, p2).half_trace()));
  }
  CHECK(worst1 < 1e-10);
  CHECK(worst2 < 1e-10);
}

TEST_CASE("property: unimodularity and cyclic invariance") {
  testing::Draws draws(6);
  for (int i = 0; i < 500; ++i) {
    const auto p = draws.two_species(5.0, 3.0);
    const double e = draws.uniform(-10.0, 60.0);
    const auto jv = jump_matrix(p.v0, p.v1);
    const auto jw = jump_matrix(p.w0, p.w1);
    const auto pd = propagation_matrix(e, p.d);
    const auto pr = propagation_matrix(e, p.a - p.d);
    const auto m = jv * pd * jw * pr;
    CHECK(std::abs(m.det() - 1.0) < 1e-10 * (1.0 + std::abs(m.m11 * m.m22)));
    const double tr = m.trace();
    for (const auto& rot : {pd * jw * pr * jv, jw * pr * jv * pd, pr * jv * pd * jw}) {
      CHECK(std::abs(rot.trace() - tr) < 1e-12 * (1.0 + std::abs(tr) + std::abs(m.m11 * m.m22)));
    }
  }
}

TEST_CASE("exchange symmetry of the trace") {
  const TwoSpeciesParams p{-5.0, 0.2, 5.0, -0.7, 1.0 / 3.0, 1.0};
  const TwoSpeciesParams q{5.0, -0.7, -5.0, 0.2, 2.0 / 3.0, 1.0};
  for (double e : {-8.0, -0.5, 0.0, 3.0, 21.0, 77.0}) {
    const double t = monodromy_two_species(e, p).half_trace();
    CHECK(std::abs(t - monodromy_two_species(e, q).half_trace()) < 1e-11 * (1.0 + std::abs(t)));
  }
}
