#include <doctest.h>

#include <limits>

#include "hybridcomb/error.hpp"
#include "hybridcomb/params.hpp"

using namespace hybridcomb;

TEST_CASE("critical coupling detection") {
  CHECK(is_critical_coupling(1.0));
  CHECK(is_critical_coupling(-1.0 + 1e-10));
  CHECK_FALSE(is_critical_coupling(1.0 + 1e-8));
  CHECK(OneSpeciesParams{0.0, -1.0, 1.0}.is_opaque());
  CHECK(TwoSpeciesParams{0.0, 0.0, 0.0, 1.0, 0.5, 1.0}.is_opaque());
  CHECK_FALSE(TwoSpeciesParams{}.is_opaque());
}

TEST_CASE("parameter validation") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(OneSpeciesParams({1.0, 0.0, 0.0}).validate(), Error);
  CHECK_THROWS_AS(OneSpeciesParams({nan, 0.0, 1.0}).validate(), Error);
  CHECK_THROWS_AS(TwoSpeciesParams({0, 0, 0, 0, 1.0, 1.0}).validate(), Error);
  CHECK_THROWS_AS(TwoSpeciesParams({0, 0, 0, 0, 0.0, 1.0}).validate(), Error);
  CHECK_NOTHROW(TwoSpeciesParams({0, 0, 0, 0, 0.3, 1.0}).validate());
  try {
    require_band_mode(OneSpeciesParams{0.0, 1.0, 1.0});
    FAIL("expected OpaqueRegime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OpaqueRegime);
    CHECK(std::string(e.what()).find("OpaqueRegime") == 0);
  }
}

TEST_CASE("error kinds have names") {
  CHECK(to_string(ErrorKind::GridTooLarge) == "GridTooLarge");
  CHECK(to_string(ErrorKind::NonPositiveInput) == "NonPositiveInput");
}
