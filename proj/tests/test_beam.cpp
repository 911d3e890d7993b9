#include <random>

#include "doctest.h"
#include "twbeam/beam.hpp"

using namespace twbeam;

TEST_CASE("power-law profile evaluation") {
  const double L = 2.0;

  SUBCASE("linear midpoint") {
    PowerLawProfile p(10.0, 4.0, 1.0);
    CHECK(p.evaluate(L / 2, L) == doctest::Approx(7.0).epsilon(1e-15));
  }
  SUBCASE("endpoint identity") {
    PowerLawProfile p(10.0, 4.0, 1.0);
    CHECK(p.evaluate(0.0, L) == 10.0);
    CHECK(p.evaluate(L, L) == 4.0);
  }
  SUBCASE("quadratic midpoint") {
    PowerLawProfile p(16.0, 4.0, 2.0);
    CHECK(p.evaluate(L / 2, L) == doctest::Approx(13.0).epsilon(1e-15));
  }
  SUBCASE("domain error outside [0, L]") {
    PowerLawProfile p(1.0, 2.0);
    CHECK_THROWS_AS(p.evaluate(-0.01, L), std::domain_error);
    CHECK_THROWS_AS(p.evaluate(L + 0.01, L), std::domain_error);
  }
}

TEST_CASE("power-law profile invariants") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> val(0.1, 100.0);
  std::uniform_real_distribution<double> idx(0.05, 8.0);
  std::uniform_real_distribution<double> xs(0.0, 1.0);
  const double L = 1.7;

  for (int trial = 0; trial < 200; ++trial) {
    PowerLawProfile p(val(rng), val(rng), idx(rng));
    const double lo = std::min(p.left(), p.right());
    const double hi = std::max(p.left(), p.right());
    double prev = p.evaluate(0.0, L);
    for (int j = 1; j <= 50; ++j) {
      const double x = L * j / 50.0;
      const double v = p.evaluate(x, L);
      CHECK(v >= lo);
      CHECK(v <= hi);
      if (p.left() < p.right()) CHECK(v > prev);   // strictly monotone
      if (p.left() > p.right()) CHECK(v < prev);
      prev = v;
    }
  }

  // constant profile returns left for every x and N
  PowerLawProfile c(3.5, 3.5, 4.2);
  for (int j = 0; j <= 10; ++j) CHECK(c.evaluate(L * j / 10.0, L) == 3.5);
}

TEST_CASE("profile construction rejects degenerate inputs") {
  CHECK_THROWS_AS(PowerLawProfile(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PowerLawProfile(1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(PowerLawProfile(1.0, 2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PowerLawProfile(1.0, 2.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(BeamConfig::uniform(0.0, 1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(AbsorberConfig(0.5, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(AbsorberConfig(0.5, 0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ExcitationConfig(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("section area and inertia") {
  const BeamConfig table1 = BeamConfig::uniform(2.0, 30e-3, 10e-3, 71e9, 2700);

  SUBCASE("uniform beam has constant area 3e-4") {
    for (double x : {0.0, 0.3, 1.0, 2.0})
      CHECK(section_area(table1, x) == doctest::Approx(3.0e-4).epsilon(1e-14));
  }
  SUBCASE("ratio-16 taper") {
    BeamConfig taper(2.0, PowerLawProfile(48e-3, 12e-3),
                     PowerLawProfile(16e-3, 4e-3),
                     PowerLawProfile::constant(71e9),
                     PowerLawProfile::constant(2700));
    CHECK(section_area(taper, 0.0) / section_area(taper, 2.0) ==
          doctest::Approx(16.0).epsilon(1e-12));
  }
  SUBCASE("inertia of the uniform beam") {
    CHECK(section_inertia(table1, 1.0) ==
          doctest::Approx(2.5e-9).epsilon(1e-12));
  }
  SUBCASE("inertia scales linearly in width, cubically in thickness") {
    const BeamConfig wide = BeamConfig::uniform(2.0, 60e-3, 10e-3, 71e9, 2700);
    const BeamConfig thick = BeamConfig::uniform(2.0, 30e-3, 20e-3, 71e9, 2700);
    for (double x : {0.0, 0.7, 2.0}) {
      CHECK(section_inertia(wide, x) ==
            doctest::Approx(2.0 * section_inertia(table1, x)));
      CHECK(section_inertia(thick, x) ==
            doctest::Approx(8.0 * section_inertia(table1, x)));
    }
  }
  SUBCASE("domain error outside the beam") {
    CHECK_THROWS_AS(section_area(table1, -1.0), std::domain_error);
    CHECK_THROWS_AS(section_inertia(table1, 2.5), std::domain_error);
  }
}
