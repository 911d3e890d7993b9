#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "doctest.h"
#include "twbeam/wave_metrics.hpp"

using namespace twbeam;

namespace {

Envelope sampled(double length, std::size_t points,
                 const std::function<double(double)>& f) {
  std::vector<double> grid = uniform_grid(length, points);
  std::vector<double> mag(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) mag[j] = f(grid[j]);
  return Envelope::from_magnitude(std::move(grid), std::move(mag));
}

}  // namespace

TEST_CASE("extrema detection") {
  const double L = 1.0;

  SUBCASE("|sin| pattern: peaks at odd half-wavelengths, zero valleys") {
    const double ell = 0.2;
    const Envelope env = sampled(L, 2001, [&](double x) {
      return std::abs(std::sin(std::numbers::pi * x / ell));
    });
    const auto ext = extrema(env, Section(0.01, 0.99));
    REQUIRE(ext.size() > 4);
    for (std::size_t i = 1; i < ext.size(); ++i)
      CHECK(ext[i].kind != ext[i - 1].kind);  // alternating
    for (const auto& e : ext) {
      if (e.kind == ExtremumKind::peak)
        CHECK(e.value == doctest::Approx(1.0).epsilon(1e-5));
      else
        CHECK(e.value < 1e-2);
    }
  }
  SUBCASE("constant envelope has no extrema") {
    const Envelope env = sampled(L, 501, [](double) { return 3.0; });
    CHECK(extrema(env, Section(0.0, 1.0)).empty());
  }
  SUBCASE("A + B|cos| alternates between A+B and A") {
    const double A = 2.0, B = 0.5;
    const Envelope env = sampled(L, 4001, [&](double x) {
      return A + B * std::abs(std::cos(8.0 * std::numbers::pi * x));
    });
    for (const auto& e : extrema(env, Section(0.0, 1.0))) {
      if (e.kind == ExtremumKind::peak)
        CHECK(e.value == doctest::Approx(A + B).epsilon(1e-4));
      else
        CHECK(e.value == doctest::Approx(A).epsilon(1e-4));
    }
  }
  SUBCASE("plateaus collapse to their midpoint") {
    std::vector<double> grid = uniform_grid(1.0, 11);
    std::vector<double> mag = {0, 1, 2, 2, 2, 1, 0, 1, 2, 1, 0};
    const Envelope env =
        Envelope::from_magnitude(std::move(grid), std::move(mag));
    const auto ext = extrema(env, Section(0.0, 1.0));
    REQUIRE(ext.size() == 3);
    CHECK(ext[0].kind == ExtremumKind::peak);
    CHECK(ext[0].x == doctest::Approx(0.3));  // midpoint of the 2-plateau
    CHECK(ext[1].kind == ExtremumKind::valley);
    CHECK(ext[2].kind == ExtremumKind::peak);
  }
}

TEST_CASE("cost function") {
  const double L = 1.0;

  SUBCASE("constant envelope is a pure traveling wave") {
    const Envelope env = sampled(L, 501, [](double) { return 1.5; });
    CHECK(cost_function(env, Section(0.0, 1.0)) == 0.0);
  }
  SUBCASE("zero-valley envelope is a pure standing wave") {
    const Envelope env = sampled(L, 4001, [](double x) {
      return std::abs(std::sin(10.0 * std::numbers::pi * x));
    });
    CHECK(cost_function(env, Section(0.0, 1.0)) ==
          doctest::Approx(1.0).epsilon(1e-3));
  }
  SUBCASE("peaks A+B, valleys A give B/(2A+B)") {
    const double A = 2.0, B = 0.5;
    const Envelope env = sampled(L, 4001, [&](double x) {
      return A + B * std::abs(std::cos(8.0 * std::numbers::pi * x));
    });
    CHECK(cost_function(env, Section(0.0, 1.0)) ==
          doctest::Approx(B / (2 * A + B)).epsilon(1e-3));
  }
  SUBCASE("all-zero envelope returns 0 by convention") {
    std::vector<double> grid = uniform_grid(1.0, 11);
    std::vector<double> mag(11, 0.0);
    const Envelope env =
        Envelope::from_magnitude(std::move(grid), std::move(mag));
    CHECK(cost_function(env, Section(0.0, 1.0)) == 0.0);
  }
  SUBCASE("fallback on a monotone (extremum-free) section") {
    const Envelope env = sampled(L, 501, [](double x) { return 1.0 + x; });
    CHECK(cost_function(env, Section(0.0, 1.0)) ==
          doctest::Approx((2.0 - 1.0) / (2.0 + 1.0)).epsilon(1e-9));
  }
  SUBCASE("empty section is an error") {
    const Envelope env = sampled(L, 501, [](double) { return 1.0; });
    CHECK_THROWS_AS(cost_function(env, Section(2.0, 3.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("cost function invariants") {
  std::mt19937 rng(11);

  SUBCASE("scale invariance and range [0, 1]") {
    for (int trial = 0; trial < 50; ++trial) {
      std::uniform_real_distribution<double> amp(0.0, 3.0);
      std::uniform_real_distribution<double> freq(2.0, 30.0);
      const double a = amp(rng), b = amp(rng), w = freq(rng);
      const Envelope env = sampled(1.0, 1501, [&](double x) {
        return a + b * std::abs(std::cos(w * x));
      });
      const double cf = cost_function(env, Section(0.0, 1.0));
      CHECK(cf >= 0.0);
      CHECK(cf <= 1.0);

      Envelope scaled = env;
      for (auto& m : scaled.magnitude) m *= 7.25;
      CHECK(cost_function(scaled, Section(0.0, 1.0)) ==
            doctest::Approx(cf).epsilon(1e-12));
    }
  }
  SUBCASE("stable under grid refinement") {
    const auto f = [](double x) {
      return 1.0 + 0.4 * std::abs(std::cos(40.0 * x));
    };
    const double coarse = cost_function(sampled(1.0, 2001, f),
                                        Section(0.0, 1.0));
    const double fine = cost_function(sampled(1.0, 4001, f),
                                      Section(0.0, 1.0));
    CHECK(std::abs(coarse - fine) < 1e-3);
  }
  SUBCASE("monotone in the standing-wave admixture") {
    // W = e^{-i kappa x} + s cos(kappa x): envelope peaks 1+s, valleys 1,
    // so CF should grow with s.
    const double kappa = 12.0 * std::numbers::pi;
    double prev = -1.0;
    for (double s : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
      std::vector<double> grid = uniform_grid(1.0, 3001);
      std::vector<std::complex<double>> field(grid.size());
      for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid[j];
        field[j] = std::exp(std::complex<double>(0.0, -kappa * x)) +
                   s * std::cos(kappa * x);
      }
      const Envelope env = Envelope::from_field(std::move(grid),
                                                std::move(field));
      const double cf = cost_function(env, Section(0.05, 0.95));
      CHECK(cf > prev);
      prev = cf;
    }
  }
}

TEST_CASE("default TW section") {
  CHECK(default_tw_section(0.4 * 2.0, 2.0).start == doctest::Approx(0.9));
  CHECK(default_tw_section(0.4 * 2.0, 2.0).end == doctest::Approx(1.9));
  CHECK(default_tw_section(0.8, 2.0, 0.0).start == doctest::Approx(0.8));
  CHECK(default_tw_section(0.8, 2.0, 0.0).end == doctest::Approx(2.0));
  CHECK_THROWS_AS(default_tw_section(0.96 * 2.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(default_tw_section(0.0, 2.0), std::invalid_argument);
}

TEST_CASE("envelope nodes include the clamped end") {
  const Envelope env = sampled(1.0, 4001, [](double x) {
    return std::abs(std::sin(8.0 * std::numbers::pi * x));
  });
  const auto nodes = envelope_nodes(env);
  REQUIRE(nodes.size() >= 8);
  CHECK(nodes.front() == 0.0);
  CHECK(nodes[1] == doctest::Approx(0.125).epsilon(1e-3));
}
