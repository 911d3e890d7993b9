#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "twbeam/config.hpp"
#include "twbeam/csv.hpp"

using namespace twbeam;

namespace {

const char* kTable1Config = R"(
# uniform aluminium beam
[beam]
length = 2.0
width_left = 0.03
thickness_left = 0.01
modulus_left = 71e9
density_left = 2700

[absorber]
location = 0.8
stiffness = 5.625e6
damping = 875

[excitation]
frequency = 3400
)";

}  // namespace

TEST_CASE("parsing the canonical uniform-beam config") {
  const RunConfig cfg = parse_config(kTable1Config);
  CHECK(cfg.beam.length == 2.0);
  CHECK(cfg.beam.width.left() == 0.03);
  CHECK(cfg.beam.width.right() == 0.03);  // defaults to left
  CHECK(cfg.beam.thickness.left() == 0.01);
  CHECK(cfg.beam.modulus.left() == 71e9);
  CHECK(cfg.beam.density.left() == 2700.0);
  CHECK(cfg.absorber.location == 0.8);
  CHECK(cfg.absorber.stiffness == 5.625e6);
  CHECK(cfg.absorber.damping == 875.0);
  CHECK(cfg.excitation.frequency == 3400.0);
  CHECK(cfg.excitation.amplitude == 1.0);  // default

  SUBCASE("documented defaults") {
    CHECK(cfg.modes == 100);
    CHECK(cfg.quadrature().panels == 400);
    CHECK(cfg.quadrature().points_per_panel == 10);
    CHECK(cfg.grid_points == 2001);
    CHECK(cfg.section_margin == 0.05);
    CHECK(cfg.k_axis.count == 100);
    CHECK(cfg.c_axis.count == 100);
    CHECK(cfg.sweep_parameter == SweepParameter::none);  // single-run mode
  }
  SUBCASE("derived section") {
    const Section s = cfg.section();
    CHECK(s.start == doctest::Approx(0.9));
    CHECK(s.end == doctest::Approx(1.9));
  }
}

TEST_CASE("config validation errors name the offender") {
  SUBCASE("negative thickness") {
    std::string bad(kTable1Config);
    bad.replace(bad.find("thickness_left = 0.01"), 21,
                "thickness_left = -0.01");
    CHECK_THROWS_WITH_AS(parse_config(bad),
                         doctest::Contains("thickness"), ConfigError);
  }
  SUBCASE("unknown key") {
    CHECK_THROWS_WITH_AS(
        parse_config(std::string(kTable1Config) + "\n[solver]\nmoodes = 3\n"),
        doctest::Contains("moodes"), ConfigError);
  }
  SUBCASE("missing required key") {
    CHECK_THROWS_WITH_AS(parse_config("[beam]\nlength = 2\n"),
                         doctest::Contains("width_left"), ConfigError);
  }
  SUBCASE("unknown section") {
    CHECK_THROWS_WITH_AS(parse_config("[beams]\nlength = 2\n"),
                         doctest::Contains("beams"), ConfigError);
  }
  SUBCASE("duplicate key reports the line") {
    CHECK_THROWS_WITH_AS(
        parse_config("[beam]\nlength = 2\nlength = 3\n"),
        doctest::Contains("line 3"), ConfigError);
  }
  SUBCASE("absorber location outside the beam") {
    std::string bad(kTable1Config);
    bad.replace(bad.find("location = 0.8"), 14, "location = 2.8");
    CHECK_THROWS_WITH_AS(parse_config(bad),
                         doctest::Contains("location"), ConfigError);
  }
  SUBCASE("non-numeric value") {
    std::string bad(kTable1Config);
    bad.replace(bad.find("frequency = 3400"), 16, "frequency = fast");
    CHECK_THROWS_WITH_AS(parse_config(bad),
                         doctest::Contains("frequency"), ConfigError);
  }
}

TEST_CASE("sweep section of the config") {
  const std::string text = std::string(kTable1Config) + R"(
[sweep]
parameter = taper
param_min = 1
param_max = 4
param_count = 7
k_count = 25
write_maps = true
)";
  const RunConfig cfg = parse_config(text);
  CHECK(cfg.sweep_parameter == SweepParameter::taper);
  CHECK(cfg.parameter_axis.count == 7);
  CHECK(cfg.parameter_axis.max == 4.0);
  CHECK(cfg.k_axis.count == 25);
  CHECK(cfg.write_maps);
}

TEST_CASE("csv writer") {
  SUBCASE("empty table is header-only") {
    CsvWriter w({"a", "b"});
    CHECK(w.str() == "a,b\n");
  }
  SUBCASE("single row with comment header") {
    CsvWriter w({"x_m", "w_m"});
    w.add_comment("f_hz = 3400");
    w.add_row({1.0, 2.5});
    CHECK(w.str() == "# f_hz = 3400\nx_m,w_m\n1,2.5\n");
  }
  SUBCASE("values round-trip bitwise") {
    CsvWriter w({"v"});
    const double vals[] = {1.0 / 3.0, 6.02214076e23, -2.5e-17,
                           0.1 + 0.2, 3.14159265358979323846};
    for (double v : vals) w.add_row(std::vector<double>{v});
    std::string s = w.str();
    // skip the header line, re-parse each row
    std::size_t pos = s.find('\n') + 1;
    for (double v : vals) {
      const std::size_t end = s.find('\n', pos);
      const double parsed = std::strtod(s.substr(pos, end - pos).c_str(),
                                        nullptr);
      CHECK(parsed == v);
      pos = end + 1;
    }
  }
  SUBCASE("non-finite values are rejected") {
    CsvWriter w({"v"});
    CHECK_THROWS_AS(w.add_row(std::vector<double>{std::nan("")}),
                    std::invalid_argument);
  }
}
