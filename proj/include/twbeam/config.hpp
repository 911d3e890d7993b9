#pragma once

#include <optional>
#include <string>

#include "twbeam/beam.hpp"
#include "twbeam/sweep.hpp"

namespace twbeam {

/// Configuration file problem; message names the offending key/line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which parameter the `sweep` command varies.
enum class SweepParameter {
  none,
  taper,           // mean-preserving taper ratio on width and thickness
  modulus,         // E endpoint ratio along the preset multiplier path
  density,         // rho endpoint ratio along the preset multiplier path
  location,        // absorber location as a fraction of L
  gradient_index,  // power-law exponent N, endpoints fixed
};

/// Fully validated run configuration. See README for the key-value schema;
/// all keys are SI.
struct RunConfig {
  BeamConfig beam;
  AbsorberConfig absorber;
  ExcitationConfig excitation;

  std::size_t modes = 100;
  std::size_t quadrature_panels = 0;  // 0 = 4 * modes
  std::size_t quadrature_points = 10;
  std::size_t grid_points = 2001;
  double section_margin = 0.05;
  std::optional<double> section_start;
  std::optional<double> section_end;
  std::size_t natfreq_count = 20;
  std::size_t converge_min = 20;
  std::size_t converge_max = 0;  // 0 = modes
  std::size_t converge_step = 10;

  GridAxis k_axis = GridAxis::default_stiffness();
  GridAxis c_axis = GridAxis::default_damping();
  GridAxis f_axis = GridAxis::default_frequency();
  SweepParameter sweep_parameter = SweepParameter::none;
  GridAxis parameter_axis{"parameter", 1.0, 1.0, 1};
  bool write_maps = false;
  double cf_threshold = 0.3;

  std::string output_prefix;

  QuadratureSpec quadrature() const {
    return quadrature_panels == 0
               ? QuadratureSpec::for_basis(modes)
               : QuadratureSpec(quadrature_panels, quadrature_points);
  }

  /// TW section: explicit [solver] override, else absorber-to-tip with the
  /// configured margin.
  Section section() const;

  SweepOptions sweep_options(unsigned threads) const;
};

/// Parses the documented INI-style schema. Errors name the key, the
/// violated constraint, and the line number.
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::string& path);

}  // namespace twbeam
