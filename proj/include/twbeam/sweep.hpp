#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "twbeam/assembly.hpp"
#include "twbeam/beam.hpp"
#include "twbeam/solver.hpp"
#include "twbeam/wave_metrics.hpp"

namespace twbeam {

/// One sweep axis; `count` samples between min and max, linearly or
/// geometrically spaced.
struct GridAxis {
  enum class Scale { linear, logarithmic };

  std::string name;
  double min;
  double max;
  std::size_t count;
  Scale scale;

  GridAxis(std::string name_, double min_, double max_, std::size_t count_,
           Scale scale_ = Scale::linear);

  std::vector<double> values() const;

  /// Paper-spanning defaults: k log over [1e4, 3e7] N/m, c linear over
  /// [1, 5000] N.s/m, 100 cells each.
  static GridAxis default_stiffness();
  static GridAxis default_damping();
  static GridAxis default_frequency();  // 300-3400 Hz, 10 Hz steps
};

/// Cost-function values over a (k, c) grid at one excitation frequency.
/// flags marks cells where the rank-1 update degenerated and a direct
/// solve was used instead.
struct CFMap {
  GridAxis k_axis;
  GridAxis c_axis;
  double frequency;                                  // Hz
  Eigen::MatrixXd values;                            // count_k x count_c
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> flags;

  double min_value() const { return values.minCoeff(); }
};

/// Fraction of grid cells with CF <= threshold.
double optimal_region_measure(const CFMap& map, double threshold = 0.3);

/// Evaluation settings shared by all sweeps.
struct SweepOptions {
  std::size_t grid_points = 2001;  // envelope samples over [0, L]
  double section_margin = 0.05;    // default TW section trim, fraction of L
  bool use_default_section = true;
  Section section{0.0, 1.0};       // used when use_default_section is false
  unsigned threads = 0;            // 0 = hardware concurrency
};

/// CF at every (k, c) cell at one frequency. One base factorization of
/// A0(omega) is shared by all cells through the rank-1 path; results are
/// independent of the thread count and evaluation order.
CFMap cf_map(const AssembledSystem& sys, const BeamConfig& beam,
             const ModalBasis& basis, double absorber_location,
             double frequency, const GridAxis& k_axis, const GridAxis& c_axis,
             const SweepOptions& opts = {});

CFMap cf_map(const BeamConfig& beam, const ModalBasis& basis,
             double absorber_location, double frequency,
             const GridAxis& k_axis, const GridAxis& c_axis,
             const SweepOptions& opts = {});

/// One CFMap per frequency, ascending.
std::vector<CFMap> stacked_cf(const BeamConfig& beam, const ModalBasis& basis,
                              double absorber_location,
                              const GridAxis& f_axis, const GridAxis& k_axis,
                              const GridAxis& c_axis,
                              const SweepOptions& opts = {});

/// One sweep entry: the swept parameter value, its CF map, and summary
/// statistics.
struct SweepEntry {
  double parameter;
  double optimal_fraction;
  double min_cf;
  CFMap map;
};

struct SweepResult {
  std::string parameter_name;
  std::vector<SweepEntry> entries;
};

/// Absorber location sweep at fixed frequency.
SweepResult location_sweep(const BeamConfig& beam, const ModalBasis& basis,
                           double frequency, const GridAxis& l1_axis,
                           const GridAxis& k_axis, const GridAxis& c_axis,
                           const SweepOptions& opts = {});

/// Geometry/material sweep over an explicit schedule of beams; `parameters`
/// labels each entry (e.g. taper ratio). Each beam is re-assembled.
SweepResult geometry_sweep(const std::vector<BeamConfig>& schedule,
                           const std::vector<double>& parameters,
                           std::string parameter_name, const ModalBasis& basis,
                           double frequency, double absorber_location,
                           const GridAxis& k_axis, const GridAxis& c_axis,
                           const SweepOptions& opts = {});

/// Gradient-index sweep: profile endpoints held fixed, only N varies.
SweepResult gradient_index_sweep(const BeamConfig& beam,
                                 const ModalBasis& basis,
                                 const GridAxis& n_axis, double frequency,
                                 double absorber_location,
                                 const GridAxis& k_axis,
                                 const GridAxis& c_axis,
                                 const SweepOptions& opts = {});

/// ---- Schedule generators -------------------------------------------------

/// Dimensional taper with fixed arithmetic mean m: endpoints
/// (2 m r / (1 + r), 2 m / (1 + r)), so that left/right = r. Applied to both
/// width and thickness of `base` around their respective means.
BeamConfig mean_preserving_taper(const BeamConfig& base, double ratio,
                                 double gradient_index = 1.0);

std::vector<BeamConfig> taper_schedule(const BeamConfig& base,
                                       const std::vector<double>& ratios,
                                       double gradient_index = 1.0);

BeamConfig with_modulus(const BeamConfig& base, double left, double right,
                        double gradient_index = 1.0);
BeamConfig with_density(const BeamConfig& base, double left, double right,
                        double gradient_index = 1.0);

/// Rebuilds every non-constant profile of `base` with gradient index n.
BeamConfig with_gradient_index(const BeamConfig& base, double n);

/// Aggressive material grading presets (ratio-16 endpoints).
inline constexpr double kGradedModulusLeft = 227.2e9;   // Pa
inline constexpr double kGradedModulusRight = 14.2e9;   // Pa
inline constexpr double kGradedDensityLeft = 8640.0;    // kg/m^3
inline constexpr double kGradedDensityRight = 540.0;    // kg/m^3

/// Material endpoints on the straight multiplier path from the uniform value
/// to the ratio-16 preset multipliers (3.2, 0.2), parameterized by the
/// endpoint ratio r in [1, 16]: returns (uniform*(1+2.2 t), uniform*(1-0.8 t))
/// with t = (r-1)/(2.2+0.8 r).
std::pair<double, double> material_endpoints_for_ratio(double uniform_value,
                                                       double ratio);

}  // namespace twbeam
