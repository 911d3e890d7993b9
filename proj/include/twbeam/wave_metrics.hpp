#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace twbeam {

/// Sampled steady-state field on an ascending grid; envelope is |W|.
struct Envelope {
  std::vector<double> grid;                  // x, m, strictly increasing
  std::vector<std::complex<double>> field;   // W(x_j)
  std::vector<double> magnitude;             // |W(x_j)|

  static Envelope from_field(std::vector<double> grid,
                             std::vector<std::complex<double>> field);
  static Envelope from_magnitude(std::vector<double> grid,
                                 std::vector<double> magnitude);
};

/// Span of the beam over which wave purity is assessed.
struct Section {
  double start;
  double end;

  Section(double start_, double end_) : start(start_), end(end_) {
    if (!(start >= 0.0) || !(start < end))
      throw std::invalid_argument("Section: need 0 <= start < end");
  }
};

enum class ExtremumKind { peak, valley };

struct Extremum {
  double x;
  double value;
  ExtremumKind kind;
};

/// Strict local maxima/minima of |W| within the section, alternating in
/// kind. Runs of equal samples collapse to their midpoint.
std::vector<Extremum> extrema(const Envelope& env, const Section& section);

/// Traveling-wave cost function: mean of (p - v)/(p + v) over consecutive
/// peak/valley pairs in the section; 0 = pure traveling wave, 1 = pure
/// standing wave. With fewer than one full pair, falls back to
/// (max - min)/(max + min) over the section; an all-zero section gives 0.
double cost_function(const Envelope& env, const Section& section);

/// Span between absorber and forcing tip, trimmed by margin_fraction * L on
/// both sides to exclude the near-field zones.
Section default_tw_section(double absorber_location, double length,
                           double margin_fraction = 0.05);

/// Uniform evaluation grid of `points` samples over [0, L].
std::vector<double> uniform_grid(double length, std::size_t points = 2001);

/// Vibrational node positions: envelope minima below rel_threshold * max
/// plus the clamped end (always a node). Ascending; the clamped end is
/// node index 0.
std::vector<double> envelope_nodes(const Envelope& env,
                                   double rel_threshold = 0.05);

}  // namespace twbeam
