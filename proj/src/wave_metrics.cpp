#include "twbeam/wave_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twbeam {

Envelope Envelope::from_field(std::vector<double> grid,
                              std::vector<std::complex<double>> field) {
  if (grid.size() != field.size())
    throw std::invalid_argument("Envelope: grid/field size mismatch");
  Envelope env;
  env.magnitude.reserve(field.size());
  for (const auto& w : field) env.magnitude.push_back(std::abs(w));
  env.grid = std::move(grid);
  env.field = std::move(field);
  return env;
}

Envelope Envelope::from_magnitude(std::vector<double> grid,
                                  std::vector<double> magnitude) {
  if (grid.size() != magnitude.size())
    throw std::invalid_argument("Envelope: grid/magnitude size mismatch");
  Envelope env;
  env.field.assign(magnitude.begin(), magnitude.end());
  env.grid = std::move(grid);
  env.magnitude = std::move(magnitude);
  return env;
}

namespace {

struct IndexRange {
  std::size_t first;  // inclusive
  std::size_t last;   // exclusive
};

IndexRange section_indices(const Envelope& env, const Section& section) {
  const auto lo = std::lower_bound(env.grid.begin(), env.grid.end(),
                                   section.start);
  const auto hi = std::upper_bound(env.grid.begin(), env.grid.end(),
                                   section.end);
  return {static_cast<std::size_t>(lo - env.grid.begin()),
          static_cast<std::size_t>(hi - env.grid.begin())};
}

}  // namespace

std::vector<Extremum> extrema(const Envelope& env, const Section& section) {
  const IndexRange r = section_indices(env, section);
  std::vector<Extremum> out;
  if (r.last - r.first < 3) return out;

  // Runs of equal consecutive samples; plateaus collapse to their midpoint.
  struct Run {
    std::size_t first, last;  // inclusive
    double value;
  };
  std::vector<Run> runs;
  for (std::size_t j = r.first; j < r.last; ++j) {
    if (!runs.empty() && env.magnitude[j] == runs.back().value)
      runs.back().last = j;
    else
      runs.push_back({j, j, env.magnitude[j]});
  }

  for (std::size_t k = 1; k + 1 < runs.size(); ++k) {
    const Run& run = runs[k];
    const double mid_x = 0.5 * (env.grid[run.first] + env.grid[run.last]);
    if (run.value > runs[k - 1].value && run.value > runs[k + 1].value)
      out.push_back({mid_x, run.value, ExtremumKind::peak});
    else if (run.value < runs[k - 1].value && run.value < runs[k + 1].value)
      out.push_back({mid_x, run.value, ExtremumKind::valley});
  }
  return out;
}

double cost_function(const Envelope& env, const Section& section) {
  const IndexRange r = section_indices(env, section);
  if (r.first >= r.last)
    throw std::invalid_argument("cost_function: section contains no samples");

  const std::vector<Extremum> ext = extrema(env, section);
  if (ext.size() >= 2) {
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < ext.size(); ++k) {
      const double a = ext[k].value;
      const double b = ext[k + 1].value;
      const double p = std::max(a, b);
      const double v = std::min(a, b);
      sum += (p + v > 0.0) ? (p - v) / (p + v) : 0.0;
    }
    return sum / static_cast<double>(ext.size() - 1);
  }

  double mx = 0.0;
  double mn = std::numeric_limits<double>::infinity();
  for (std::size_t j = r.first; j < r.last; ++j) {
    mx = std::max(mx, env.magnitude[j]);
    mn = std::min(mn, env.magnitude[j]);
  }
  if (mx == 0.0) return 0.0;
  return (mx - mn) / (mx + mn);
}

Section default_tw_section(double absorber_location, double length,
                           double margin_fraction) {
  if (!(absorber_location > 0.0) || !(absorber_location < length))
    throw std::invalid_argument("default_tw_section: location outside (0, L)");
  const double start = absorber_location + margin_fraction * length;
  const double end = length - margin_fraction * length;
  if (!(start < end))
    throw std::invalid_argument("default_tw_section: degenerate section");
  return Section(start, end);
}

std::vector<double> envelope_nodes(const Envelope& env, double rel_threshold) {
  std::vector<double> nodes;
  if (env.grid.empty()) return nodes;
  nodes.push_back(env.grid.front());
  if (env.grid.size() < 3) return nodes;
  const double peak =
      *std::max_element(env.magnitude.begin(), env.magnitude.end());
  const Section whole(env.grid.front(), env.grid.back());
  for (const Extremum& e : extrema(env, whole))
    if (e.kind == ExtremumKind::valley && e.value < rel_threshold * peak)
      nodes.push_back(e.x);
  return nodes;
}

std::vector<double> uniform_grid(double length, std::size_t points) {
  std::vector<double> grid(points);
  for (std::size_t j = 0; j < points; ++j)
    grid[j] = length * static_cast<double>(j) /
              static_cast<double>(points - 1);
  return grid;
}

}  // namespace twbeam
