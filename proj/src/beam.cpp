#include "twbeam/beam.hpp"

#include <cmath>
#include <numbers>

namespace twbeam {

double PowerLawProfile::evaluate(double x, double length) const {
  if (!(x >= 0.0) || !(x <= length))
    throw std::domain_error("PowerLawProfile: x outside [0, L]");
  if (x == 0.0) return left_;
  if (x == length) return right_;
  return left_ + std::pow(x / length, index_) * (right_ - left_);
}

double ExcitationConfig::omega() const {
  return 2.0 * std::numbers::pi * frequency;
}

double section_area(const BeamConfig& beam, double x) {
  return beam.width.evaluate(x, beam.length) *
         beam.thickness.evaluate(x, beam.length);
}

double section_inertia(const BeamConfig& beam, double x) {
  const double h = beam.thickness.evaluate(x, beam.length);
  return beam.width.evaluate(x, beam.length) * h * h * h / 12.0;
}

}  // namespace twbeam
