#pragma once

#include <stdexcept>
#include <string>

namespace twbeam {

/// Lengthwise power-law variation of a scalar beam property:
///   P(x) = P_l + (x/L)^N (P_r - P_l)
/// with P_l the value at the clamped end (x = 0) and P_r at the free end
/// (x = L). All properties are SI; profiles themselves are unit-agnostic.
class PowerLawProfile {
 public:
  PowerLawProfile(double left_value, double right_value,
                  double gradient_index = 1.0)
      : left_(left_value), right_(right_value), index_(gradient_index) {
    if (!(left_ > 0.0) || !(right_ > 0.0))
      throw std::invalid_argument(
          "PowerLawProfile: endpoint values must be positive");
    // N = 0 makes (x/L)^N ambiguous at x = 0; constant profiles are
    // expressed with equal endpoints instead.
    if (!(index_ > 0.0))
      throw std::invalid_argument(
          "PowerLawProfile: gradient index must be positive");
  }

  static PowerLawProfile constant(double value) {
    return PowerLawProfile(value, value, 1.0);
  }

  double left() const { return left_; }
  double right() const { return right_; }
  double gradient_index() const { return index_; }
  bool is_constant() const { return left_ == right_; }

  /// P(x) for x in [0, L]. Exact at both endpoints.
  double evaluate(double x, double length) const;

 private:
  double left_;
  double right_;
  double index_;
};

/// Geometry and material of one cantilever beam, clamped at x = 0.
struct BeamConfig {
  double length;            // m
  PowerLawProfile width;     // b(x), m
  PowerLawProfile thickness; // h(x), m
  PowerLawProfile modulus;   // E(x), Pa
  PowerLawProfile density;   // rho(x), kg/m^3

  BeamConfig(double length_, PowerLawProfile width_, PowerLawProfile thickness_,
             PowerLawProfile modulus_, PowerLawProfile density_)
      : length(length_),
        width(std::move(width_)),
        thickness(std::move(thickness_)),
        modulus(std::move(modulus_)),
        density(std::move(density_)) {
    if (!(length > 0.0))
      throw std::invalid_argument("BeamConfig: length must be positive");
  }

  static BeamConfig uniform(double length, double width, double thickness,
                            double modulus, double density) {
    return BeamConfig(length, PowerLawProfile::constant(width),
                      PowerLawProfile::constant(thickness),
                      PowerLawProfile::constant(modulus),
                      PowerLawProfile::constant(density));
  }
};

/// Intermediate spring-damper absorber attached at x = location.
struct AbsorberConfig {
  double location;  // L1, m, 0 < L1 < L
  double stiffness; // k, N/m
  double damping;   // c, N.s/m

  AbsorberConfig(double location_, double stiffness_, double damping_)
      : location(location_), stiffness(stiffness_), damping(damping_) {
    if (!(stiffness >= 0.0))
      throw std::invalid_argument("AbsorberConfig: stiffness must be >= 0");
    if (!(damping >= 0.0))
      throw std::invalid_argument("AbsorberConfig: damping must be >= 0");
  }
};

/// Harmonic tip force F e^{i omega t} at x = L; positive F points downward.
struct ExcitationConfig {
  double frequency; // f, Hz
  double amplitude; // F, N

  ExcitationConfig(double frequency_, double amplitude_)
      : frequency(frequency_), amplitude(amplitude_) {
    if (!(frequency > 0.0))
      throw std::invalid_argument(
          "ExcitationConfig: frequency must be positive");
  }

  double omega() const;
};

/// Cross-sectional area A(x) = b(x) h(x), m^2.
double section_area(const BeamConfig& beam, double x);

/// Second moment of area I(x) = b(x) h(x)^3 / 12, m^4.
double section_inertia(const BeamConfig& beam, double x);

}  // namespace twbeam
