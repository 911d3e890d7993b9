#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "twbeam/assembly.hpp"
#include "twbeam/beam.hpp"

namespace twbeam {

/// Steady-state generalized coordinates of one harmonic solve.
struct HarmonicSolution {
  double omega = 0.0;              // rad/s
  Eigen::VectorXcd eta;            // complex modal amplitudes, m-weighted
  double condition_estimate = 1.0; // reciprocal condition of the solved matrix
  bool rank1_fallback = false;     // rank-1 update degenerated; direct solve used
};

/// Reciprocal condition below which an undamped solve is reported as a
/// resonance rather than returned.
inline constexpr double kNearSingularRcond = 1e-12;

/// Lowest `count` undamped natural frequencies (rad/s) of
///   (K0 + k u u^T) v = omega^2 M v,
/// ascending. The top ~20% of the Galerkin spectrum are discretization
/// artifacts and should not be requested.
std::vector<double> natural_frequencies(const AssembledSystem& sys,
                                        const Eigen::VectorXd& u, double k,
                                        std::size_t count);

/// omega * sqrt(rho(L) A(L) L^4 / (E(L) I(L))).
double nondimensionalize_frequency(double omega, const BeamConfig& beam);

/// k L^3 / (E(L) I(L)).
double nondimensionalize_stiffness(double k, const BeamConfig& beam);

/// Inverse of nondimensionalize_stiffness.
double dimensional_stiffness(double k_bar, const BeamConfig& beam);

/// Reusable factorization of the beam-only harmonic operator
/// A0(omega) = K0 - omega^2 M. A0 is real symmetric; absorber terms enter
/// as a complex rank-1 update handled by rank1_response.
class HarmonicBase {
 public:
  HarmonicBase(const AssembledSystem& sys, double omega);

  double omega() const { return omega_; }
  double rcond() const { return rcond_; }
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

  /// Direct complex solve of [A0 + (k + i omega c) u u^T] eta = q,
  /// bypassing the rank-1 path.
  HarmonicSolution solve_direct(const Eigen::VectorXd& u, double k, double c,
                                const Eigen::VectorXd& q) const;

 private:
  double omega_;
  double rcond_;
  Eigen::MatrixXd a0_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

/// Sherman-Morrison solve of [A0 + (k + i omega c) u u^T] eta = q:
/// two base solves plus a complex scalar correction. Falls back to the
/// direct complex solve (flagged) when the update denominator degenerates.
HarmonicSolution rank1_response(const HarmonicBase& base,
                                const Eigen::VectorXd& u, double k, double c,
                                const Eigen::VectorXd& q);

/// Full steady-state solve for one absorber/excitation configuration by
/// direct dense complex factorization. Throws on near-singular systems
/// (undamped excitation at a natural frequency).
HarmonicSolution harmonic_response(const AssembledSystem& sys,
                                   const ModalBasis& basis,
                                   const AbsorberConfig& absorber,
                                   const ExcitationConfig& excitation);

/// W(x_j) = sum_i eta_i phi_i(x_j); the physical steady-state field is
/// w(x, t) = Re{W(x) e^{i omega t}} and the envelope is |W(x)|.
Eigen::VectorXcd physical_field(const HarmonicSolution& solution,
                                const ModalBasis& basis,
                                const std::vector<double>& grid);

}  // namespace twbeam
