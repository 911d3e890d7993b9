#include "twbeam/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace twbeam {

namespace {

HarmonicSolution make_direct(const Eigen::MatrixXd& k0,
                             const Eigen::MatrixXd& m,
                             const Eigen::VectorXd& u, double k, double c,
                             double omega, const Eigen::VectorXd& q) {
  const std::complex<double> alpha(k, omega * c);
  Eigen::MatrixXcd a = (k0 - omega * omega * m).cast<std::complex<double>>();
  a.noalias() += alpha * (u * u.transpose()).cast<std::complex<double>>();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  HarmonicSolution sol;
  sol.omega = omega;
  sol.condition_estimate = std::min(lu.rcond(), 1.0);
  sol.eta = lu.solve(q.cast<std::complex<double>>());
  return sol;
}

}  // namespace

std::vector<double> natural_frequencies(const AssembledSystem& sys,
                                        const Eigen::VectorXd& u, double k,
                                        std::size_t count) {
  if (k < 0.0)
    throw std::invalid_argument("natural_frequencies: k must be >= 0");
  if (count > sys.n)
    throw std::invalid_argument("natural_frequencies: count exceeds basis size");
  Eigen::MatrixXd kk = sys.K0;
  if (k > 0.0) kk.noalias() += k * (u * u.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(kk, sys.M,
                                                               Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("natural_frequencies: eigen solver failed");
  std::vector<double> omegas;
  omegas.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double lam = es.eigenvalues()(static_cast<Eigen::Index>(i));
    if (!(lam > 0.0))
      throw std::runtime_error(
          "natural_frequencies: nonpositive eigenvalue (singular system)");
    omegas.push_back(std::sqrt(lam));
  }
  return omegas;
}

double nondimensionalize_frequency(double omega, const BeamConfig& beam) {
  const double length = beam.length;
  const double rho = beam.density.evaluate(length, length);
  const double area = section_area(beam, length);
  const double ei = beam.modulus.evaluate(length, length) *
                    section_inertia(beam, length);
  return omega * std::sqrt(rho * area * length * length * length * length / ei);
}

double nondimensionalize_stiffness(double k, const BeamConfig& beam) {
  const double length = beam.length;
  const double ei = beam.modulus.evaluate(length, length) *
                    section_inertia(beam, length);
  return k * length * length * length / ei;
}

double dimensional_stiffness(double k_bar, const BeamConfig& beam) {
  const double length = beam.length;
  const double ei = beam.modulus.evaluate(length, length) *
                    section_inertia(beam, length);
  return k_bar * ei / (length * length * length);
}

HarmonicBase::HarmonicBase(const AssembledSystem& sys, double omega)
    : omega_(omega), a0_(sys.K0 - omega * omega * sys.M), lu_(a0_) {
  rcond_ = std::min(lu_.rcond(), 1.0);
}

Eigen::VectorXd HarmonicBase::solve(const Eigen::VectorXd& rhs) const {
  return lu_.solve(rhs);
}

HarmonicSolution HarmonicBase::solve_direct(const Eigen::VectorXd& u, double k,
                                            double c,
                                            const Eigen::VectorXd& q) const {
  const std::complex<double> alpha(k, omega_ * c);
  Eigen::MatrixXcd a = a0_.cast<std::complex<double>>();
  a.noalias() += alpha * (u * u.transpose()).cast<std::complex<double>>();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  HarmonicSolution sol;
  sol.omega = omega_;
  sol.condition_estimate = std::min(lu.rcond(), 1.0);
  sol.eta = lu.solve(q.cast<std::complex<double>>());
  return sol;
}

HarmonicSolution rank1_response(const HarmonicBase& base,
                                const Eigen::VectorXd& u, double k, double c,
                                const Eigen::VectorXd& q) {
  const double omega = base.omega();
  const std::complex<double> alpha(k, omega * c);

  if (base.rcond() < kNearSingularRcond) {
    HarmonicSolution sol = base.solve_direct(u, k, c, q);
    sol.rank1_fallback = true;
    return sol;
  }

  const Eigen::VectorXd y0 = base.solve(q);
  if (alpha == 0.0) {
    HarmonicSolution sol;
    sol.omega = omega;
    sol.condition_estimate = base.rcond();
    sol.eta = y0.cast<std::complex<double>>();
    return sol;
  }
  const Eigen::VectorXd z = base.solve(u);
  const std::complex<double> denom = 1.0 + alpha * u.dot(z);
  // Degenerate update: the absorber shifts the operator onto a resonance.
  if (std::abs(denom) < 1e-10 * (1.0 + std::abs(alpha) * z.norm() * u.norm())) {
    HarmonicSolution sol = base.solve_direct(u, k, c, q);
    sol.rank1_fallback = true;
    return sol;
  }
  const std::complex<double> scale = alpha * u.dot(y0) / denom;
  HarmonicSolution sol;
  sol.omega = omega;
  sol.condition_estimate = base.rcond();
  sol.eta = y0.cast<std::complex<double>>() -
            scale * z.cast<std::complex<double>>();
  return sol;
}

HarmonicSolution harmonic_response(const AssembledSystem& sys,
                                   const ModalBasis& basis,
                                   const AbsorberConfig& absorber,
                                   const ExcitationConfig& excitation) {
  const Eigen::VectorXd u = coupling_vector(basis, absorber.location);
  const Eigen::VectorXd q = force_vector(basis, excitation.amplitude);
  HarmonicSolution sol = make_direct(sys.K0, sys.M, u, absorber.stiffness,
                                     absorber.damping, excitation.omega(), q);
  if (sol.condition_estimate < kNearSingularRcond)
    throw std::runtime_error(
        "harmonic_response: near-singular system (undamped excitation at a "
        "natural frequency)");
  return sol;
}

Eigen::VectorXcd physical_field(const HarmonicSolution& solution,
                                const ModalBasis& basis,
                                const std::vector<double>& grid) {
  const std::size_t n = basis.count();
  Eigen::VectorXcd field(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      acc += solution.eta(static_cast<Eigen::Index>(i)) * basis.phi(i, grid[j]);
    field(static_cast<Eigen::Index>(j)) = acc;
  }
  return field;
}

}  // namespace twbeam
