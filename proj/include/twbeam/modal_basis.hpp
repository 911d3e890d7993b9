#pragma once

#include <cstddef>
#include <vector>

namespace twbeam {

/// First n roots of the clamped-free characteristic equation
///   cos(b) cosh(b) + 1 = 0,
/// ascending. Refined on the rescaled residual
///   g(b) = cos(b) (1 + e^{-2b}) + 2 e^{-b},
/// which stays O(1) where cosh(b) overflows.
std::vector<double> characteristic_roots(std::size_t n);

/// Cancellation-safe residual g(b) above; |g| < 1e-12 at returned roots.
double characteristic_residual(double beta);

/// The first n uniform clamped-free (cantilever) beam eigenfunctions on
/// [0, L], used as Galerkin trial functions. Normalized so that
/// int_0^L phi_i^2 dx = L.
///
/// Evaluation uses only the decaying exponentials e^{-b xi} and
/// e^{-b (1-xi)}, so values stay finite and accurate through at least
/// n = 120 (raw cosh/sinh of b*xi would overflow near b ~ 710 and lose
/// precision long before).
class ModalBasis {
 public:
  ModalBasis(std::size_t count, double length);

  std::size_t count() const { return count_; }
  double length() const { return length_; }

  /// Dimensionless eigenvalue parameter beta_i, i in [0, n).
  double root(std::size_t i) const { return roots_[i]; }
  const std::vector<double>& roots() const { return roots_; }

  /// phi_i(x), i in [0, n), x in [0, L].
  double phi(std::size_t i, double x) const;

  /// d^2 phi_i / dx^2 at x, 1/m^2.
  double phi_xx(std::size_t i, double x) const;

 private:
  void check(std::size_t i, double x) const;

  struct ModeCoeffs {
    double beta;
    double sigma;    // stable form of (sinh b - sin b)/(cosh b + cos b)
    double a_left;   // coefficient of e^{-b xi}
    double a_right;  // coefficient of e^{-b (1 - xi)}
  };

  std::size_t count_;
  double length_;
  std::vector<double> roots_;
  std::vector<ModeCoeffs> coeffs_;
};

}  // namespace twbeam
