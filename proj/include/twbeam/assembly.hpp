#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "twbeam/beam.hpp"
#include "twbeam/modal_basis.hpp"

namespace twbeam {

/// Composite Gauss-Legendre rule: `panels` equal subintervals of [0, L],
/// `points_per_panel` Gauss points each. All nodes are strictly interior.
struct QuadratureSpec {
  std::size_t panels;
  std::size_t points_per_panel;

  QuadratureSpec(std::size_t panels_, std::size_t points_per_panel_)
      : panels(panels_), points_per_panel(points_per_panel_) {
    if (panels < 1)
      throw std::invalid_argument("QuadratureSpec: panels must be >= 1");
    if (points_per_panel < 2)
      throw std::invalid_argument(
          "QuadratureSpec: points_per_panel must be >= 2");
  }

  /// Default sized for a basis of n modes: the integrand phi_i,xx phi_j,xx
  /// oscillates ~2n times over [0, L]; 4n panels of 10 points give >= 20
  /// Gauss points per oscillation.
  static QuadratureSpec for_basis(std::size_t n) {
    return QuadratureSpec(4 * n, 10);
  }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Nodes/weights of a composite rule on [0, L].
void composite_nodes(const QuadratureSpec& quad, double length,
                     std::vector<double>& nodes, std::vector<double>& weights);

/// Beam-dependent parts of the discretized equations of motion:
/// M_ij  = int_0^L rho A phi_i phi_j dx
/// K0_ij = int_0^L E I phi_i,xx phi_j,xx dx   (weak symmetric form)
/// Absorber and forcing terms are point evaluations added separately.
struct AssembledSystem {
  std::size_t n;
  Eigen::MatrixXd M;
  Eigen::MatrixXd K0;
};

/// Assembles M and K0 by composite Gauss-Legendre quadrature. Both matrices
/// are formed as B^T B with B = diag(sqrt(w * coeff)) * Phi, which makes them
/// exactly symmetric and positive semidefinite by construction.
AssembledSystem assemble(const BeamConfig& beam, const ModalBasis& basis,
                         const QuadratureSpec& quad);

AssembledSystem assemble(const BeamConfig& beam, const ModalBasis& basis);

/// u_i = phi_i(location); the Dirac absorber terms collapse to this.
Eigen::VectorXd coupling_vector(const ModalBasis& basis, double location);

/// q_j = F phi_j(L); tip point load, F > 0 downward.
Eigen::VectorXd force_vector(const ModalBasis& basis, double amplitude);

}  // namespace twbeam
