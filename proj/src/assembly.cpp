#include "twbeam/assembly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twbeam {

void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  // Newton iteration on P_n; symmetric, so only half the roots are computed.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

void composite_nodes(const QuadratureSpec& quad, double length,
                     std::vector<double>& nodes, std::vector<double>& weights) {
  std::vector<double> gx, gw;
  gauss_legendre(quad.points_per_panel, gx, gw);
  const std::size_t total = quad.panels * quad.points_per_panel;
  nodes.clear();
  weights.clear();
  nodes.reserve(total);
  weights.reserve(total);
  const double hw = 0.5 * length / static_cast<double>(quad.panels);
  for (std::size_t p = 0; p < quad.panels; ++p) {
    const double mid = (2.0 * static_cast<double>(p) + 1.0) * hw;
    for (std::size_t j = 0; j < quad.points_per_panel; ++j) {
      nodes.push_back(mid + hw * gx[j]);
      weights.push_back(hw * gw[j]);
    }
  }
}

AssembledSystem assemble(const BeamConfig& beam, const ModalBasis& basis,
                         const QuadratureSpec& quad) {
  if (basis.length() != beam.length)
    throw std::invalid_argument("assemble: basis.length != beam.length");

  std::vector<double> xs, ws;
  composite_nodes(quad, beam.length, xs, ws);
  const Eigen::Index nq = static_cast<Eigen::Index>(xs.size());
  const Eigen::Index n = static_cast<Eigen::Index>(basis.count());

  Eigen::MatrixXd bm(nq, n);   // sqrt(w rho A) phi_i
  Eigen::MatrixXd bk(nq, n);   // sqrt(w E I) phi_i,xx
  for (Eigen::Index g = 0; g < nq; ++g) {
    const double x = xs[static_cast<std::size_t>(g)];
    const double w = ws[static_cast<std::size_t>(g)];
    const double area = section_area(beam, x);
    const double sm = std::sqrt(w * beam.density.evaluate(x, beam.length) *
                                area);
    const double sk = std::sqrt(w * beam.modulus.evaluate(x, beam.length) *
                                section_inertia(beam, x));
    for (Eigen::Index i = 0; i < n; ++i) {
      const double p = basis.phi(static_cast<std::size_t>(i), x);
      const double pxx = basis.phi_xx(static_cast<std::size_t>(i), x);
      if (!std::isfinite(p) || !std::isfinite(pxx))
        throw std::runtime_error("assemble: non-finite basis value");
      bm(g, i) = sm * p;
      bk(g, i) = sk * pxx;
    }
  }

  AssembledSystem sys;
  sys.n = basis.count();
  sys.M = bm.transpose() * bm;
  sys.K0 = bk.transpose() * bk;
  return sys;
}

AssembledSystem assemble(const BeamConfig& beam, const ModalBasis& basis) {
  return assemble(beam, basis, QuadratureSpec::for_basis(basis.count()));
}

Eigen::VectorXd coupling_vector(const ModalBasis& basis, double location) {
  if (!(location > 0.0) || !(location < basis.length()))
    throw std::domain_error("coupling_vector: location outside (0, L)");
  Eigen::VectorXd u(static_cast<Eigen::Index>(basis.count()));
  for (std::size_t i = 0; i < basis.count(); ++i)
    u(static_cast<Eigen::Index>(i)) = basis.phi(i, location);
  return u;
}

Eigen::VectorXd force_vector(const ModalBasis& basis, double amplitude) {
  Eigen::VectorXd q(static_cast<Eigen::Index>(basis.count()));
  for (std::size_t i = 0; i < basis.count(); ++i)
    q(static_cast<Eigen::Index>(i)) = amplitude * basis.phi(i, basis.length());
  return q;
}

}  // namespace twbeam
