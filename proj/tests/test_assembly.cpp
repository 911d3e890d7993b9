#include <Eigen/Cholesky>
#include <cmath>

#include "doctest.h"
#include "twbeam/assembly.hpp"

using namespace twbeam;

namespace {

const BeamConfig kTable1 = BeamConfig::uniform(2.0, 30e-3, 10e-3, 71e9, 2700);

}  // namespace

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(10, x, w);
  // degree-19 polynomial x^18 over [-1, 1]
  double acc = 0.0, wsum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += w[i] * std::pow(x[i], 18);
    wsum += w[i];
  }
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(acc == doctest::Approx(2.0 / 19.0).epsilon(1e-13));
}

TEST_CASE("composite nodes stay strictly interior") {
  std::vector<double> x, w;
  composite_nodes(QuadratureSpec(7, 4), 2.0, x, w);
  REQUIRE(x.size() == 28);
  for (double xi : x) {
    CHECK(xi > 0.0);
    CHECK(xi < 2.0);
  }
  double total = 0.0;
  for (double wi : w) total += wi;
  CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("uniform beam reproduces the diagonal oracles") {
  const std::size_t n = 40;
  const ModalBasis basis(n, kTable1.length);
  const AssembledSystem sys = assemble(kTable1, basis);

  SUBCASE("mass matrix is rho b h L times identity") {
    const double expect = 2700.0 * 3.0e-4 * 2.0;  // 1.62 kg
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(sys.M(i, i) == doctest::Approx(expect).epsilon(1e-6));
      for (std::size_t j = 0; j < i; ++j)
        CHECK(std::abs(sys.M(i, j)) < 1e-6 * expect);
    }
  }
  SUBCASE("stiffness diagonal is E I beta^4 / L^3") {
    const double ei = 71e9 * 2.5e-9;  // 177.5 N.m^2
    const double L = kTable1.length;
    for (std::size_t i = 0; i < n; ++i) {
      const double b = basis.root(i);
      const double expect = ei * b * b * b * b / (L * L * L);
      CHECK(sys.K0(i, i) == doctest::Approx(expect).epsilon(1e-6));
    }
  }
}

TEST_CASE("assembled matrices are symmetric positive definite") {
  const BeamConfig graded(1.3, PowerLawProfile(48e-3, 12e-3, 2.0),
                          PowerLawProfile(16e-3, 4e-3, 0.5),
                          PowerLawProfile(227.2e9, 14.2e9, 1.0),
                          PowerLawProfile(8640, 540, 3.0));
  const ModalBasis basis(30, graded.length);
  const AssembledSystem sys = assemble(graded, basis);

  CHECK((sys.M - sys.M.transpose()).cwiseAbs().maxCoeff() <
        1e-10 * sys.M.cwiseAbs().maxCoeff());
  CHECK((sys.K0 - sys.K0.transpose()).cwiseAbs().maxCoeff() <
        1e-10 * sys.K0.cwiseAbs().maxCoeff());
  CHECK(Eigen::LLT<Eigen::MatrixXd>(sys.M).info() == Eigen::Success);
  CHECK(Eigen::LLT<Eigen::MatrixXd>(sys.K0).info() == Eigen::Success);
}

TEST_CASE("quadrature refinement leaves the matrices unchanged") {
  const BeamConfig graded(2.0, PowerLawProfile(45e-3, 15e-3),
                          PowerLawProfile(15e-3, 5e-3),
                          PowerLawProfile::constant(71e9),
                          PowerLawProfile::constant(2700));
  const std::size_t n = 20;
  const ModalBasis basis(n, graded.length);
  const QuadratureSpec base = QuadratureSpec::for_basis(n);
  const AssembledSystem coarse = assemble(graded, basis, base);
  const AssembledSystem fine = assemble(
      graded, basis, QuadratureSpec(2 * base.panels, base.points_per_panel));

  CHECK((coarse.M - fine.M).cwiseAbs().maxCoeff() <
        1e-8 * fine.M.cwiseAbs().maxCoeff());
  CHECK((coarse.K0 - fine.K0).cwiseAbs().maxCoeff() <
        1e-8 * fine.K0.cwiseAbs().maxCoeff());
}

TEST_CASE("coupling vector") {
  const ModalBasis basis(20, 2.0);

  SUBCASE("vanishes toward the clamped end") {
    const Eigen::VectorXd u = coupling_vector(basis, 1e-8);
    CHECK(u.cwiseAbs().maxCoeff() < 1e-6);
  }
  SUBCASE("tip values near +-2, alternating sign") {
    const Eigen::VectorXd u = coupling_vector(basis, 2.0 - 1e-13);
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      CHECK(std::abs(u(i)) == doctest::Approx(2.0).epsilon(1e-3));
      if (i > 0) CHECK(u(i) * u(i - 1) < 0.0);
    }
  }
  SUBCASE("matches pointwise phi evaluation") {
    const double loc = 0.7321;
    const Eigen::VectorXd u = coupling_vector(basis, loc);
    for (std::size_t i = 0; i < 20; ++i) CHECK(u(i) == basis.phi(i, loc));
  }
  SUBCASE("rejects out-of-range locations") {
    CHECK_THROWS_AS(coupling_vector(basis, 0.0), std::domain_error);
    CHECK_THROWS_AS(coupling_vector(basis, 2.0), std::domain_error);
  }
}

TEST_CASE("force vector") {
  const ModalBasis basis(15, 2.0);
  const Eigen::VectorXd zero = force_vector(basis, 0.0);
  CHECK(zero.cwiseAbs().maxCoeff() == 0.0);

  const Eigen::VectorXd unit = force_vector(basis, 1.0);
  for (std::size_t i = 0; i < 15; ++i) CHECK(unit(i) == basis.phi(i, 2.0));

  const Eigen::VectorXd twice = force_vector(basis, 2.0);
  CHECK((twice - 2.0 * unit).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("assemble rejects mismatched lengths") {
  const ModalBasis basis(5, 1.0);
  CHECK_THROWS_AS(assemble(kTable1, basis), std::invalid_argument);
}
