#include "twbeam/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "twbeam/assembly.hpp"
#include "twbeam/solver.hpp"

namespace twbeam {

BeamConfig table1_beam() {
  return BeamConfig::uniform(2.0, 30e-3, 10e-3, 71e9, 2700.0);
}

AbsorberConfig table1_absorber() {
  return AbsorberConfig(0.8, 5.625e6, 875.0);
}

BeamConfig aggressive_taper_beam() {
  return BeamConfig(2.0, PowerLawProfile(45e-3, 15e-3),
                    PowerLawProfile(15e-3, 5e-3),
                    PowerLawProfile::constant(71e9),
                    PowerLawProfile::constant(2700.0));
}

BeamConfig motaharibidgoli_beam() {
  return BeamConfig::uniform(1.5812, 12.7e-3, 1.5875e-3, 71e9, 2700.0);
}

BeamConfig craver_jampala_beam() {
  // Width and thickness at the fixed end are 1.4x their free-end values;
  // this orientation reproduces the reference frequencies (the opposite
  // reading does not). Nondimensional results are independent of the
  // absolute scale chosen here.
  return BeamConfig(1.0, PowerLawProfile(1.4e-2, 1e-2),
                    PowerLawProfile(1.4e-2, 1e-2),
                    PowerLawProfile::constant(71e9),
                    PowerLawProfile::constant(2700.0));
}

const std::vector<FrequencyReferenceRow>& frequency_reference_rows() {
  static const std::vector<FrequencyReferenceRow> rows = {
      {0.0, 5.6483, 5.6478},    {1.0, 5.7172, 5.7072},
      {10.0, 6.2943, 6.2099},   {50.0, 8.2427, 7.9580},
      {100.0, 9.9085, 9.5057},  {500.0, 14.8324, 14.4252},
      {505.8, 14.8629, 14.4578}, {1000.0, 16.3405, 16.0735}};
  return rows;
}

double envelope_deviation(const BeamConfig& beam,
                          const AbsorberConfig& absorber,
                          const ExcitationConfig& excitation, std::size_t n,
                          std::size_t n_ref, std::size_t grid_points) {
  const std::vector<double> grid = uniform_grid(beam.length, grid_points);
  const auto envelope = [&](std::size_t modes) {
    const ModalBasis basis(modes, beam.length);
    const AssembledSystem sys = assemble(beam, basis);
    const HarmonicSolution sol =
        harmonic_response(sys, basis, absorber, excitation);
    const Eigen::VectorXcd field = physical_field(sol, basis, grid);
    std::vector<double> mag(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
      mag[j] = std::abs(field(static_cast<Eigen::Index>(j)));
    return mag;
  };
  const std::vector<double> small = envelope(n);
  const std::vector<double> ref = envelope(n_ref);
  const double peak = *std::max_element(ref.begin(), ref.end());
  double dev = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j)
    dev = std::max(dev, std::abs(small[j] - ref[j]));
  return dev / peak;
}

namespace {

void add(VerifyReport& report, const std::string& name, double measured,
         double limit, const std::string& detail = "") {
  report.checks.push_back(
      {name, measured, limit, measured <= limit, detail});
}

void verify_reference_frequencies(VerifyReport& report) {
  const BeamConfig beam = craver_jampala_beam();
  const ModalBasis basis(100, beam.length);
  const AssembledSystem sys = assemble(beam, basis);
  const Eigen::VectorXd u = coupling_vector(basis, 0.6 * beam.length);
  for (const FrequencyReferenceRow& row : frequency_reference_rows()) {
    const double k = dimensional_stiffness(row.k_bar, beam);
    const double omega1 = natural_frequencies(sys, u, k, 1)[0];
    const double nd = nondimensionalize_frequency(omega1, beam);
    std::ostringstream detail;
    detail << "omega1_bar = " << nd;
    add(report,
        "frequency k_bar=" + std::to_string(row.k_bar) + " vs present",
        std::abs(nd - row.present_study) / row.present_study, 0.005,
        detail.str());
    add(report, "frequency k_bar=" + std::to_string(row.k_bar) + " vs exact",
        std::abs(nd - row.exact) / row.exact, 0.05, detail.str());
  }
}

void verify_convergence(VerifyReport& report) {
  const ExcitationConfig excitation(3400.0, 1.0);
  add(report, "convergence uniform beam n=80 vs n=100",
      envelope_deviation(table1_beam(), table1_absorber(), excitation, 80,
                         100),
      0.01);
  const AbsorberConfig taper_absorber(0.8, 1875000.0, 2187.5);
  add(report, "convergence tapered beam n=80 vs n=100",
      envelope_deviation(aggressive_taper_beam(), taper_absorber, excitation,
                         80, 100),
      0.01);
}

void verify_tw_benchmark(VerifyReport& report, unsigned threads) {
  const BeamConfig beam = motaharibidgoli_beam();
  const double l1 = 0.4 * beam.length;
  const ModalBasis basis(100, beam.length);
  const AssembledSystem sys = assemble(beam, basis);

  SweepOptions opts;
  opts.threads = threads;
  const CFMap map = cf_map(sys, beam, basis, l1, 1300.0,
                           GridAxis::default_stiffness(),
                           GridAxis::default_damping(), opts);

  const GridAxis point_k("k", 71e3, 71e3, 1);
  const GridAxis point_c("c", 9.0, 9.0, 1);
  const CFMap cell = cf_map(sys, beam, basis, l1, 1300.0, point_k, point_c,
                            opts);
  const double cf = cell.values(0, 0);
  add(report, "benchmark CF(k=71 kN/m, c=9 N.s/m)", cf, 0.3);

  std::vector<double> all(map.values.data(),
                          map.values.data() + map.values.size());
  std::sort(all.begin(), all.end());
  const double decile = all[all.size() / 10];
  std::ostringstream detail;
  detail << "CF = " << cf << ", lowest-decile bound = " << decile;
  add(report, "benchmark CF within lowest decile of (k, c) map", cf, decile,
      detail.str());
}

void verify_rank1(VerifyReport& report, std::size_t samples) {
  const BeamConfig beam = table1_beam();
  const ModalBasis basis(100, beam.length);
  const AssembledSystem sys = assemble(beam, basis);
  const Eigen::VectorXd u = coupling_vector(basis, 0.8);
  const Eigen::VectorXd q = force_vector(basis, 1.0);

  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> logk(std::log(1e4), std::log(3e7));
  std::uniform_real_distribution<double> cd(0.0, 5000.0);
  std::uniform_real_distribution<double> fd(300.0, 3400.0);

  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double k = std::exp(logk(rng));
    const double c = cd(rng);
    const double omega = 2.0 * std::numbers::pi * fd(rng);
    const HarmonicBase base(sys, omega);
    const HarmonicSolution fast = rank1_response(base, u, k, c, q);
    const HarmonicSolution direct = base.solve_direct(u, k, c, q);
    const double scale = direct.eta.cwiseAbs().maxCoeff();
    const double diff = (fast.eta - direct.eta).cwiseAbs().maxCoeff();
    worst = std::max(worst, diff / scale);
  }
  add(report,
      "rank-1 vs direct solve, " + std::to_string(samples) + " samples",
      worst, 1e-8);
}

void verify_orthogonality(VerifyReport& report) {
  const double length = 2.0;
  const std::size_t n = 100;
  const ModalBasis basis(n, length);
  std::vector<double> xs, ws;
  composite_nodes(QuadratureSpec::for_basis(n), length, xs, ws);

  Eigen::MatrixXd phi(static_cast<Eigen::Index>(xs.size()),
                      static_cast<Eigen::Index>(n));
  Eigen::MatrixXd phixx(phi.rows(), phi.cols());
  for (Eigen::Index g = 0; g < phi.rows(); ++g)
    for (std::size_t i = 0; i < n; ++i) {
      phi(g, static_cast<Eigen::Index>(i)) =
          basis.phi(i, xs[static_cast<std::size_t>(g)]);
      phixx(g, static_cast<Eigen::Index>(i)) =
          basis.phi_xx(i, xs[static_cast<std::size_t>(g)]);
    }
  const Eigen::VectorXd w =
      Eigen::Map<const Eigen::VectorXd>(ws.data(),
                                        static_cast<Eigen::Index>(ws.size()));

  const Eigen::MatrixXd gram = phi.transpose() * w.asDiagonal() * phi;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double expect = (i == j) ? length : 0.0;
      worst = std::max(worst,
                       std::abs(gram(static_cast<Eigen::Index>(i),
                                     static_cast<Eigen::Index>(j)) -
                                expect) /
                           length);
    }
  add(report, "basis orthonormality (n=100)", worst, 1e-6);

  const Eigen::MatrixXd bend = phixx.transpose() * w.asDiagonal() * phixx;
  double worst_bend = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double b = basis.root(i);
    const double expect = b * b * b * b / (length * length * length);
    for (std::size_t j = 0; j < n; ++j) {
      const double target = (i == j) ? expect : 0.0;
      const double scale = (i == j) ? expect
                                    : std::sqrt(
                                          bend(static_cast<Eigen::Index>(i),
                                               static_cast<Eigen::Index>(i)) *
                                          bend(static_cast<Eigen::Index>(j),
                                               static_cast<Eigen::Index>(j)));
      worst_bend = std::max(
          worst_bend, std::abs(bend(static_cast<Eigen::Index>(i),
                                    static_cast<Eigen::Index>(j)) -
                               target) /
                          scale);
    }
  }
  add(report, "basis bending orthogonality (n=100)", worst_bend, 1e-6);
}

}  // namespace

VerifyReport run_verification(unsigned threads) {
  VerifyReport report;
  verify_reference_frequencies(report);
  verify_convergence(report);
  verify_tw_benchmark(report, threads);
  verify_rank1(report, 200);
  verify_orthogonality(report);
  return report;
}

}  // namespace twbeam
