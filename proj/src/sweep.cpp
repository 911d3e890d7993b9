#include "twbeam/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace twbeam {

GridAxis::GridAxis(std::string name_, double min_, double max_,
                   std::size_t count_, Scale scale_)
    : name(std::move(name_)), min(min_), max(max_), count(count_),
      scale(scale_) {
  if (count < 1) throw std::invalid_argument("GridAxis: count must be >= 1");
  if (count > 1 && !(min < max))
    throw std::invalid_argument("GridAxis: min must be < max when count > 1");
  if (scale == Scale::logarithmic && !(min > 0.0))
    throw std::invalid_argument("GridAxis: logarithmic axis requires min > 0");
}

std::vector<double> GridAxis::values() const {
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = min;
    return v;
  }
  const double denom = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / denom;
    if (scale == Scale::linear)
      v[i] = min + t * (max - min);
    else
      v[i] = min * std::pow(max / min, t);
  }
  v.back() = max;
  return v;
}

GridAxis GridAxis::default_stiffness() {
  return GridAxis("k", 1e4, 3e7, 100, Scale::logarithmic);
}

GridAxis GridAxis::default_damping() {
  return GridAxis("c", 1.0, 5000.0, 100, Scale::linear);
}

GridAxis GridAxis::default_frequency() {
  return GridAxis("f", 300.0, 3400.0, 311, Scale::linear);
}

double optimal_region_measure(const CFMap& map, double threshold) {
  if (!(threshold > 0.0) || !(threshold < 1.0))
    throw std::invalid_argument(
        "optimal_region_measure: threshold must be in (0, 1)");
  const std::ptrdiff_t below =
      (map.values.array() <= threshold).count();
  return static_cast<double>(below) / static_cast<double>(map.values.size());
}

namespace {

Section resolve_section(double absorber_location, double length,
                        const SweepOptions& opts) {
  if (opts.use_default_section)
    return default_tw_section(absorber_location, length, opts.section_margin);
  return opts.section;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// CF over the section grid for one rank-1 cell, given the precomputed base
/// fields W0 = Phi y0 and Wz = Phi z (both real) and the complex correction
/// scale s: W = W0 - s Wz.
double cell_cf(const std::vector<double>& xs, const Eigen::VectorXd& w0,
               const Eigen::VectorXd& wz, std::complex<double> s,
               std::vector<double>& mag_buf, const Section& section,
               Envelope& env_buf) {
  const Eigen::Index m = w0.size();
  mag_buf.resize(static_cast<std::size_t>(m));
  const double sr = s.real(), si = s.imag();
  for (Eigen::Index j = 0; j < m; ++j) {
    const double re = w0(j) - sr * wz(j);
    const double im = -si * wz(j);
    mag_buf[static_cast<std::size_t>(j)] = std::hypot(re, im);
  }
  env_buf.grid = xs;
  env_buf.magnitude = mag_buf;
  return cost_function(env_buf, section);
}

}  // namespace

CFMap cf_map(const AssembledSystem& sys, const BeamConfig& beam,
             const ModalBasis& basis, double absorber_location,
             double frequency, const GridAxis& k_axis, const GridAxis& c_axis,
             const SweepOptions& opts) {
  if (!(frequency > 0.0))
    throw std::invalid_argument("cf_map: frequency must be positive");
  const Section section = resolve_section(absorber_location, beam.length, opts);
  const double omega = 2.0 * std::numbers::pi * frequency;

  const Eigen::VectorXd u = coupling_vector(basis, absorber_location);
  const Eigen::VectorXd q = force_vector(basis, 1.0);
  const HarmonicBase base(sys, omega);

  // Full evaluation grid restricted to the section.
  const std::vector<double> full_grid = uniform_grid(beam.length,
                                                     opts.grid_points);
  std::vector<double> xs;
  for (double x : full_grid)
    if (x >= section.start && x <= section.end) xs.push_back(x);
  const Eigen::Index m = static_cast<Eigen::Index>(xs.size());
  const Eigen::Index n = static_cast<Eigen::Index>(basis.count());

  Eigen::MatrixXd phi_sec(m, n);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      phi_sec(j, i) = basis.phi(static_cast<std::size_t>(i),
                                xs[static_cast<std::size_t>(j)]);

  const bool base_ok = base.rcond() >= kNearSingularRcond;
  Eigen::VectorXd y0, z, w0, wz;
  double uy = 0.0, uz = 0.0;
  if (base_ok) {
    y0 = base.solve(q);
    z = base.solve(u);
    uy = u.dot(y0);
    uz = u.dot(z);
    w0 = phi_sec * y0;
    wz = phi_sec * z;
  }

  const std::vector<double> ks = k_axis.values();
  const std::vector<double> cs = c_axis.values();
  CFMap map{k_axis, c_axis, frequency,
            Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ks.size()),
                                  static_cast<Eigen::Index>(cs.size())),
            Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(
                static_cast<Eigen::Index>(ks.size()),
                static_cast<Eigen::Index>(cs.size()))};

  const unsigned nthreads =
      std::min<unsigned>(resolve_threads(opts.threads),
                         static_cast<unsigned>(ks.size()));
  auto worker = [&](unsigned tid) {
    std::vector<double> mag_buf;
    Envelope env_buf;
    for (std::size_t ik = tid; ik < ks.size(); ik += nthreads) {
      for (std::size_t ic = 0; ic < cs.size(); ++ic) {
        const double k = ks[ik];
        const double c = cs[ic];
        const std::complex<double> alpha(k, omega * c);
        bool fallback = !base_ok;
        std::complex<double> s = 0.0;
        if (base_ok) {
          const std::complex<double> denom = 1.0 + alpha * uz;
          if (std::abs(denom) <
              1e-10 * (1.0 + std::abs(alpha) * std::abs(uz)))
            fallback = true;
          else
            s = alpha * uy / denom;
        }
        double cf;
        if (!fallback) {
          cf = cell_cf(xs, w0, wz, s, mag_buf, section, env_buf);
        } else {
          const HarmonicSolution sol = base.solve_direct(u, k, c, q);
          const Eigen::VectorXcd field =
              phi_sec.cast<std::complex<double>>() * sol.eta;
          mag_buf.resize(static_cast<std::size_t>(m));
          for (Eigen::Index j = 0; j < m; ++j)
            mag_buf[static_cast<std::size_t>(j)] = std::abs(field(j));
          env_buf.grid = xs;
          env_buf.magnitude = mag_buf;
          cf = cost_function(env_buf, section);
        }
        map.values(static_cast<Eigen::Index>(ik),
                   static_cast<Eigen::Index>(ic)) = cf;
        map.flags(static_cast<Eigen::Index>(ik),
                  static_cast<Eigen::Index>(ic)) = fallback ? 1 : 0;
      }
    }
  };

  if (nthreads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return map;
}

CFMap cf_map(const BeamConfig& beam, const ModalBasis& basis,
             double absorber_location, double frequency,
             const GridAxis& k_axis, const GridAxis& c_axis,
             const SweepOptions& opts) {
  const AssembledSystem sys = assemble(beam, basis);
  return cf_map(sys, beam, basis, absorber_location, frequency, k_axis, c_axis,
                opts);
}

std::vector<CFMap> stacked_cf(const BeamConfig& beam, const ModalBasis& basis,
                              double absorber_location, const GridAxis& f_axis,
                              const GridAxis& k_axis, const GridAxis& c_axis,
                              const SweepOptions& opts) {
  const AssembledSystem sys = assemble(beam, basis);
  const std::vector<double> fs = f_axis.values();
  std::vector<CFMap> maps;
  maps.reserve(fs.size());
  // Frequencies are independent; each map is internally threaded, so keep
  // the outer loop sequential to bound memory.
  for (double f : fs)
    maps.push_back(cf_map(sys, beam, basis, absorber_location, f, k_axis,
                          c_axis, opts));
  return maps;
}

SweepResult location_sweep(const BeamConfig& beam, const ModalBasis& basis,
                           double frequency, const GridAxis& l1_axis,
                           const GridAxis& k_axis, const GridAxis& c_axis,
                           const SweepOptions& opts) {
  const AssembledSystem sys = assemble(beam, basis);
  SweepResult result;
  result.parameter_name = "absorber_location";
  for (double l1 : l1_axis.values()) {
    CFMap map = cf_map(sys, beam, basis, l1, frequency, k_axis, c_axis, opts);
    const double frac = optimal_region_measure(map);
    const double mn = map.min_value();
    result.entries.push_back({l1, frac, mn, std::move(map)});
  }
  return result;
}

SweepResult geometry_sweep(const std::vector<BeamConfig>& schedule,
                           const std::vector<double>& parameters,
                           std::string parameter_name, const ModalBasis& basis,
                           double frequency, double absorber_location,
                           const GridAxis& k_axis, const GridAxis& c_axis,
                           const SweepOptions& opts) {
  if (schedule.size() != parameters.size())
    throw std::invalid_argument("geometry_sweep: schedule/parameter mismatch");
  SweepResult result;
  result.parameter_name = std::move(parameter_name);
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    CFMap map = cf_map(schedule[i], basis, absorber_location, frequency,
                       k_axis, c_axis, opts);
    const double frac = optimal_region_measure(map);
    const double mn = map.min_value();
    result.entries.push_back({parameters[i], frac, mn, std::move(map)});
  }
  return result;
}

SweepResult gradient_index_sweep(const BeamConfig& beam,
                                 const ModalBasis& basis,
                                 const GridAxis& n_axis, double frequency,
                                 double absorber_location,
                                 const GridAxis& k_axis,
                                 const GridAxis& c_axis,
                                 const SweepOptions& opts) {
  std::vector<BeamConfig> schedule;
  std::vector<double> params = n_axis.values();
  schedule.reserve(params.size());
  for (double n : params) schedule.push_back(with_gradient_index(beam, n));
  return geometry_sweep(schedule, params, "gradient_index", basis, frequency,
                        absorber_location, k_axis, c_axis, opts);
}

BeamConfig mean_preserving_taper(const BeamConfig& base, double ratio,
                                 double gradient_index) {
  if (!(ratio > 0.0))
    throw std::invalid_argument("mean_preserving_taper: ratio must be > 0");
  const auto taper = [&](const PowerLawProfile& p) {
    const double mean = 0.5 * (p.left() + p.right());
    return PowerLawProfile(2.0 * mean * ratio / (1.0 + ratio),
                           2.0 * mean / (1.0 + ratio), gradient_index);
  };
  return BeamConfig(base.length, taper(base.width), taper(base.thickness),
                    base.modulus, base.density);
}

std::vector<BeamConfig> taper_schedule(const BeamConfig& base,
                                       const std::vector<double>& ratios,
                                       double gradient_index) {
  std::vector<BeamConfig> out;
  out.reserve(ratios.size());
  for (double r : ratios)
    out.push_back(mean_preserving_taper(base, r, gradient_index));
  return out;
}

BeamConfig with_modulus(const BeamConfig& base, double left, double right,
                        double gradient_index) {
  return BeamConfig(base.length, base.width, base.thickness,
                    PowerLawProfile(left, right, gradient_index),
                    base.density);
}

BeamConfig with_density(const BeamConfig& base, double left, double right,
                        double gradient_index) {
  return BeamConfig(base.length, base.width, base.thickness, base.modulus,
                    PowerLawProfile(left, right, gradient_index));
}

BeamConfig with_gradient_index(const BeamConfig& base, double n) {
  const auto regrade = [&](const PowerLawProfile& p) {
    if (p.is_constant()) return p;
    return PowerLawProfile(p.left(), p.right(), n);
  };
  return BeamConfig(base.length, regrade(base.width), regrade(base.thickness),
                    regrade(base.modulus), regrade(base.density));
}

std::pair<double, double> material_endpoints_for_ratio(double uniform_value,
                                                       double ratio) {
  if (!(ratio >= 1.0))
    throw std::invalid_argument(
        "material_endpoints_for_ratio: ratio must be >= 1");
  const double t = (ratio - 1.0) / (2.2 + 0.8 * ratio);
  return {uniform_value * (1.0 + 2.2 * t), uniform_value * (1.0 - 0.8 * t)};
}

}  // namespace twbeam
