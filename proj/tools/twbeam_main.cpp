#include <cstdio>
#include <exception>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twbeam/config.hpp"
#include "twbeam/csv.hpp"
#include "twbeam/solver.hpp"
#include "twbeam/sweep.hpp"
#include "twbeam/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

struct CommonArgs {
  std::string config_path;
  std::string out;       // output prefix override
  unsigned threads = 0;  // 0 = hardware concurrency
  std::size_t modes = 0; // 0 = value from the config
};

struct Loaded {
  twbeam::RunConfig cfg;
  std::string prefix;
};

Loaded load(const CommonArgs& args, const std::string& fallback_prefix) {
  Loaded l{twbeam::load_config(args.config_path), {}};
  if (args.modes > 0) l.cfg.modes = args.modes;
  l.prefix = !args.out.empty() ? args.out
             : !l.cfg.output_prefix.empty() ? l.cfg.output_prefix
                                            : fallback_prefix;
  return l;
}

void add_beam_comments(twbeam::CsvWriter& csv, const twbeam::RunConfig& cfg) {
  const twbeam::BeamConfig& b = cfg.beam;
  csv.add_comment("length_m = " + twbeam::format_double(b.length));
  const auto profile = [&](const char* name, const twbeam::PowerLawProfile& p) {
    csv.add_comment(std::string(name) + " = " +
                    twbeam::format_double(p.left()) + " .. " +
                    twbeam::format_double(p.right()) + " (N = " +
                    twbeam::format_double(p.gradient_index()) + ")");
  };
  profile("width_m", b.width);
  profile("thickness_m", b.thickness);
  profile("modulus_pa", b.modulus);
  profile("density_kg_per_m3", b.density);
  csv.add_comment("absorber_location_m = " +
                  twbeam::format_double(cfg.absorber.location));
  csv.add_comment("modes = " + std::to_string(cfg.modes));
}

void write_map(const twbeam::CFMap& map, const twbeam::RunConfig& cfg,
               const std::string& path) {
  twbeam::CsvWriter csv({"k_n_per_m", "c_ns_per_m", "cf"});
  csv.add_comment("frequency_hz = " + twbeam::format_double(map.frequency));
  add_beam_comments(csv, cfg);
  const auto ks = map.k_axis.values();
  const auto cs = map.c_axis.values();
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      csv.add_row({ks[i], cs[j],
                   map.values(static_cast<Eigen::Index>(i),
                              static_cast<Eigen::Index>(j))});
  csv.write(path);
}

int run_natfreq(const CommonArgs& args) {
  const Loaded l = load(args, "natfreq");
  const twbeam::RunConfig& cfg = l.cfg;
  const twbeam::ModalBasis basis(cfg.modes, cfg.beam.length);
  const twbeam::AssembledSystem sys =
      twbeam::assemble(cfg.beam, basis, cfg.quadrature());
  const Eigen::VectorXd u =
      twbeam::coupling_vector(basis, cfg.absorber.location);
  const auto omegas = twbeam::natural_frequencies(
      sys, u, cfg.absorber.stiffness, cfg.natfreq_count);

  twbeam::CsvWriter csv({"mode", "omega_rad_per_s", "f_hz", "omega_bar"});
  add_beam_comments(csv, cfg);
  csv.add_comment("absorber_stiffness_n_per_m = " +
                  twbeam::format_double(cfg.absorber.stiffness));
  for (std::size_t i = 0; i < omegas.size(); ++i)
    csv.add_row({static_cast<double>(i + 1), omegas[i],
                 omegas[i] / (2.0 * std::numbers::pi),
                 twbeam::nondimensionalize_frequency(omegas[i], cfg.beam)});
  csv.write(l.prefix + ".csv");
  std::printf("wrote %s.csv (%zu modes)\n", l.prefix.c_str(), omegas.size());
  return kExitOk;
}

int run_respond(const CommonArgs& args) {
  const Loaded l = load(args, "respond");
  const twbeam::RunConfig& cfg = l.cfg;
  const twbeam::ModalBasis basis(cfg.modes, cfg.beam.length);
  const twbeam::AssembledSystem sys =
      twbeam::assemble(cfg.beam, basis, cfg.quadrature());
  const twbeam::HarmonicSolution sol =
      twbeam::harmonic_response(sys, basis, cfg.absorber, cfg.excitation);
  const std::vector<double> grid =
      twbeam::uniform_grid(cfg.beam.length, cfg.grid_points);
  const Eigen::VectorXcd field = twbeam::physical_field(sol, basis, grid);
  std::vector<std::complex<double>> fv(field.data(),
                                       field.data() + field.size());
  const twbeam::Envelope env = twbeam::Envelope::from_field(grid, fv);
  const double cf = twbeam::cost_function(env, cfg.section());

  twbeam::CsvWriter csv({"x_m", "abs_w_m", "re_w_m", "im_w_m"});
  csv.add_comment("frequency_hz = " +
                  twbeam::format_double(cfg.excitation.frequency));
  add_beam_comments(csv, cfg);
  csv.add_comment("cf = " + twbeam::format_double(cf));
  for (std::size_t j = 0; j < env.grid.size(); ++j)
    csv.add_row({env.grid[j], env.magnitude[j], env.field[j].real(),
                 env.field[j].imag()});
  csv.write(l.prefix + ".csv");
  std::printf("CF = %.6f over [%g, %g] m; wrote %s.csv\n", cf,
              cfg.section().start, cfg.section().end, l.prefix.c_str());
  return kExitOk;
}

int run_cfmap(const CommonArgs& args) {
  const Loaded l = load(args, "cfmap");
  const twbeam::RunConfig& cfg = l.cfg;
  const twbeam::ModalBasis basis(cfg.modes, cfg.beam.length);
  const twbeam::AssembledSystem sys =
      twbeam::assemble(cfg.beam, basis, cfg.quadrature());
  const twbeam::CFMap map = twbeam::cf_map(
      sys, cfg.beam, basis, cfg.absorber.location, cfg.excitation.frequency,
      cfg.k_axis, cfg.c_axis, cfg.sweep_options(args.threads));
  write_map(map, cfg, l.prefix + ".csv");
  std::printf("min CF = %.6f, fraction(CF <= %g) = %.4f; wrote %s.csv\n",
              map.min_value(),
              cfg.cf_threshold,
              twbeam::optimal_region_measure(map, cfg.cf_threshold),
              l.prefix.c_str());
  return kExitOk;
}

int run_stack(const CommonArgs& args) {
  const Loaded l = load(args, "stack");
  const twbeam::RunConfig& cfg = l.cfg;
  const twbeam::ModalBasis basis(cfg.modes, cfg.beam.length);
  const auto maps = twbeam::stacked_cf(
      cfg.beam, basis, cfg.absorber.location, cfg.f_axis, cfg.k_axis,
      cfg.c_axis, cfg.sweep_options(args.threads));

  twbeam::CsvWriter index({"f_hz", "min_cf", "optimal_fraction", "file"});
  index.add_comment("cf_threshold = " +
                    twbeam::format_double(cfg.cf_threshold));
  add_beam_comments(index, cfg);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string file = l.prefix + "_" + std::to_string(i) + ".csv";
    if (cfg.write_maps) write_map(maps[i], cfg, file);
    index.add_row({twbeam::format_double(maps[i].frequency),
                   twbeam::format_double(maps[i].min_value()),
                   twbeam::format_double(twbeam::optimal_region_measure(
                       maps[i], cfg.cf_threshold)),
                   cfg.write_maps ? file : std::string("-")});
  }
  index.write(l.prefix + "_index.csv");
  std::printf("wrote %s_index.csv (%zu frequencies)\n", l.prefix.c_str(),
              maps.size());
  return kExitOk;
}

int run_sweep(const CommonArgs& args) {
  const Loaded l = load(args, "sweep");
  const twbeam::RunConfig& cfg = l.cfg;
  const twbeam::ModalBasis basis(cfg.modes, cfg.beam.length);
  const twbeam::SweepOptions opts = cfg.sweep_options(args.threads);
  const double f = cfg.excitation.frequency;
  const double l1 = cfg.absorber.location;

  twbeam::SweepResult result;
  switch (cfg.sweep_parameter) {
    case twbeam::SweepParameter::taper: {
      const auto ratios = cfg.parameter_axis.values();
      result = twbeam::geometry_sweep(
          twbeam::taper_schedule(cfg.beam, ratios), ratios, "taper_ratio",
          basis, f, l1, cfg.k_axis, cfg.c_axis, opts);
      break;
    }
    case twbeam::SweepParameter::modulus:
    case twbeam::SweepParameter::density: {
      const bool is_modulus =
          cfg.sweep_parameter == twbeam::SweepParameter::modulus;
      const auto ratios = cfg.parameter_axis.values();
      std::vector<twbeam::BeamConfig> schedule;
      for (double r : ratios) {
        const double uniform = is_modulus ? cfg.beam.modulus.left()
                                          : cfg.beam.density.left();
        const auto [lv, rv] =
            twbeam::material_endpoints_for_ratio(uniform, r);
        schedule.push_back(is_modulus
                               ? twbeam::with_modulus(cfg.beam, lv, rv)
                               : twbeam::with_density(cfg.beam, lv, rv));
      }
      result = twbeam::geometry_sweep(
          schedule, ratios,
          is_modulus ? "modulus_ratio" : "density_ratio", basis, f, l1,
          cfg.k_axis, cfg.c_axis, opts);
      break;
    }
    case twbeam::SweepParameter::location: {
      twbeam::GridAxis l1_axis("absorber_location",
                               cfg.parameter_axis.min * cfg.beam.length,
                               cfg.parameter_axis.max * cfg.beam.length,
                               cfg.parameter_axis.count,
                               cfg.parameter_axis.scale);
      result = twbeam::location_sweep(cfg.beam, basis, f, l1_axis, cfg.k_axis,
                                      cfg.c_axis, opts);
      break;
    }
    case twbeam::SweepParameter::gradient_index:
      result = twbeam::gradient_index_sweep(cfg.beam, basis,
                                            cfg.parameter_axis, f, l1,
                                            cfg.k_axis, cfg.c_axis, opts);
      break;
    case twbeam::SweepParameter::none:
      std::fprintf(stderr,
                   "sweep: the config has no [sweep] parameter set\n");
      return kExitConfigError;
  }

  twbeam::CsvWriter csv({result.parameter_name, "optimal_fraction", "min_cf",
                         "map_file"});
  csv.add_comment("frequency_hz = " + twbeam::format_double(f));
  csv.add_comment("cf_threshold = " + twbeam::format_double(cfg.cf_threshold));
  add_beam_comments(csv, cfg);
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const twbeam::SweepEntry& e = result.entries[i];
    const std::string file = l.prefix + "_" + std::to_string(i) + ".csv";
    if (cfg.write_maps) write_map(e.map, cfg, file);
    csv.add_row({twbeam::format_double(e.parameter),
                 twbeam::format_double(twbeam::optimal_region_measure(
                     e.map, cfg.cf_threshold)),
                 twbeam::format_double(e.min_cf),
                 cfg.write_maps ? file : std::string("-")});
  }
  csv.write(l.prefix + "_summary.csv");
  std::printf("wrote %s_summary.csv (%zu entries, parameter %s)\n",
              l.prefix.c_str(), result.entries.size(),
              result.parameter_name.c_str());
  return kExitOk;
}

int run_converge(const CommonArgs& args) {
  const Loaded l = load(args, "converge");
  const twbeam::RunConfig& cfg = l.cfg;
  const std::size_t n_ref =
      cfg.converge_max == 0 ? cfg.modes : cfg.converge_max;

  twbeam::CsvWriter csv({"modes", "max_envelope_deviation"});
  csv.add_comment("reference_modes = " + std::to_string(n_ref));
  csv.add_comment("frequency_hz = " +
                  twbeam::format_double(cfg.excitation.frequency));
  add_beam_comments(csv, cfg);
  for (std::size_t n = cfg.converge_min; n < n_ref; n += cfg.converge_step) {
    const double dev = twbeam::envelope_deviation(
        cfg.beam, cfg.absorber, cfg.excitation, n, n_ref, cfg.grid_points);
    csv.add_row({static_cast<double>(n), dev});
    std::printf("n = %3zu  max deviation vs n = %zu: %.3e\n", n, n_ref, dev);
  }
  csv.write(l.prefix + ".csv");
  std::printf("wrote %s.csv\n", l.prefix.c_str());
  return kExitOk;
}

int run_verify(unsigned threads) {
  const twbeam::VerifyReport report = twbeam::run_verification(threads);
  for (const twbeam::VerifyCheck& c : report.checks)
    std::printf("[%s] %-38s measured %.3e  limit %.3e  %s\n",
                c.passed ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                c.limit, c.detail.c_str());
  if (!report.all_passed()) {
    std::printf("verification FAILED\n");
    return kExitVerifyFailed;
  }
  std::printf("verification passed\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Traveling-wave response of tapered and functionally graded cantilever "
      "beams with an intermediate spring-damper absorber"};
  app.require_subcommand(1);

  CommonArgs args;
  const auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("-c,--config", args.config_path,
                                "INI configuration file");
    if (needs_config) opt->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--out", args.out, "output file prefix");
    sub->add_option("-t,--threads", args.threads,
                    "worker threads (0 = all cores)");
    sub->add_option("-n,--modes", args.modes,
                    "trial-function count override");
    return sub;
  };

  auto* natfreq = add_common(
      app.add_subcommand("natfreq", "natural frequencies with the absorber "
                                    "spring attached"),
      true);
  auto* respond = add_common(
      app.add_subcommand("respond", "steady-state envelope and CF at one "
                                    "operating point"),
      true);
  auto* cfmap = add_common(
      app.add_subcommand("cfmap", "CF over the (k, c) grid at one frequency"),
      true);
  auto* stack = add_common(
      app.add_subcommand("stack", "CF maps across the frequency axis"), true);
  auto* sweep = add_common(
      app.add_subcommand("sweep", "parameter sweep from the [sweep] section"),
      true);
  auto* converge = add_common(
      app.add_subcommand("converge", "envelope convergence in the "
                                     "trial-function count"),
      true);
  auto* verify = add_common(
      app.add_subcommand("verify", "built-in verification suite"), false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (natfreq->parsed()) return run_natfreq(args);
    if (respond->parsed()) return run_respond(args);
    if (cfmap->parsed()) return run_cfmap(args);
    if (stack->parsed()) return run_stack(args);
    if (sweep->parsed()) return run_sweep(args);
    if (converge->parsed()) return run_converge(args);
    if (verify->parsed()) return run_verify(args.threads);
  } catch (const twbeam::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumericalError;
  }
  return kExitOk;
}
