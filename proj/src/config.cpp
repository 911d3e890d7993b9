#include "twbeam/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace twbeam {

namespace {

struct Entry {
  std::string value;
  int line;
  mutable bool used = false;
};

using SectionMap = std::map<std::string, std::map<std::string, Entry>>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

SectionMap tokenize(const std::string& text) {
  static const std::set<std::string> known_sections = {
      "beam", "absorber", "excitation", "solver", "sweep", "output"};
  SectionMap sections;
  std::istringstream in(text);
  std::string line;
  std::string current;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) +
                          ": malformed section header '" + t + "'");
      current = trim(t.substr(1, t.size() - 2));
      if (!known_sections.count(current))
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unknown section [" + current + "]");
      sections[current];
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'key = value', got '" + t + "'");
    if (current.empty())
      throw ConfigError("line " + std::to_string(lineno) +
                        ": key outside any section");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(lineno) +
                        ": empty key or value");
    if (sections[current].count(key))
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" +
                        key + "' in [" + current + "]");
    sections[current][key] = Entry{value, lineno};
  }
  return sections;
}

class Reader {
 public:
  explicit Reader(const SectionMap& sections) : sections_(sections) {}

  const Entry* find(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    if (s == sections_.end()) return nullptr;
    const auto k = s->second.find(key);
    if (k == s->second.end()) return nullptr;
    k->second.used = true;
    return &k->second;
  }

  bool has_section(const std::string& section) const {
    return sections_.count(section) != 0;
  }

  double number(const std::string& section, const std::string& key,
                const Entry& e) const {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(e.value, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != e.value.size())
      throw ConfigError("line " + std::to_string(e.line) + ": key '" + section +
                        "." + key + "' is not a number: '" + e.value + "'");
    return v;
  }

  double require(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e)
      throw ConfigError("missing required key '" + section + "." + key + "'");
    return number(section, key, *e);
  }

  double get(const std::string& section, const std::string& key,
             double fallback) const {
    const Entry* e = find(section, key);
    return e ? number(section, key, *e) : fallback;
  }

  std::size_t get_size(const std::string& section, const std::string& key,
                       std::size_t fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    const double v = number(section, key, *e);
    if (v < 0.0 || v != std::floor(v))
      throw ConfigError("line " + std::to_string(e->line) + ": key '" + section +
                        "." + key + "' must be a nonnegative integer");
    return static_cast<std::size_t>(v);
  }

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const {
    const Entry* e = find(section, key);
    return e ? e->value : fallback;
  }

  bool get_bool(const std::string& section, const std::string& key,
                bool fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    if (e->value == "true" || e->value == "1") return true;
    if (e->value == "false" || e->value == "0") return false;
    throw ConfigError("line " + std::to_string(e->line) + ": key '" + section +
                      "." + key + "' must be true or false");
  }

  void check_all_used() const {
    for (const auto& [section, keys] : sections_)
      for (const auto& [key, entry] : keys)
        if (!entry.used)
          throw ConfigError("line " + std::to_string(entry.line) +
                            ": unknown key '" + section + "." + key + "'");
  }

 private:
  const SectionMap& sections_;
};

PowerLawProfile read_profile(const Reader& r, const std::string& key,
                             const std::string& what) {
  const double left = r.require("beam", key + "_left");
  const double right = r.get("beam", key + "_right", left);
  const double index = r.get("beam", key + "_index", 1.0);
  try {
    return PowerLawProfile(left, right, index);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("invalid " + what + ": " + e.what());
  }
}

GridAxis::Scale read_scale(const Reader& r, const std::string& key,
                           GridAxis::Scale fallback) {
  const std::string s = r.get_string(
      "sweep", key,
      fallback == GridAxis::Scale::linear ? "linear" : "log");
  if (s == "linear") return GridAxis::Scale::linear;
  if (s == "log" || s == "logarithmic") return GridAxis::Scale::logarithmic;
  throw ConfigError("key 'sweep." + key + "' must be linear or log");
}

GridAxis read_axis(const Reader& r, const std::string& prefix,
                   const GridAxis& fallback) {
  const double mn = r.get("sweep", prefix + "_min", fallback.min);
  const double mx = r.get("sweep", prefix + "_max", fallback.max);
  const std::size_t count =
      r.get_size("sweep", prefix + "_count", fallback.count);
  const GridAxis::Scale scale =
      read_scale(r, prefix + "_scale", fallback.scale);
  try {
    return GridAxis(fallback.name, mn, mx, count, scale);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid sweep axis '") + prefix +
                      "': " + e.what());
  }
}

SweepParameter read_parameter(const Reader& r) {
  const std::string s = r.get_string("sweep", "parameter", "none");
  if (s == "none") return SweepParameter::none;
  if (s == "taper") return SweepParameter::taper;
  if (s == "modulus") return SweepParameter::modulus;
  if (s == "density") return SweepParameter::density;
  if (s == "location") return SweepParameter::location;
  if (s == "gradient_index") return SweepParameter::gradient_index;
  throw ConfigError("key 'sweep.parameter' has unknown value '" + s + "'");
}

}  // namespace

Section RunConfig::section() const {
  if (section_start && section_end) {
    try {
      return Section(*section_start, *section_end);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("invalid solver.section: ") + e.what());
    }
  }
  return default_tw_section(absorber.location, beam.length, section_margin);
}

SweepOptions RunConfig::sweep_options(unsigned threads) const {
  SweepOptions opts;
  opts.grid_points = grid_points;
  opts.section_margin = section_margin;
  opts.threads = threads;
  if (section_start && section_end) {
    opts.use_default_section = false;
    opts.section = section();
  }
  return opts;
}

RunConfig parse_config(const std::string& text) {
  const SectionMap sections = tokenize(text);
  const Reader r(sections);

  double length = r.require("beam", "length");
  if (!(length > 0.0)) throw ConfigError("key 'beam.length' must be positive");

  PowerLawProfile width = read_profile(r, "width", "width");
  PowerLawProfile thickness = read_profile(r, "thickness", "thickness");
  PowerLawProfile modulus = read_profile(r, "modulus", "modulus");
  PowerLawProfile density = read_profile(r, "density", "density");

  const double l1 = r.require("absorber", "location");
  const double k = r.get("absorber", "stiffness", 0.0);
  const double c = r.get("absorber", "damping", 0.0);
  if (!(l1 > 0.0) || !(l1 < length))
    throw ConfigError("key 'absorber.location' must lie strictly inside (0, L)");

  const double f = r.require("excitation", "frequency");
  const double amp = r.get("excitation", "amplitude", 1.0);
  if (!(f > 0.0))
    throw ConfigError("key 'excitation.frequency' must be positive");

  RunConfig cfg{
      BeamConfig(length, std::move(width), std::move(thickness),
                 std::move(modulus), std::move(density)),
      [&] {
        try {
          return AbsorberConfig(l1, k, c);
        } catch (const std::invalid_argument& e) {
          throw ConfigError(std::string("invalid [absorber]: ") + e.what());
        }
      }(),
      ExcitationConfig(f, amp)};

  cfg.modes = r.get_size("solver", "modes", 100);
  if (cfg.modes < 1) throw ConfigError("key 'solver.modes' must be >= 1");
  cfg.quadrature_panels = r.get_size("solver", "quadrature_panels", 0);
  cfg.quadrature_points = r.get_size("solver", "quadrature_points", 10);
  if (cfg.quadrature_points < 2)
    throw ConfigError("key 'solver.quadrature_points' must be >= 2");
  cfg.grid_points = r.get_size("solver", "grid_points", 2001);
  if (cfg.grid_points < 2)
    throw ConfigError("key 'solver.grid_points' must be >= 2");
  cfg.section_margin = r.get("solver", "section_margin", 0.05);
  if (const Entry* e = r.find("solver", "section_start"))
    cfg.section_start = r.number("solver", "section_start", *e);
  if (const Entry* e = r.find("solver", "section_end"))
    cfg.section_end = r.number("solver", "section_end", *e);
  if (cfg.section_start.has_value() != cfg.section_end.has_value())
    throw ConfigError(
        "keys 'solver.section_start' and 'solver.section_end' must be given "
        "together");
  cfg.natfreq_count = r.get_size("solver", "natfreq_count", 20);
  cfg.converge_min = r.get_size("solver", "converge_min", 20);
  cfg.converge_max = r.get_size("solver", "converge_max", 0);
  cfg.converge_step = r.get_size("solver", "converge_step", 10);
  if (cfg.converge_step < 1)
    throw ConfigError("key 'solver.converge_step' must be >= 1");

  cfg.k_axis = read_axis(r, "k", GridAxis::default_stiffness());
  cfg.c_axis = read_axis(r, "c", GridAxis::default_damping());
  cfg.f_axis = read_axis(r, "f", GridAxis::default_frequency());
  cfg.sweep_parameter = read_parameter(r);
  if (cfg.sweep_parameter != SweepParameter::none) {
    const double pmin = r.require("sweep", "param_min");
    const double pmax = r.get("sweep", "param_max", pmin);
    const std::size_t pcount = r.get_size("sweep", "param_count", 1);
    try {
      cfg.parameter_axis = GridAxis("parameter", pmin, pmax, pcount);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("invalid sweep parameter axis: ") +
                        e.what());
    }
  }
  cfg.write_maps = r.get_bool("sweep", "write_maps", false);
  cfg.cf_threshold = r.get("sweep", "threshold", 0.3);
  if (!(cfg.cf_threshold > 0.0) || !(cfg.cf_threshold < 1.0))
    throw ConfigError("key 'sweep.threshold' must lie in (0, 1)");

  cfg.output_prefix = r.get_string("output", "prefix", "");

  r.check_all_used();

  // Cross-checks the constructors cannot see.
  if (cfg.section_start && !(*cfg.section_end <= cfg.beam.length))
    throw ConfigError("key 'solver.section_end' must be <= beam length");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config(buf.str());
}

}  // namespace twbeam
