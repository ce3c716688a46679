#pragma once

// Scenario documents for vdwcalc. A scenario is a single JSON object; command
// line flags override its fields. Lengths are in nm, temperatures in K.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vdw/lifshitz.hpp"
#include "vdw/permittivity.hpp"
#include "vdw/polarizability.hpp"

namespace vdwcalc {

/// Bad configuration or input files; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MaterialRef {
  /// Bundled material name; ignored when `dataset` is set.
  std::string bundled = "drude-test";
  /// Optical data descriptor (absolute path after resolution).
  std::optional<std::string> dataset;
  /// "const3" or "const0": the constant low-frequency Im eps_z extrapolation.
  std::optional<std::string> eps_z_variant;
  std::string kk_method = "closed";

  vdw::Material resolve() const;
  std::string label() const;
};

/// Strictly increasing grid of one scan variable.
struct GridSpec {
  std::string variable;
  std::vector<double> values;
};

struct Geometry {
  std::string kind = "semispace";  // semispace | plate | cylinder | shell
  double R_nm = 0.0;
  double d_nm = 0.0;
  /// Particle distance when the scan runs over R or d.
  double a_nm = 0.0;
};

struct Nanotube {
  std::string mode = "transect";  // transect | difference
  double R0_nm = 0.0;
  double R_nm = 0.0;
  double a_nm = 3.0;
  /// For mode = difference: which radius stays fixed while d varies ("R0" or "R").
  std::string fixed = "R0";
  std::string exterior = "lifshitz";  // lifshitz | pairwise
};

struct FrequencyGrid {
  /// l = 1..matsubara at the scenario temperature.
  std::size_t matsubara = 0;
  double xi_min_rad_s = 0.0;
  double xi_max_rad_s = 0.0;
  std::size_t points = 0;

  std::vector<double> values(double temperature_K) const;
};

struct Scenario {
  std::string command;
  std::vector<std::string> particles{"H-1osc"};
  MaterialRef material;
  Geometry geometry;
  Nanotube nanotube;
  double temperature_K = 300.0;
  GridSpec scan{"a", {}};
  std::optional<GridSpec> series;
  FrequencyGrid frequencies;
  std::string out_path;
  bool svg = false;
  vdw::LifshitzOptions numerics;
  unsigned threads = 0;

  /// Relative paths are resolved against `base_dir`.
  static Scenario from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);
  static Scenario load(const std::filesystem::path& path);
  /// Round-trips through from_json.
  nlohmann::json to_json() const;
};

/// Parses {"variable", "values_nm"} or {"from_nm", "to_nm", "step_nm"} or
/// {"from_nm", "to_nm", "points", "log"}. Throws InputError unless finite and strictly increasing.
GridSpec parse_grid(const nlohmann::json& j);

vdw::PolarizabilityModel resolve_particle(const std::string& ref);

}  // namespace vdwcalc
