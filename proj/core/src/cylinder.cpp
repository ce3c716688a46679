#include "vdw/cylinder.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>

namespace vdw {

const char* to_string(CylinderValidity v) {
  return v == CylinderValidity::high_precision ? "high-precision" : "extrapolated";
}

namespace {

struct CylinderShape {
  double R;
  std::optional<double> shell_d;
};

CylinderShape cylinder_shape(const WallGeometry& wall) {
  if (const auto* c = std::get_if<SolidCylinder>(&wall.shape)) return {c->radius_m, std::nullopt};
  if (const auto* s = std::get_if<CylindricalShell>(&wall.shape)) {
    if (s->thickness_m == s->radius_m) return {s->radius_m, std::nullopt};
    return {s->radius_m, s->thickness_m};
  }
  throw std::invalid_argument("c3_cylinder: wall must be a solid cylinder or a shell");
}

LifshitzResult cylinder_c3(const PolarizabilityModel& particle, const Material& material, const CylinderShape& cyl,
                           double a_m, double temperature_K, const LifshitzOptions& options) {
  const double b = a_m / (2.0 * (cyl.R + a_m));
  detail::SumOutcome s =
      detail::atom_wall_sum(particle, material, cyl.shell_d, a_m, temperature_K, b, options);
  LifshitzResult r;
  r.separation_m = a_m;
  r.temperature_K = temperature_K;
  r.c3_si = std::sqrt(cyl.R / (cyl.R + a_m)) * constants::k_B * temperature_K / 8.0 * s.sum;
  r.c3_au = units::c3_si_to_au(r.c3_si);
  r.free_energy_J = -r.c3_si / (a_m * a_m * a_m);
  r.diagnostics = std::move(s.diagnostics);
  return r;
}

}  // namespace

CylinderResult c3_cylinder(const PolarizabilityModel& particle, const WallGeometry& wall, double a_m,
                           double temperature_K, const LifshitzOptions& options) {
  wall.validate();
  const CylinderShape cyl = cylinder_shape(wall);
  CylinderResult out;
  out.lifshitz = cylinder_c3(particle, wall.material, cyl, a_m, temperature_K, options);
  const LifshitzResult semi =
      c3_planar(particle, WallGeometry::semispace(wall.material), a_m, temperature_K, options);
  out.c3_semispace_au = semi.c3_au;
  out.delta = semi.c3_au == 0.0 ? 0.0 : (semi.c3_au - out.lifshitz.c3_au) / semi.c3_au;
  out.validity = a_m <= cyl.R / 2.0 ? CylinderValidity::high_precision : CylinderValidity::extrapolated;

  auto& warnings = out.lifshitz.diagnostics.warnings;
  char buf[160];
  if (a_m < kContinuumLimit_m) {
    std::snprintf(buf, sizeof buf, "a = %g nm is below the 3 nm continuum limit", units::m_to_nm(a_m));
    warnings.emplace_back(buf);
  }
  if (cyl.shell_d && *cyl.shell_d < kContinuumLimit_m) {
    std::snprintf(buf, sizeof buf, "shell thickness %g nm is below 3 nm", units::m_to_nm(*cyl.shell_d));
    warnings.emplace_back(buf);
  }
  if (out.validity == CylinderValidity::extrapolated) {
    std::snprintf(buf, sizeof buf, "a = %g nm exceeds R/2 = %g nm; result is extrapolated", units::m_to_nm(a_m),
                  units::m_to_nm(cyl.R / 2.0));
    warnings.emplace_back(buf);
  }
  return out;
}

double delta_semispace_cylinder(const PolarizabilityModel& particle, const Material& material, double R_m,
                                double a_m, double temperature_K, const LifshitzOptions& options) {
  return c3_cylinder(particle, WallGeometry::solid_cylinder(material, R_m), a_m, temperature_K, options).delta;
}

std::vector<ShellScanPoint> shell_thickness_scan(const PolarizabilityModel& particle, const Material& material,
                                                 double R_m, double a_m, double temperature_K,
                                                 std::span<const double> thickness_grid_m,
                                                 const LifshitzOptions& options) {
  std::vector<ShellScanPoint> out;
  out.reserve(thickness_grid_m.size());
  for (const double d : thickness_grid_m) {
    const WallGeometry wall = WallGeometry::shell(material, R_m, d);
    wall.validate();
    out.push_back({d, cylinder_c3(particle, material, cylinder_shape(wall), a_m, temperature_K, options).c3_au});
  }
  return out;
}

}  // namespace vdw
