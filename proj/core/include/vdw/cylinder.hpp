#pragma once

// Particle outside a solid cylinder or cylindrical shell, obtained from the
// planar Lifshitz free energy through the proximity-force construction.

#include <span>
#include <vector>

#include "vdw/planar.hpp"

namespace vdw {

enum class CylinderValidity {
  /// a <= R/2.
  high_precision,
  /// a > R/2; computed anyway, accuracy degrades gradually.
  extrapolated,
};

const char* to_string(CylinderValidity v);

struct CylinderResult {
  /// F = -C3^c / a^3 with C3^c in the c3 fields.
  LifshitzResult lifshitz;
  /// C3 of a semispace of the same material at the same a and T.
  double c3_semispace_au = 0.0;
  /// (C3^s - C3^c) / C3^s.
  double delta = 0.0;
  CylinderValidity validity = CylinderValidity::high_precision;
};

/// Wall must be a solid cylinder or a shell; a shell with d == R is treated as
/// solid. Warns for shells thinner than 3 nm.
CylinderResult c3_cylinder(const PolarizabilityModel& particle, const WallGeometry& wall, double a_m,
                           double temperature_K, const LifshitzOptions& options = {});

/// (C3^s - C3^c) / C3^s for a solid cylinder of radius R.
double delta_semispace_cylinder(const PolarizabilityModel& particle, const Material& material, double R_m,
                                double a_m, double temperature_K, const LifshitzOptions& options = {});

struct ShellScanPoint {
  double thickness_m;
  double c3_au;
};

/// C3^c of shells with outer radius R over the thickness grid (each in (0, R]).
std::vector<ShellScanPoint> shell_thickness_scan(const PolarizabilityModel& particle, const Material& material,
                                                 double R_m, double a_m, double temperature_K,
                                                 std::span<const double> thickness_grid_m,
                                                 const LifshitzOptions& options = {});

}  // namespace vdw
