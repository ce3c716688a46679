#pragma once

// Particle near a semispace or plate, and the two-body planar free energy and
// force per unit area.

#include <optional>

#include "vdw/lifshitz.hpp"
#include "vdw/polarizability.hpp"
#include "vdw/reflection.hpp"

namespace vdw {

/// Separations below this are outside the continuum description of the wall.
inline constexpr double kContinuumLimit_m = 3e-9;

/// C3(a, T) for a semispace or plate wall. Throws std::invalid_argument for a
/// cylindrical wall, std::domain_error for a <= 0 or T <= 0 and NumericError
/// when a frequency integral does not converge.
LifshitzResult c3_planar(const PolarizabilityModel& particle, const WallGeometry& wall, double a_m,
                         double temperature_K, const LifshitzOptions& options = {});

/// Same computation; provided for callers that think in energies.
LifshitzResult free_energy_planar(const PolarizabilityModel& particle, const WallGeometry& wall, double a_m,
                                  double temperature_K, const LifshitzOptions& options = {});

struct PlanarPairResult {
  double value = 0.0;
  SumDiagnostics diagnostics;
};

/// Free energy per unit area [J/m^2] between the left body (semispace, or a
/// plate of thickness d_left) and a right semispace, gap a.
PlanarPairResult two_body_free_energy_per_area(const Material& left, const Material& right,
                                               std::optional<double> d_left_m, double a_m,
                                               double temperature_K, const LifshitzOptions& options = {});

/// Force per unit area [N/m^2], -dF/da of the above; negative is attractive.
PlanarPairResult two_body_force_per_area(const Material& left, const Material& right,
                                         std::optional<double> d_left_m, double a_m, double temperature_K,
                                         const LifshitzOptions& options = {});

namespace detail {

/// Sum over l of alpha_l [m^3] times the integral over y >= zeta_l of
///   e^-y [2 r_par y (y - b) + zeta_l^2 (1 - b/y)(r_perp - r_par)],
/// the l = 0 term weighted by 1/2. b = 0 gives the planar bracket; the
/// cylinder uses b = a / (2 (R + a)). Plate coefficients when `plate_m` is set.
SumOutcome atom_wall_sum(const PolarizabilityModel& particle, const Material& material,
                         std::optional<double> plate_m, double a_m, double temperature_K, double b,
                         const LifshitzOptions& options);

void check_separation(double a_m, double temperature_K);

}  // namespace detail

}  // namespace vdw
