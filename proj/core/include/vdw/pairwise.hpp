#pragma once

// Pairwise summation of an r^-6 interatomic kernel over cylindrical bodies,
// normalized so that a semispace gives exactly -C3^s / a^3.
//
// With that normalization F = -(3/2) C3^s(a) G, where G is the in-plane
// integral of rho1^-3 - rho2^-3 over the directions that cross the body.

#include <span>
#include <vector>

#include "vdw/cylinder.hpp"

namespace vdw {

/// G [m^-3] for a particle at distance a outside a solid cylinder of radius R.
double exterior_geometry_integral(double R_m, double a_m);

/// G [m^-3] for a particle inside a shell with inner radius R0 and thickness d,
/// at distance a (0 < a < 2 R0) from the inner surface measured along a diameter.
double interior_geometry_integral(double R0_m, double d_m, double a_m);

/// Semispace value of G, 2 / (3 a^3).
double semispace_geometry_integral(double a_m);

struct PairwiseResult {
  double free_energy_J = 0.0;
  /// G in m^-3.
  double geometry = 0.0;
  /// C3^s used for the normalization and the distance it was evaluated at.
  double c3_semispace_au = 0.0;
  double c3_distance_m = 0.0;
  /// -F a^3 in Hartree * bohr^3, for comparison with C3^c.
  double c3_equivalent_au = 0.0;
  SumDiagnostics diagnostics;
};

/// Outside a solid cylinder.
PairwiseResult pairwise_exterior(const PolarizabilityModel& particle, const Material& material, double R_m,
                                 double a_m, double temperature_K, const LifshitzOptions& options = {});

/// Outside a shell of outer radius R and thickness d: solid(R) minus solid(R - d).
PairwiseResult pairwise_exterior_shell(const PolarizabilityModel& particle, const Material& material, double R_m,
                                       double d_m, double a_m, double temperature_K,
                                       const LifshitzOptions& options = {});

/// Inside the cavity of a shell (inner radius R0, thickness d). C3^s is taken
/// at the distance to the nearest wall point, min(a, 2 R0 - a).
PairwiseResult pairwise_interior(const PolarizabilityModel& particle, const Material& material, double R0_m,
                                 double d_m, double a_m, double temperature_K,
                                 const LifshitzOptions& options = {});

enum class ExteriorFormula { lifshitz, pairwise };

struct InsideOutside {
  double exterior_J = 0.0;
  double interior_J = 0.0;
  /// exterior_J - interior_J; positive when the cavity binds more strongly.
  double difference_J = 0.0;
};

/// Particle at distance a outside the shell (outer radius R0 + d) versus at
/// distance a inside it.
InsideOutside inside_outside_difference(const PolarizabilityModel& particle, const Material& material,
                                        double R0_m, double d_m, double a_m, double temperature_K,
                                        ExteriorFormula exterior = ExteriorFormula::lifshitz,
                                        const LifshitzOptions& options = {});

struct TransectPoint {
  /// Distance from the inner surface along the diameter.
  double position_m;
  double free_energy_J;
};

/// pairwise_interior over the positions; C3^s is computed once per distinct
/// nearest-wall distance.
std::vector<TransectPoint> interior_transect(const PolarizabilityModel& particle, const Material& material,
                                             double R0_m, double d_m, std::span<const double> positions_m,
                                             double temperature_K, const LifshitzOptions& options = {});

}  // namespace vdw
