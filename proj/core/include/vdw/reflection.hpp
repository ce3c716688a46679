#pragma once

// Reflection coefficients on the imaginary frequency axis in the dimensionless
// variables zeta = 2 a xi / c and y = 2 a q, y >= zeta. The optic axis of a
// uniaxial wall is normal to its surface.

#include <string>
#include <variant>

#include "vdw/permittivity.hpp"

namespace vdw {

struct ReflectionPair {
  /// Transverse magnetic.
  double par;
  /// Transverse electric.
  double perp;
};

/// Semispace. Throws std::domain_error for y < zeta or eps < 1.
ReflectionPair refl_semispace(const EpsPair& eps, double zeta, double y);

/// Plate of thickness d at particle distance a; only d/a matters.
ReflectionPair refl_plate(const EpsPair& eps, double d_m, double a_m, double zeta, double y);

/// Static (xi = 0) coefficients of a semispace. r_perp is 0 except for the
/// ideal metal, where both are 1.
ReflectionPair refl_zero_frequency(const Material& material);

/// Static coefficients of a plate. Depends on y unless a conductor.
ReflectionPair refl_plate_zero_frequency(const Material& material, double d_m, double a_m, double y);

/// coth(u) for u > 0 without overflow.
double stable_coth(double u);

struct Semispace {};
struct Plate {
  double thickness_m;
};
struct SolidCylinder {
  double radius_m;
};
/// Outer radius R, thickness d, inner radius R - d.
struct CylindricalShell {
  double radius_m;
  double thickness_m;
};

using Shape = std::variant<Semispace, Plate, SolidCylinder, CylindricalShell>;

struct WallGeometry {
  Shape shape;
  Material material;

  static WallGeometry semispace(Material m) { return {Semispace{}, std::move(m)}; }
  static WallGeometry plate(Material m, double d_m) { return {Plate{d_m}, std::move(m)}; }
  static WallGeometry solid_cylinder(Material m, double R_m) { return {SolidCylinder{R_m}, std::move(m)}; }
  static WallGeometry shell(Material m, double R_m, double d_m) {
    return {CylindricalShell{R_m, d_m}, std::move(m)};
  }

  bool is_planar() const;
  bool is_cylindrical() const;
  /// Throws std::invalid_argument on d <= 0, R <= 0 or d > R.
  void validate() const;
  std::string describe() const;
};

}  // namespace vdw
