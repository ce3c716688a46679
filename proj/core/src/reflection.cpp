#include "vdw/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace vdw {

namespace {

// Rounding in a Kramers-Kronig sum may land a hair below 1 for a nearly empty spectrum.
constexpr double kEpsSlack = 1e-12;

void check_eps(double eps) {
  if (!(eps >= 1.0 - kEpsSlack)) {
    throw std::domain_error("reflection: permittivity below 1 is unsupported (got " + std::to_string(eps) + ")");
  }
}

void check_arguments(double zeta, double y) {
  if (!(zeta >= 0.0) || !(y >= zeta)) {
    throw std::domain_error("reflection: need y >= zeta >= 0");
  }
}

// f * coth(f h), finite as f -> 0.
double f_coth(double f, double h) {
  const double u = f * h;
  if (u < 1e-4) return 1.0 / h + f * u / 3.0;
  return f * stable_coth(u);
}

struct Kernel {
  double ex;      // eps_x - 1
  double ez;      // eps_z - 1
  double root;    // sqrt(eps_x eps_z)
  double fx;
  double fz;
  double num_par;   // eps_x eps_z y^2 - f_z^2
  double num_perp;  // f_x^2 - y^2
};

Kernel kernel(const EpsPair& eps, double zeta, double y) {
  check_eps(eps.x);
  check_eps(eps.z);
  Kernel k{};
  k.ex = std::max(eps.x - 1.0, 0.0);
  k.ez = std::max(eps.z - 1.0, 0.0);
  k.root = std::sqrt((1.0 + k.ex) * (1.0 + k.ez));
  const double z2 = zeta * zeta;
  k.fx = std::sqrt(y * y + z2 * k.ex);
  k.fz = std::sqrt(y * y + z2 * k.ez);
  k.num_par = y * y * (k.ex * k.ez + k.ex + k.ez) - z2 * k.ez;
  k.num_perp = z2 * k.ex;
  return k;
}

}  // namespace

double stable_coth(double u) {
  if (!(u > 0.0)) throw std::domain_error("coth: argument must be positive");
  if (u < 1e-4) return 1.0 / u + u / 3.0;
  if (u > 350.0) return 1.0;
  return 1.0 + 2.0 / std::expm1(2.0 * u);
}

ReflectionPair refl_semispace(const EpsPair& eps, double zeta, double y) {
  check_arguments(zeta, y);
  if (eps.ideal_metal) return {1.0, 1.0};
  const Kernel k = kernel(eps, zeta, y);
  if (y == 0.0) return {0.0, 0.0};
  const double dpar = k.root * y + k.fz;
  const double dperp = k.fx + y;
  return {k.num_par / (dpar * dpar), k.num_perp / (dperp * dperp)};
}

ReflectionPair refl_plate(const EpsPair& eps, double d_m, double a_m, double zeta, double y) {
  check_arguments(zeta, y);
  if (!(d_m > 0.0) || !(a_m > 0.0)) throw std::domain_error("refl_plate: need d > 0 and a > 0");
  if (eps.ideal_metal) return {1.0, 1.0};
  const Kernel k = kernel(eps, zeta, y);
  const double h = d_m / (2.0 * a_m);
  const double den_par = k.root * k.root * y * y + k.fz * k.fz + 2.0 * k.root * y * f_coth(k.fz, h);
  const double den_perp = y * y + k.fx * k.fx + 2.0 * y * f_coth(k.fx, h);
  return {den_par > 0.0 ? k.num_par / den_par : 0.0, den_perp > 0.0 ? k.num_perp / den_perp : 0.0};
}

ReflectionPair refl_zero_frequency(const Material& material) {
  if (material.is_ideal_metal()) return {1.0, 1.0};
  const StaticBehavior sx = material.x().static_behavior();
  const StaticBehavior sz = material.z().static_behavior();
  if (sx.diverges() || sz.diverges()) return {1.0, 0.0};
  const double root = std::sqrt(sx.value * sz.value);
  return {(root - 1.0) / (root + 1.0), 0.0};
}

ReflectionPair refl_plate_zero_frequency(const Material& material, double d_m, double a_m, double y) {
  if (!(d_m > 0.0) || !(a_m > 0.0)) throw std::domain_error("refl_plate: need d > 0 and a > 0");
  if (!(y >= 0.0)) throw std::domain_error("reflection: need y >= 0");
  if (material.is_ideal_metal()) return {1.0, 1.0};
  const StaticBehavior sx = material.x().static_behavior();
  const StaticBehavior sz = material.z().static_behavior();
  if (sx.diverges() || sz.diverges()) return {1.0, 0.0};
  // At zeta = 0 both f equal y, so the plate formula reduces to a function of y d / (2a).
  const double e = sx.value * sz.value;
  const double root = std::sqrt(e);
  const double h = d_m / (2.0 * a_m);
  if (y == 0.0) return {0.0, 0.0};
  return {(e - 1.0) / (e + 1.0 + 2.0 * root * stable_coth(y * h)), 0.0};
}

bool WallGeometry::is_planar() const {
  return std::holds_alternative<Semispace>(shape) || std::holds_alternative<Plate>(shape);
}

bool WallGeometry::is_cylindrical() const { return !is_planar(); }

void WallGeometry::validate() const {
  struct V {
    void operator()(const Semispace&) const {}
    void operator()(const Plate& p) const {
      if (!(p.thickness_m > 0.0)) throw std::invalid_argument("plate thickness must be positive");
    }
    void operator()(const SolidCylinder& c) const {
      if (!(c.radius_m > 0.0)) throw std::invalid_argument("cylinder radius must be positive");
    }
    void operator()(const CylindricalShell& s) const {
      if (!(s.radius_m > 0.0)) throw std::invalid_argument("shell radius must be positive");
      if (!(s.thickness_m > 0.0) || s.thickness_m > s.radius_m) {
        throw std::invalid_argument("shell thickness must lie in (0, R]");
      }
    }
  };
  std::visit(V{}, shape);
}

std::string WallGeometry::describe() const {
  char buf[160];
  struct D {
    char* buf;
    void operator()(const Semispace&) const { std::snprintf(buf, 160, "semispace"); }
    void operator()(const Plate& p) const { std::snprintf(buf, 160, "plate(d=%g nm)", p.thickness_m * 1e9); }
    void operator()(const SolidCylinder& c) const {
      std::snprintf(buf, 160, "solid-cylinder(R=%g nm)", c.radius_m * 1e9);
    }
    void operator()(const CylindricalShell& s) const {
      std::snprintf(buf, 160, "shell(R=%g nm, d=%g nm)", s.radius_m * 1e9, s.thickness_m * 1e9);
    }
  };
  std::visit(D{buf}, shape);
  return std::string(buf) + " of " + material.name();
}

}  // namespace vdw
