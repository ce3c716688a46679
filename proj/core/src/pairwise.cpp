#include "vdw/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "vdw/quadrature.hpp"

namespace vdw {

namespace {

constexpr double kGeometryTol = 1e-9;

QuadratureOptions geometry_options() {
  QuadratureOptions q;
  q.rel_tol = kGeometryTol;
  return q;
}

// Outside a solid circle of radius Rc with the particle at distance D from the
// centre. Roots of rho^2 - 2 D rho cos(t) + D^2 - Rc^2 = 0; the nearer one is
// written without the D - Rc cancellation.
double exterior_G(double Rc, double D) {
  const double theta_m = std::asin(Rc / D);
  const double gap2 = (D - Rc) * (D + Rc);
  const auto g = [&](double theta) {
    const double s = std::sin(theta);
    const double root = std::sqrt(std::max(0.0, (Rc - D * s) * (Rc + D * s)));
    const double far = D * std::cos(theta) + root;
    const double near = gap2 / far;
    return 1.0 / (near * near * near) - 1.0 / (far * far * far);
  };
  // theta = theta_m - u^2 removes the square-root endpoint at theta_m.
  const auto h = [&](double u) { return 2.0 * u * g(theta_m - u * u); };
  return integrate(h, 0.0, std::sqrt(theta_m), geometry_options()).value;
}

// Distance from a point at signed offset s from the centre to a circle of
// radius Rc > |s|, along direction theta measured from the far side.
double chord(double Rc, double s, double theta) {
  const double c = s * std::cos(theta);
  const double sn = s * std::sin(theta);
  const double root = std::sqrt((Rc - sn) * (Rc + sn));
  if (c > 0.0) return (Rc - s) * (Rc + s) / (c + root);
  return root - c;
}

double c3_semispace_si(const PolarizabilityModel& particle, const Material& material, double a_m,
                       double temperature_K, const LifshitzOptions& options, SumDiagnostics* diag) {
  LifshitzResult r = c3_planar(particle, WallGeometry::semispace(material), a_m, temperature_K, options);
  if (diag) *diag = std::move(r.diagnostics);
  return r.c3_si;
}

PairwiseResult assemble(double geometry, double c3_si, double c3_distance, double a_m, SumDiagnostics diag) {
  PairwiseResult out;
  out.geometry = geometry;
  out.c3_semispace_au = units::c3_si_to_au(c3_si);
  out.c3_distance_m = c3_distance;
  out.free_energy_J = -1.5 * c3_si * geometry;
  out.c3_equivalent_au = units::c3_si_to_au(-out.free_energy_J * a_m * a_m * a_m);
  out.diagnostics = std::move(diag);
  return out;
}

void check_interior(double R0_m, double d_m, double a_m) {
  if (!(R0_m > 0.0)) throw std::domain_error("interior: inner radius must be positive");
  if (!(d_m >= 0.0)) throw std::domain_error("interior: thickness must be non-negative");
  if (!(a_m > 0.0) || !(a_m < 2.0 * R0_m)) throw std::domain_error("interior: need 0 < a < 2 R0");
}

}  // namespace

double exterior_geometry_integral(double R_m, double a_m) {
  if (!(R_m > 0.0) || !(a_m > 0.0)) throw std::domain_error("exterior: need R > 0 and a > 0");
  return exterior_G(R_m, R_m + a_m);
}

double interior_geometry_integral(double R0_m, double d_m, double a_m) {
  check_interior(R0_m, d_m, a_m);
  if (d_m == 0.0) return 0.0;
  const double s = R0_m - a_m;
  const double R = R0_m + d_m;
  const auto g = [&](double theta) {
    const double r1 = chord(R0_m, s, theta);
    const double r2 = chord(R, s, theta);
    return 1.0 / (r1 * r1 * r1) - 1.0 / (r2 * r2 * r2);
  };
  return integrate(g, 0.0, constants::pi, geometry_options()).value;
}

double semispace_geometry_integral(double a_m) { return 2.0 / (3.0 * a_m * a_m * a_m); }

PairwiseResult pairwise_exterior(const PolarizabilityModel& particle, const Material& material, double R_m,
                                 double a_m, double temperature_K, const LifshitzOptions& options) {
  const double G = exterior_geometry_integral(R_m, a_m);
  SumDiagnostics diag;
  const double c3 = c3_semispace_si(particle, material, a_m, temperature_K, options, &diag);
  return assemble(G, c3, a_m, a_m, std::move(diag));
}

PairwiseResult pairwise_exterior_shell(const PolarizabilityModel& particle, const Material& material, double R_m,
                                       double d_m, double a_m, double temperature_K,
                                       const LifshitzOptions& options) {
  if (!(d_m > 0.0) || d_m > R_m) throw std::domain_error("exterior shell: need 0 < d <= R");
  const double G = exterior_geometry_integral(R_m, a_m) -
                   (d_m < R_m ? exterior_G(R_m - d_m, R_m + a_m) : 0.0);
  SumDiagnostics diag;
  const double c3 = c3_semispace_si(particle, material, a_m, temperature_K, options, &diag);
  return assemble(G, c3, a_m, a_m, std::move(diag));
}

PairwiseResult pairwise_interior(const PolarizabilityModel& particle, const Material& material, double R0_m,
                                 double d_m, double a_m, double temperature_K, const LifshitzOptions& options) {
  const double G = interior_geometry_integral(R0_m, d_m, a_m);
  const double nearest = std::min(a_m, 2.0 * R0_m - a_m);
  SumDiagnostics diag;
  const double c3 = c3_semispace_si(particle, material, nearest, temperature_K, options, &diag);
  return assemble(G, c3, nearest, a_m, std::move(diag));
}

InsideOutside inside_outside_difference(const PolarizabilityModel& particle, const Material& material,
                                        double R0_m, double d_m, double a_m, double temperature_K,
                                        ExteriorFormula exterior, const LifshitzOptions& options) {
  if (!(d_m > 0.0)) throw std::domain_error("inside/outside: thickness must be positive");
  const double R = R0_m + d_m;
  InsideOutside out;
  if (exterior == ExteriorFormula::lifshitz) {
    out.exterior_J =
        c3_cylinder(particle, WallGeometry::shell(material, R, d_m), a_m, temperature_K, options).lifshitz.free_energy_J;
  } else {
    out.exterior_J = pairwise_exterior_shell(particle, material, R, d_m, a_m, temperature_K, options).free_energy_J;
  }
  out.interior_J = pairwise_interior(particle, material, R0_m, d_m, a_m, temperature_K, options).free_energy_J;
  out.difference_J = out.exterior_J - out.interior_J;
  return out;
}

std::vector<TransectPoint> interior_transect(const PolarizabilityModel& particle, const Material& material,
                                             double R0_m, double d_m, std::span<const double> positions_m,
                                             double temperature_K, const LifshitzOptions& options) {
  std::map<double, double> c3_cache;
  std::vector<TransectPoint> out;
  out.reserve(positions_m.size());
  for (const double a : positions_m) {
    const double G = interior_geometry_integral(R0_m, d_m, a);
    const double nearest = std::min(a, 2.0 * R0_m - a);
    auto it = c3_cache.find(nearest);
    if (it == c3_cache.end()) {
      it = c3_cache.emplace(nearest, c3_semispace_si(particle, material, nearest, temperature_K, options, nullptr))
               .first;
    }
    out.push_back({a, -1.5 * it->second * G});
  }
  return out;
}

}  // namespace vdw
