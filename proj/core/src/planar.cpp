#include "vdw/planar.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "vdw/quadrature.hpp"

namespace vdw {

namespace detail {

void check_separation(double a_m, double temperature_K) {
  if (!(a_m > 0.0)) throw std::domain_error("separation must be positive");
  if (!(temperature_K > 0.0)) throw std::domain_error("temperature must be positive");
}

namespace {

// Beyond this zeta the factor e^-zeta underflows.
constexpr double kZetaUnderflow = 700.0;

QuadratureOptions quad_options(const LifshitzOptions& o) {
  QuadratureOptions q;
  q.rel_tol = o.quad_rel_tol;
  return q;
}

}  // namespace

SumOutcome atom_wall_sum(const PolarizabilityModel& particle, const Material& material,
                         std::optional<double> plate_m, double a_m, double temperature_K, double b,
                         const LifshitzOptions& options) {
  check_separation(a_m, temperature_K);
  const MatsubaraGrid grid(temperature_K, options.cutoff);
  const auto spectrum = material.spectrum(grid);
  const QuadratureOptions qopt = quad_options(options);
  const double span = options.y_span;

  auto term = [&](std::size_t l) -> TermValue {
    if (l == 0) {
      const double alpha0 = particle.alpha_m3(0.0);
      if (alpha0 == 0.0) return {0.0, 0.0};
      if (!plate_m) return {alpha0 * refl_zero_frequency(material).par * (2.0 - b), 0.0};
      const double d = *plate_m;
      const auto f = [&](double y) {
        return std::exp(-y) * 2.0 * refl_plate_zero_frequency(material, d, a_m, y).par * y * (y - b);
      };
      const QuadratureResult q = integrate(f, 0.0, span, qopt);
      return {0.5 * alpha0 * q.value, 0.5 * alpha0 * q.error};
    }
    const double xi = grid.xi(l);
    const double zeta = dimensionless_zeta(a_m, xi);
    const double alpha = particle.alpha_m3(xi);
    if (alpha == 0.0 || zeta > kZetaUnderflow) return {0.0, 0.0};
    const EpsPair eps = spectrum->at(l);
    const double z2 = zeta * zeta;
    const auto f = [&](double t) {
      const double y = zeta + t;
      const ReflectionPair r = plate_m ? refl_plate(eps, *plate_m, a_m, zeta, y) : refl_semispace(eps, zeta, y);
      return std::exp(-t) * (2.0 * r.par * y * (y - b) + z2 * (1.0 - b / y) * (r.perp - r.par));
    };
    const QuadratureResult q = integrate(f, 0.0, span, qopt);
    const double w = alpha * std::exp(-zeta);
    return {w * q.value, w * q.error};
  };
  return matsubara_sum(options.cutoff, term);
}

}  // namespace detail

LifshitzResult c3_planar(const PolarizabilityModel& particle, const WallGeometry& wall, double a_m,
                         double temperature_K, const LifshitzOptions& options) {
  if (!wall.is_planar()) throw std::invalid_argument("c3_planar: wall must be a semispace or plate");
  wall.validate();
  std::optional<double> plate;
  if (const auto* p = std::get_if<Plate>(&wall.shape)) plate = p->thickness_m;

  detail::SumOutcome s = detail::atom_wall_sum(particle, wall.material, plate, a_m, temperature_K, 0.0, options);
  LifshitzResult r;
  r.separation_m = a_m;
  r.temperature_K = temperature_K;
  r.c3_si = constants::k_B * temperature_K / 8.0 * s.sum;
  r.c3_au = units::c3_si_to_au(r.c3_si);
  r.free_energy_J = -r.c3_si / (a_m * a_m * a_m);
  r.diagnostics = std::move(s.diagnostics);
  if (a_m < kContinuumLimit_m) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "a = %g nm is below the 3 nm continuum limit", units::m_to_nm(a_m));
    r.diagnostics.warnings.emplace_back(buf);
  }
  return r;
}

LifshitzResult free_energy_planar(const PolarizabilityModel& particle, const WallGeometry& wall, double a_m,
                                  double temperature_K, const LifshitzOptions& options) {
  return c3_planar(particle, wall, a_m, temperature_K, options);
}

namespace {

enum class PairQuantity { energy, force };

PlanarPairResult two_body(PairQuantity what, const Material& left, const Material& right,
                          std::optional<double> d_left_m, double a_m, double temperature_K,
                          const LifshitzOptions& options) {
  detail::check_separation(a_m, temperature_K);
  if (d_left_m && !(*d_left_m > 0.0)) throw std::domain_error("plate thickness must be positive");
  const MatsubaraGrid grid(temperature_K, options.cutoff);
  const auto spec_l = left.spectrum(grid);
  const auto spec_r = right.spectrum(grid);
  QuadratureOptions qopt;
  qopt.rel_tol = options.quad_rel_tol;

  // Sum over both polarizations of the log (energy) or Bose-like (force) kernel.
  const auto kernel = [what](double y, double xp, double xs) {
    if (what == PairQuantity::energy) {
      const double e = std::exp(-y);
      return y * (std::log1p(-xp * e) + std::log1p(-xs * e));
    }
    const double em1 = std::expm1(y);
    return y * y * (xp / (em1 + (1.0 - xp)) + xs / (em1 + (1.0 - xs)));
  };

  auto term = [&](std::size_t l) -> detail::TermValue {
    if (left.is_vacuum() || right.is_vacuum()) return {0.0, 0.0};
    QuadratureResult q;
    if (l == 0) {
      const ReflectionPair rr = refl_zero_frequency(right);
      const ReflectionPair rl0 = refl_zero_frequency(left);
      const auto f = [&](double y) {
        const ReflectionPair rl = d_left_m ? refl_plate_zero_frequency(left, *d_left_m, a_m, y) : rl0;
        return kernel(y, rl.par * rr.par, rl.perp * rr.perp);
      };
      q = integrate(f, 0.0, options.y_span, qopt);
      return {0.5 * q.value, 0.5 * q.error};
    }
    const double zeta = dimensionless_zeta(a_m, grid.xi(l));
    if (zeta > 700.0) return {0.0, 0.0};
    const EpsPair el = spec_l->at(l);
    const EpsPair er = spec_r->at(l);
    const auto f = [&](double t) {
      const double y = zeta + t;
      const ReflectionPair rl = d_left_m ? refl_plate(el, *d_left_m, a_m, zeta, y) : refl_semispace(el, zeta, y);
      const ReflectionPair rr = refl_semispace(er, zeta, y);
      return kernel(y, rl.par * rr.par, rl.perp * rr.perp);
    };
    q = integrate(f, 0.0, options.y_span, qopt);
    return {q.value, q.error};
  };

  detail::SumOutcome s = detail::matsubara_sum(options.cutoff, term);
  const double kT = constants::k_B * temperature_K;
  const double pi = constants::pi;
  PlanarPairResult out;
  out.value = what == PairQuantity::energy ? kT / (8.0 * pi * a_m * a_m) * s.sum
                                           : -kT / (8.0 * pi * a_m * a_m * a_m) * s.sum;
  out.diagnostics = std::move(s.diagnostics);
  return out;
}

}  // namespace

PlanarPairResult two_body_free_energy_per_area(const Material& left, const Material& right,
                                               std::optional<double> d_left_m, double a_m,
                                               double temperature_K, const LifshitzOptions& options) {
  return two_body(PairQuantity::energy, left, right, d_left_m, a_m, temperature_K, options);
}

PlanarPairResult two_body_force_per_area(const Material& left, const Material& right,
                                         std::optional<double> d_left_m, double a_m, double temperature_K,
                                         const LifshitzOptions& options) {
  return two_body(PairQuantity::force, left, right, d_left_m, a_m, temperature_K, options);
}

}  // namespace vdw
