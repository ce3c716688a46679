#include "vdw/permittivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "vdw/quadrature.hpp"

namespace vdw {

namespace {

constexpr double two_over_pi = 2.0 / constants::pi;

// atan(u) / u, accurate near u = 0.
double atan_ratio(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 3.0 + u2 * u2 / 5.0;
  }
  return std::atan(u) / u;
}

// 1 - atan(x)/x, accurate near x = 0.
double one_minus_atan_ratio(double x) {
  if (x < 1e-2) {
    const double x2 = x * x;
    return x2 * (1.0 / 3.0 - x2 * (1.0 / 5.0 - x2 * (1.0 / 7.0 - x2 * (1.0 / 9.0 - x2 / 11.0))));
  }
  return 1.0 - std::atan(x) / x;
}

double low_segment_closed(const AxisExtrapolation& e, double lo, double xi) {
  if (const auto* d = std::get_if<DrudeTail>(&e.low)) {
    const double wp2 = d->plasma_eV * d->plasma_eV;
    const double g = d->damping_eV;
    // omega_p^2 [xi atan(lo/g) - g atan(lo/xi)] / (xi (xi^2 - g^2)), with the
    // removable singularity at xi = g folded into atan_ratio.
    const double denom = g * xi + lo * lo;
    const double u = lo * (xi - g) / denom;
    const double bracket = xi * atan_ratio(u) * lo / denom + std::atan(lo / xi);
    return two_over_pi * wp2 / (xi * (xi + g)) * bracket;
  }
  const double c = std::get<ConstantTail>(e.low).im_eps;
  if (c == 0.0) return 0.0;
  const double r = lo / xi;
  return c / constants::pi * std::log1p(r * r);
}

double high_segment_closed(const AxisExtrapolation& e, double hi, double xi) {
  const double a = e.high_amplitude_eV3;
  if (a == 0.0) return 0.0;
  return two_over_pi * a / (xi * xi * hi) * one_minus_atan_ratio(xi / hi);
}

QuadratureOptions kk_options(double rel_tol) {
  QuadratureOptions o;
  o.rel_tol = rel_tol;
  o.abs_tol = 1e-300;
  o.max_intervals = 20000;
  return o;
}

double low_segment_numeric(const AxisExtrapolation& e, double lo, double xi, double rel_tol) {
  if (const auto* d = std::get_if<DrudeTail>(&e.low)) {
    const double wp2g = d->plasma_eV * d->plasma_eV * d->damping_eV;
    const double g2 = d->damping_eV * d->damping_eV;
    const double xi2 = xi * xi;
    auto f = [=](double w) { return wp2g / ((w * w + g2) * (w * w + xi2)); };
    return two_over_pi * integrate(f, 0.0, lo, kk_options(rel_tol)).value;
  }
  const double c = std::get<ConstantTail>(e.low).im_eps;
  if (c == 0.0) return 0.0;
  const double xi2 = xi * xi;
  auto f = [=](double w) { return c * w / (w * w + xi2); };
  return two_over_pi * integrate(f, 0.0, lo, kk_options(rel_tol)).value;
}

double high_segment_numeric(const AxisExtrapolation& e, double hi, double xi, double rel_tol) {
  const double a = e.high_amplitude_eV3;
  if (a == 0.0) return 0.0;
  // omega = hi / u maps [hi, inf) onto (0, 1].
  const double hi2 = hi * hi;
  const double xi2 = xi * xi;
  auto f = [=](double u) { return a * u * u / (hi * (hi2 + xi2 * u * u)); };
  return two_over_pi * integrate(f, 0.0, 1.0, kk_options(rel_tol)).value;
}

// Middle segment: integral of omega Im eps(omega) / (omega^2 + xi^2) over the table.
double table_segment(const OpticalDataTable& table, double xi, double rel_tol) {
  const auto& rows = table.rows();
  std::vector<double> nodes(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) nodes[i] = rows[i].omega_eV;
  const double xi2 = xi * xi;
  auto f = [&](double w) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), w);
    std::size_t i = static_cast<std::size_t>(it - nodes.begin());
    i = i == 0 ? 0 : std::min(i - 1, nodes.size() - 2);
    return w * interpolate_im_eps_segment(table, i, w) / (w * w + xi2);
  };
  return two_over_pi * integrate(f, nodes, kk_options(rel_tol)).value;
}

}  // namespace

KKSegments kk_segments(const TabulatedKK& model, double xi_rad_s, KKMethod method) {
  if (!(xi_rad_s > 0.0)) {
    throw std::domain_error("eps(i xi): xi must be positive; use the static limit at xi = 0");
  }
  if (!model.table) throw std::invalid_argument("eps(i xi): tabulated model without a table");
  const double xi = units::rad_per_s_to_ev(xi_rad_s);
  const double lo = model.table->window_lo();
  const double hi = model.table->window_hi();
  KKSegments s{};
  s.table = table_segment(*model.table, xi, model.rel_tol);
  if (method == KKMethod::closed_segments) {
    s.low = low_segment_closed(model.extrapolation, lo, xi);
    s.high = high_segment_closed(model.extrapolation, hi, xi);
  } else {
    s.low = low_segment_numeric(model.extrapolation, lo, xi, model.rel_tol);
    s.high = high_segment_numeric(model.extrapolation, hi, xi, model.rel_tol);
  }
  return s;
}

double eps_ixi_numeric(const TabulatedKK& model, double xi_rad_s) {
  return kk_segments(model, xi_rad_s, KKMethod::numeric).total();
}

double eps_ixi_closed_segments(const TabulatedKK& model, double xi_rad_s) {
  return kk_segments(model, xi_rad_s, KKMethod::closed_segments).total();
}

PermittivityModel::PermittivityModel(Variant model, std::string label)
    : model_(std::move(model)), label_(std::move(label)) {
  if (const auto* d = std::get_if<DrudeModel>(&model_)) {
    if (!(d->plasma_eV > 0.0) || !(d->damping_eV >= 0.0)) {
      throw std::invalid_argument("Drude model needs omega_p > 0 and gamma >= 0");
    }
  } else if (const auto* l = std::get_if<LorentzModel>(&model_)) {
    if (!(l->eps_inf >= 1.0)) throw std::invalid_argument("oscillator model needs eps_inf >= 1");
    for (const auto& t : l->terms) {
      if (!(t.strength >= 0.0) || !(t.resonance_eV > 0.0) || !(t.damping_eV >= 0.0)) {
        throw std::invalid_argument("oscillator model needs S >= 0, w0 > 0, gamma >= 0");
      }
    }
  }
}

PermittivityModel PermittivityModel::drude(double plasma_eV, double damping_eV) {
  return {DrudeModel{plasma_eV, damping_eV}, "drude"};
}

PermittivityModel PermittivityModel::constant(double eps) {
  return {LorentzModel{eps, {}}, "constant"};
}

double PermittivityModel::at(double xi_rad_s) const {
  if (!(xi_rad_s > 0.0)) {
    throw std::domain_error("eps(i xi): xi must be positive; use the static limit at xi = 0");
  }
  struct Visitor {
    double xi_rad_s;
    double operator()(const Vacuum&) const { return 1.0; }
    double operator()(const IdealMetal&) const { return std::numeric_limits<double>::infinity(); }
    double operator()(const DrudeModel& d) const {
      const double xi = units::rad_per_s_to_ev(xi_rad_s);
      return 1.0 + d.plasma_eV * d.plasma_eV / (xi * (xi + d.damping_eV));
    }
    double operator()(const LorentzModel& m) const {
      const double xi = units::rad_per_s_to_ev(xi_rad_s);
      double eps = m.eps_inf;
      for (const auto& t : m.terms) {
        const double w2 = t.resonance_eV * t.resonance_eV;
        eps += t.strength * w2 / (w2 + xi * xi + t.damping_eV * xi);
      }
      return eps;
    }
    double operator()(const TabulatedKK& t) const {
      return t.method == KKMethod::numeric ? eps_ixi_numeric(t, xi_rad_s)
                                           : eps_ixi_closed_segments(t, xi_rad_s);
    }
  };
  return std::visit(Visitor{xi_rad_s}, model_);
}

StaticBehavior PermittivityModel::static_behavior() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr auto diverges = StaticBehavior::Kind::diverges_as_conductor;
  constexpr auto finite = StaticBehavior::Kind::finite;
  struct Visitor {
    StaticBehavior operator()(const Vacuum&) const { return {finite, 1.0}; }
    StaticBehavior operator()(const IdealMetal&) const { return {diverges, inf}; }
    StaticBehavior operator()(const DrudeModel&) const { return {diverges, inf}; }
    StaticBehavior operator()(const LorentzModel& m) const {
      double eps = m.eps_inf;
      for (const auto& t : m.terms) eps += t.strength;
      return {finite, eps};
    }
    StaticBehavior operator()(const TabulatedKK& t) const {
      // Drude tails diverge like 1/xi, a constant positive tail like log(1/xi).
      if (std::holds_alternative<DrudeTail>(t.extrapolation.low)) return {diverges, inf};
      if (std::get<ConstantTail>(t.extrapolation.low).im_eps > 0.0) return {diverges, inf};
      const auto& rows = t.table->rows();
      std::vector<double> nodes(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) nodes[i] = rows[i].omega_eV;
      const auto& table = *t.table;
      auto f = [&](double w) {
        auto it = std::upper_bound(nodes.begin(), nodes.end(), w);
        std::size_t i = static_cast<std::size_t>(it - nodes.begin());
        i = i == 0 ? 0 : std::min(i - 1, nodes.size() - 2);
        return interpolate_im_eps_segment(table, i, w) / w;
      };
      const double hi = table.window_hi();
      const double middle = integrate(f, nodes, kk_options(t.rel_tol)).value;
      const double high = t.extrapolation.high_amplitude_eV3 / (3.0 * hi * hi * hi);
      return {finite, 1.0 + two_over_pi * (middle + high)};
    }
  };
  return std::visit(Visitor{}, model_);
}

StaticBehavior eps_static_behavior(const PermittivityModel& model) { return model.static_behavior(); }

MatsubaraSpectrum::MatsubaraSpectrum(PermittivityModel x, PermittivityModel z, MatsubaraGrid grid,
                                     bool isotropic)
    : x_(std::move(x)), z_(std::move(z)), grid_(grid), isotropic_(isotropic) {}

EpsPair MatsubaraSpectrum::at(std::size_t l) const {
  if (l == 0) throw std::domain_error("MatsubaraSpectrum::at: l = 0 is the static limit");
  std::lock_guard lock(mutex_);
  const bool ideal = x_.is_ideal_metal() || z_.is_ideal_metal();
  while (values_.size() < l) {
    const double xi = grid_.xi(values_.size() + 1);
    const double ex = x_.at(xi);
    values_.push_back(EpsPair{ex, isotropic_ ? ex : z_.at(xi), ideal});
  }
  return values_[l - 1];
}

std::size_t MatsubaraSpectrum::cached() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

namespace detail {
struct SpectrumStore {
  std::mutex mutex;
  std::map<double, std::shared_ptr<const MatsubaraSpectrum>> by_temperature;
};
}  // namespace detail

Material::Material(std::string name, PermittivityModel x, PermittivityModel z)
    : name_(std::move(name)), x_(std::move(x)), z_(std::move(z)),
      store_(std::make_shared<detail::SpectrumStore>()) {}

Material Material::isotropic(std::string name, PermittivityModel eps) {
  Material m(std::move(name), eps, eps);
  m.isotropic_ = true;
  return m;
}

EpsPair Material::at(double xi_rad_s) const {
  const double ex = x_.at(xi_rad_s);
  return EpsPair{ex, isotropic_ ? ex : z_.at(xi_rad_s), is_ideal_metal()};
}

std::shared_ptr<const MatsubaraSpectrum> Material::spectrum(const MatsubaraGrid& grid) const {
  std::lock_guard lock(store_->mutex);
  auto& slot = store_->by_temperature[grid.temperature()];
  if (!slot) slot = std::make_shared<const MatsubaraSpectrum>(x_, z_, grid, isotropic_);
  return slot;
}

Material tabulated_material(const OpticalDataset& dataset, KKMethod method) {
  PermittivityModel x(TabulatedKK{dataset.x, dataset.extrapolation.x, method}, dataset.name + ":x");
  PermittivityModel z(TabulatedKK{dataset.z, dataset.extrapolation.z, method}, dataset.name + ":z");
  return Material(dataset.name, std::move(x), std::move(z));
}

std::vector<std::string> bundled_material_names() {
  return {"vacuum", "ideal-metal", "drude-test", "dielectric-test", "uniaxial-test"};
}

Material bundled_material(const std::string& name) {
  if (name == "vacuum") return Material::isotropic(name, PermittivityModel::vacuum());
  if (name == "ideal-metal") return Material::isotropic(name, PermittivityModel::ideal_metal());
  if (name == "drude-test") return Material::isotropic(name, PermittivityModel::drude(1.226, 0.04));
  if (name == "dielectric-test") {
    return Material::isotropic(name, PermittivityModel(LorentzModel{1.0, {{1.0, 10.0, 0.0}}}, "oscillator"));
  }
  if (name == "uniaxial-test") {
    return Material(name, PermittivityModel::drude(1.226, 0.04),
                    PermittivityModel(LorentzModel{1.0, {{2.0, 5.0, 0.0}}}, "oscillator"));
  }
  throw std::invalid_argument("unknown bundled material '" + name + "'");
}

}  // namespace vdw
