#pragma once

// Dielectric permittivity on the imaginary frequency axis, eps(i xi).
//
// Tabulated materials go through the Kramers-Kronig integral split into three
// segments: the low-frequency extrapolation on [0, omega_lo], the interpolated
// table on [omega_lo, omega_hi] and the A/omega^3 tail above omega_hi. Two
// pipelines are provided. `eps_ixi_numeric` integrates every segment by
// adaptive quadrature; `eps_ixi_closed_segments` uses the closed forms for the
// two extrapolated segments. They share only the middle segment and serve as a
// cross-check of each other.

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "vdw/optics.hpp"
#include "vdw/quantities.hpp"

namespace vdw {

struct Vacuum {};

/// Perfect conductor: eps is infinite at every frequency.
struct IdealMetal {};

/// eps(i xi) = 1 + omega_p^2 / (xi (xi + gamma)).
struct DrudeModel {
  double plasma_eV;
  double damping_eV;
};

struct LorentzTerm {
  double strength;
  double resonance_eV;
  double damping_eV = 0.0;
};

/// eps(i xi) = eps_inf + sum_j S_j w_j^2 / (w_j^2 + xi^2 + g_j xi).
struct LorentzModel {
  double eps_inf = 1.0;
  std::vector<LorentzTerm> terms;
};

enum class KKMethod { numeric, closed_segments };

/// Tabulated Im eps plus extrapolations, evaluated through Kramers-Kronig.
struct TabulatedKK {
  std::shared_ptr<const OpticalDataTable> table;
  AxisExtrapolation extrapolation;
  KKMethod method = KKMethod::closed_segments;
  double rel_tol = 1e-7;
};

struct StaticBehavior {
  enum class Kind { finite, diverges_as_conductor };
  Kind kind;
  /// eps(0) when finite; +inf otherwise.
  double value;

  bool diverges() const { return kind == Kind::diverges_as_conductor; }
};

class PermittivityModel {
 public:
  using Variant = std::variant<Vacuum, IdealMetal, DrudeModel, LorentzModel, TabulatedKK>;

  PermittivityModel(Variant model, std::string label);

  static PermittivityModel vacuum() { return {Vacuum{}, "vacuum"}; }
  static PermittivityModel ideal_metal() { return {IdealMetal{}, "ideal-metal"}; }
  static PermittivityModel drude(double plasma_eV, double damping_eV);
  static PermittivityModel constant(double eps);

  const Variant& model() const { return model_; }
  const std::string& label() const { return label_; }

  bool is_ideal_metal() const { return std::holds_alternative<IdealMetal>(model_); }
  bool is_vacuum() const { return std::holds_alternative<Vacuum>(model_); }

  /// eps(i xi) for xi > 0 (rad/s); +inf for the ideal metal. Throws
  /// std::domain_error for xi <= 0: use static_behavior() for the limit.
  double at(double xi_rad_s) const;

  StaticBehavior static_behavior() const;

 private:
  Variant model_;
  std::string label_;
};

double eps_ixi_numeric(const TabulatedKK& model, double xi_rad_s);
double eps_ixi_closed_segments(const TabulatedKK& model, double xi_rad_s);
StaticBehavior eps_static_behavior(const PermittivityModel& model);

/// The three Kramers-Kronig pieces (already multiplied by 2/pi) for inspection.
struct KKSegments {
  double low;
  double table;
  double high;
  double total() const { return 1.0 + low + table + high; }
};

KKSegments kk_segments(const TabulatedKK& model, double xi_rad_s, KKMethod method);

/// Both crystal axes at one frequency.
struct EpsPair {
  double x;
  double z;
  bool ideal_metal = false;
};

/// eps(i xi_l) for l = 1, 2, ... computed on demand and kept. Safe for
/// concurrent readers; population is guarded by a mutex.
class MatsubaraSpectrum {
 public:
  /// With `isotropic` set the z axis is not evaluated separately.
  MatsubaraSpectrum(PermittivityModel x, PermittivityModel z, MatsubaraGrid grid, bool isotropic = false);

  const MatsubaraGrid& grid() const { return grid_; }
  /// l >= 1.
  EpsPair at(std::size_t l) const;
  std::size_t cached() const;

 private:
  PermittivityModel x_;
  PermittivityModel z_;
  MatsubaraGrid grid_;
  bool isotropic_;
  mutable std::mutex mutex_;
  mutable std::vector<EpsPair> values_;
};

namespace detail {
struct SpectrumStore;
}

/// A wall material: ordinary (x) and extraordinary (z) permittivities. The
/// optic axis is normal to the surface. Copies share the spectrum memo.
class Material {
 public:
  Material(std::string name, PermittivityModel x, PermittivityModel z);
  static Material isotropic(std::string name, PermittivityModel eps);

  const std::string& name() const { return name_; }
  const PermittivityModel& x() const { return x_; }
  const PermittivityModel& z() const { return z_; }
  bool is_isotropic() const { return isotropic_; }
  bool is_ideal_metal() const { return x_.is_ideal_metal() || z_.is_ideal_metal(); }
  bool is_vacuum() const { return x_.is_vacuum() && z_.is_vacuum(); }

  EpsPair at(double xi_rad_s) const;

  /// Memoized eps(i xi_l) for the grid's temperature.
  std::shared_ptr<const MatsubaraSpectrum> spectrum(const MatsubaraGrid& grid) const;

 private:
  std::string name_;
  PermittivityModel x_;
  PermittivityModel z_;
  bool isotropic_ = false;
  std::shared_ptr<detail::SpectrumStore> store_;
};

/// Tabulated uniaxial material from a loaded dataset.
Material tabulated_material(const OpticalDataset& dataset, KKMethod method = KKMethod::closed_segments);

/// Names accepted by bundled_material().
std::vector<std::string> bundled_material_names();

/// Analytic materials that ship with the library:
///   vacuum, ideal-metal,
///   drude-test       isotropic Drude, omega_p = 1.226 eV, gamma = 0.04 eV
///   dielectric-test  isotropic single oscillator, eps(0) = 2, w0 = 10 eV
///   uniaxial-test    x: drude-test, z: single oscillator eps(0) = 3, w0 = 5 eV
/// Throws std::invalid_argument for unknown names.
Material bundled_material(const std::string& name);

}  // namespace vdw
