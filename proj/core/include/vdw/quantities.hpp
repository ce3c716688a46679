#pragma once

// Physical constants, unit conversions and the Matsubara frequency grid.
//
// Everything inside the engine is SI. The three conversion factors that the
// reference tables were produced with (atomic unit of energy in eV, atomic unit
// of polarizability in m^3, eV in rad/s) are kept verbatim so reproduced C3
// values do not drift in the fourth digit. The atomic unit of energy in joules
// is derived from them through hbar, which keeps alpha/xi/C3 conversions
// mutually consistent.

#include <cstddef>
#include <numbers>

namespace vdw {

namespace constants {

inline constexpr double pi = std::numbers::pi;

/// Speed of light [m/s].
inline constexpr double c = 299792458.0;
/// Reduced Planck constant [J s].
inline constexpr double hbar = 1.054571817e-34;
/// Boltzmann constant [J/K].
inline constexpr double k_B = 1.380649e-23;

/// 1 eV expressed as an angular frequency [rad/s].
inline constexpr double rad_per_s_per_eV = 1.519e15;
/// 1 atomic unit of energy (Hartree) in eV.
inline constexpr double eV_per_hartree = 27.11;
/// 1 atomic unit of polarizability (bohr^3) in m^3.
inline constexpr double m3_per_au_polarizability = 1.482e-31;

/// 1 eV in joules, consistent with rad_per_s_per_eV.
inline constexpr double joule_per_eV = hbar * rad_per_s_per_eV;
/// 1 Hartree in joules.
inline constexpr double joule_per_hartree = joule_per_eV * eV_per_hartree;
/// 1 Hartree as an angular frequency [rad/s].
inline constexpr double rad_per_s_per_hartree = rad_per_s_per_eV * eV_per_hartree;
/// Atomic unit of a C3 coefficient (Hartree * bohr^3) in J m^3.
inline constexpr double joule_m3_per_au_c3 = joule_per_hartree * m3_per_au_polarizability;

inline constexpr double metre_per_nm = 1e-9;

}  // namespace constants

namespace units {

constexpr double ev_to_rad_per_s(double ev) { return ev * constants::rad_per_s_per_eV; }
constexpr double rad_per_s_to_ev(double w) { return w / constants::rad_per_s_per_eV; }
constexpr double rad_per_s_to_hartree(double w) { return w / constants::rad_per_s_per_hartree; }
constexpr double hartree_to_rad_per_s(double h) { return h * constants::rad_per_s_per_hartree; }
constexpr double ev_to_hartree(double ev) { return ev / constants::eV_per_hartree; }
constexpr double hartree_to_ev(double h) { return h * constants::eV_per_hartree; }

constexpr double joule_to_ev(double j) { return j / constants::joule_per_eV; }
constexpr double ev_to_joule(double ev) { return ev * constants::joule_per_eV; }
constexpr double joule_to_hartree(double j) { return j / constants::joule_per_hartree; }
constexpr double hartree_to_joule(double h) { return h * constants::joule_per_hartree; }

constexpr double nm_to_m(double nm) { return nm * constants::metre_per_nm; }
constexpr double m_to_nm(double m) { return m / constants::metre_per_nm; }
/// Bohr radius taken as the cube root of the polarizability unit.
double bohr_to_m(double bohr);
double m_to_bohr(double m);

constexpr double polarizability_au_to_m3(double au) { return au * constants::m3_per_au_polarizability; }
constexpr double polarizability_m3_to_au(double m3) { return m3 / constants::m3_per_au_polarizability; }

constexpr double c3_si_to_au(double j_m3) { return j_m3 / constants::joule_m3_per_au_c3; }
constexpr double c3_au_to_si(double au) { return au * constants::joule_m3_per_au_c3; }

}  // namespace units

/// xi_l = 2 pi k_B T l / hbar in rad/s. Throws std::domain_error for T <= 0.
double matsubara_frequency(double temperature_K, std::size_t l);

/// zeta = 2 a xi / c.
double dimensionless_zeta(double separation_m, double xi_rad_s);

/// omega_c = c / (2a), the frequency at which zeta = 1.
double characteristic_frequency(double separation_m);

/// Cutoff policy for Matsubara sums.
struct CutoffPolicy {
  /// A term is negligible when |term| < tail_tolerance * |running sum|.
  double tail_tolerance = 1e-7;
  /// Number of consecutive negligible terms required to stop.
  std::size_t consecutive_negligible = 3;
  std::size_t min_terms = 10;
  std::size_t max_index = 20000;
};

class MatsubaraGrid {
 public:
  explicit MatsubaraGrid(double temperature_K, CutoffPolicy policy = {});

  double temperature() const { return temperature_K_; }
  const CutoffPolicy& policy() const { return policy_; }

  /// xi_l in rad/s; xi(0) == 0.
  double xi(std::size_t l) const { return step_ * static_cast<double>(l); }
  /// k_B T in joules.
  double thermal_energy() const { return constants::k_B * temperature_K_; }

 private:
  double temperature_K_;
  double step_;
  CutoffPolicy policy_;
};

}  // namespace vdw
