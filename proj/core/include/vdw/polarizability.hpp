#pragma once

// Dynamic polarizability alpha(i xi) = sum_j g_j / (w_j^2 + xi^2), all in atomic units.

#include <filesystem>
#include <string>
#include <vector>

namespace vdw {

struct OscillatorTerm {
  double strength_au;
  double energy_au;
};

class PolarizabilityModel {
 public:
  PolarizabilityModel(std::string species, std::vector<OscillatorTerm> terms);

  /// g = alpha(0) w^2.
  static PolarizabilityModel single_oscillator(std::string species, double static_au, double energy_eV);

  const std::string& species() const { return species_; }
  const std::vector<OscillatorTerm>& terms() const { return terms_; }

  /// alpha(i xi) in bohr^3 with xi in Hartree.
  double alpha_au(double xi_hartree) const;
  /// alpha(i xi) in m^3 with xi in rad/s.
  double alpha_m3(double xi_rad_s) const;
  double static_au() const { return alpha_au(0.0); }
  /// Sum of oscillator strengths (large-xi coefficient of 1/xi^2).
  double total_strength() const;
  bool is_zero() const;

 private:
  std::string species_;
  std::vector<OscillatorTerm> terms_;
};

/// Same as PolarizabilityModel::alpha_m3.
double alpha_ixi(const PolarizabilityModel& model, double xi_rad_s);

/// Ten-oscillator hydrogen atom (tabulated strengths and eigenenergies).
PolarizabilityModel hydrogen_atom_10osc();
/// Hydrogen atom, alpha(0) = 4.50 au, w = 11.65 eV.
PolarizabilityModel hydrogen_atom_1osc();
/// Hydrogen molecule, alpha(0) = 5.439 au, w = 14.09 eV.
PolarizabilityModel hydrogen_molecule_1osc();

/// {H-10osc, H-1osc, H2-1osc}.
std::vector<PolarizabilityModel> builtin_models();

/// Look up "H-10osc", "H-1osc" or "H2-1osc". Throws std::invalid_argument.
PolarizabilityModel builtin_model(const std::string& name);

/// Reads a CSV with header `g_au,omega_au`. Throws IngestError.
PolarizabilityModel load_species(const std::filesystem::path& path, std::string species = {});

}  // namespace vdw
