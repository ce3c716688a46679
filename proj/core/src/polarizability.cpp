#include "vdw/polarizability.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "vdw/optics.hpp"
#include "vdw/quantities.hpp"

namespace vdw {

PolarizabilityModel::PolarizabilityModel(std::string species, std::vector<OscillatorTerm> terms)
    : species_(std::move(species)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (!(t.strength_au >= 0.0) || !(t.energy_au > 0.0)) {
      throw std::invalid_argument("oscillator model '" + species_ + "': need g >= 0 and w > 0");
    }
  }
}

PolarizabilityModel PolarizabilityModel::single_oscillator(std::string species, double static_au,
                                                           double energy_eV) {
  const double w = units::ev_to_hartree(energy_eV);
  return PolarizabilityModel(std::move(species), {{static_au * w * w, w}});
}

double PolarizabilityModel::alpha_au(double xi_hartree) const {
  const double xi2 = xi_hartree * xi_hartree;
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.strength_au / (t.energy_au * t.energy_au + xi2);
  return sum;
}

double PolarizabilityModel::alpha_m3(double xi_rad_s) const {
  if (xi_rad_s < 0.0) throw std::domain_error("alpha(i xi): xi must be non-negative");
  return units::polarizability_au_to_m3(alpha_au(units::rad_per_s_to_hartree(xi_rad_s)));
}

double PolarizabilityModel::total_strength() const {
  double g = 0.0;
  for (const auto& t : terms_) g += t.strength_au;
  return g;
}

bool PolarizabilityModel::is_zero() const { return total_strength() == 0.0; }

double alpha_ixi(const PolarizabilityModel& model, double xi_rad_s) { return model.alpha_m3(xi_rad_s); }

PolarizabilityModel hydrogen_atom_10osc() {
  return PolarizabilityModel("H-10osc", {
                                            {0.41619993, 0.37500006},
                                            {0.08803654, 0.44533064},
                                            {0.08993244, 0.48877611},
                                            {0.10723836, 0.56134416},
                                            {0.10489786, 0.68364018},
                                            {0.08700329, 0.89169023},
                                            {0.06013601, 1.2698693},
                                            {0.03259492, 2.0478339},
                                            {0.01199044, 4.0423429},
                                            {0.00197021, 12.194172},
                                        });
}

PolarizabilityModel hydrogen_atom_1osc() { return PolarizabilityModel::single_oscillator("H-1osc", 4.50, 11.65); }

PolarizabilityModel hydrogen_molecule_1osc() {
  return PolarizabilityModel::single_oscillator("H2-1osc", 5.439, 14.09);
}

std::vector<PolarizabilityModel> builtin_models() {
  return {hydrogen_atom_10osc(), hydrogen_atom_1osc(), hydrogen_molecule_1osc()};
}

PolarizabilityModel builtin_model(const std::string& name) {
  for (auto& m : builtin_models()) {
    if (m.species() == name) return m;
  }
  throw std::invalid_argument("unknown species '" + name + "' (expected H-10osc, H-1osc or H2-1osc)");
}

PolarizabilityModel load_species(const std::filesystem::path& path, std::string species) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open species file: " + path.string());
  if (species.empty()) species = path.stem().string();

  std::string line;
  std::size_t row = 0;
  bool header_seen = false;
  std::vector<OscillatorTerm> terms;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("g_au,omega_au", 0) != 0) {
        throw IngestError(path.string() + ": expected header 'g_au,omega_au'", row);
      }
      header_seen = true;
      continue;
    }
    std::istringstream ss(line);
    std::string a;
    std::string b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b)) {
      throw IngestError(path.string() + ": row " + std::to_string(row) + ": expected two fields", row);
    }
    auto num = [&](const std::string& s) {
      const auto first = s.find_first_not_of(" \t");
      const auto last = s.find_last_not_of(" \t\r");
      if (first == std::string::npos) {
        throw IngestError(path.string() + ": row " + std::to_string(row) + ": empty field", row);
      }
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(s.data() + first, s.data() + last + 1, v);
      if (ec != std::errc{} || ptr != s.data() + last + 1) {
        throw IngestError(path.string() + ": row " + std::to_string(row) + ": bad number '" + s + "'", row);
      }
      return v;
    };
    const OscillatorTerm t{num(a), num(b)};
    if (!(t.strength_au > 0.0) || !(t.energy_au > 0.0)) {
      throw IngestError(path.string() + ": row " + std::to_string(row) + ": need g > 0 and omega > 0", row);
    }
    terms.push_back(t);
  }
  if (terms.empty()) throw IngestError(path.string() + ": no oscillator rows", row);
  return PolarizabilityModel(std::move(species), std::move(terms));
}

}  // namespace vdw
