#include "vdw/quantities.hpp"

#include <cmath>
#include <stdexcept>

namespace vdw {

namespace units {

double bohr_to_m(double bohr) { return bohr * std::cbrt(constants::m3_per_au_polarizability); }
double m_to_bohr(double m) { return m / std::cbrt(constants::m3_per_au_polarizability); }

}  // namespace units

double matsubara_frequency(double temperature_K, std::size_t l) {
  if (!(temperature_K > 0.0)) {
    throw std::domain_error("matsubara_frequency: temperature must be positive");
  }
  return 2.0 * constants::pi * constants::k_B * temperature_K * static_cast<double>(l) /
         constants::hbar;
}

double dimensionless_zeta(double separation_m, double xi_rad_s) {
  if (!(separation_m > 0.0)) {
    throw std::domain_error("dimensionless_zeta: separation must be positive");
  }
  return 2.0 * separation_m * xi_rad_s / constants::c;
}

double characteristic_frequency(double separation_m) {
  if (!(separation_m > 0.0)) {
    throw std::domain_error("characteristic_frequency: separation must be positive");
  }
  return constants::c / (2.0 * separation_m);
}

MatsubaraGrid::MatsubaraGrid(double temperature_K, CutoffPolicy policy)
    : temperature_K_(temperature_K), step_(matsubara_frequency(temperature_K, 1)), policy_(policy) {
  if (policy_.max_index == 0 || policy_.consecutive_negligible == 0) {
    throw std::invalid_argument("MatsubaraGrid: cutoff policy needs a positive cap and window");
  }
}

}  // namespace vdw
