#pragma once

// Independent reference computations and golden-number fixtures.
//
// Oracles here are deliberately slow and simple; they share no numerical code
// with the engine beyond the polarizability tables.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vdw/optics.hpp"
#include "vdw/permittivity.hpp"
#include "vdw/polarizability.hpp"

namespace vdw {

/// An oracle could not reach its own accuracy target.
class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nonretarded perfect-mirror C3 in Hartree * bohr^3: (1/4pi) * integral of
/// alpha(i xi) over xi, which is sum_j g_j / (8 w_j) for an oscillator sum.
double oracle_ideal_metal_c3(const PolarizabilityModel& particle);

/// 1 + omega_p^2 / (xi (xi + gamma)) with xi in rad/s.
double oracle_drude_eps(double plasma_eV, double damping_eV, double xi_rad_s);

struct BruteForceGeometry {
  enum class Kind { semispace, exterior, interior };
  Kind kind = Kind::semispace;
  /// exterior: outer radius R. interior: inner radius R0.
  double radius_m = 0.0;
  /// exterior: shell thickness (0 for a solid cylinder). interior: wall thickness.
  double thickness_m = 0.0;
};

struct BruteForceResult {
  /// (6 a^3 / pi) times the volume integral of r^-6; 1 for a semispace.
  double factor = 0.0;
  /// |last - previous| / |last| at the final refinement.
  double self_consistency = 0.0;
  int resolution = 0;
};

/// Direct 3-D midpoint integration of dv / r^6 over the body, refined by
/// doubling until two successive grids agree to rel_tol. Throws OracleFailure
/// if max_resolution is reached first.
BruteForceResult oracle_brute_force_pairwise(const BruteForceGeometry& geometry, double a_m,
                                             double rel_tol = 1e-3, int max_resolution = 512);

struct SyntheticDrudeOptions {
  double plasma_eV = 1.226;
  double damping_eV = 0.04;
  double window_lo_eV = 0.02;
  double window_hi_eV = 40.0;
  std::size_t rows = 2000;
};

/// Tabulated Im eps of a Drude metal on a log grid with matching extrapolations
/// on both axes, so that its Kramers-Kronig transform is known in closed form.
OpticalDataset synthetic_drude_dataset(const SyntheticDrudeOptions& options = {});

enum class FixtureSource {
  /// Published reference number.
  reference_table,
  /// Follows from the definition with no computation.
  analytic,
  /// Produced by a named oracle in this module.
  oracle,
};

const char* to_string(FixtureSource s);

enum class ToleranceKind { relative, absolute };

struct GoldenFixture {
  std::string id;
  double expected = 0.0;
  double tolerance = 0.0;
  ToleranceKind tolerance_kind = ToleranceKind::relative;
  FixtureSource source = FixtureSource::analytic;
  /// Required for FixtureSource::oracle.
  std::string oracle;
  std::function<double()> compute;
};

struct FixtureOutcome {
  std::string id;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  ToleranceKind tolerance_kind = ToleranceKind::relative;
  FixtureSource source = FixtureSource::analytic;
  std::string oracle;
  bool pass = false;
  /// Set when compute() threw.
  std::string error;
};

/// Throws std::invalid_argument if an oracle fixture names no oracle or a tolerance is not positive.
void check_fixture(const GoldenFixture& f);

FixtureOutcome run_fixture(const GoldenFixture& f);
std::vector<FixtureOutcome> run_fixtures(const std::vector<GoldenFixture>& fixtures);

/// Oscillator-table fixtures: term values and static polarizabilities.
std::vector<GoldenFixture> polarizability_fixtures();

/// Data-free engine fixtures (ideal-metal C3, zero particle, Drude Kramers-Kronig).
std::vector<GoldenFixture> analytic_fixtures();

/// Graphite C3 of H (one oscillator) and H2 near a semispace and a solid
/// cylinder of radius 50 nm at 300 K for a = 3, 5, 10, 20, 30, 40, 50 nm:
/// C3 within 5 %, delta within 1.5 percentage points.
std::vector<GoldenFixture> graphite_table_fixtures(const Material& graphite);

/// Pairwise-versus-Lifshitz discrepancies outside a graphite cylinder of radius
/// 50 nm: below 1 % up to 8 nm, 1.35 +- 0.5 % at 10 nm, 16 +- 3 % at 50 nm.
std::vector<GoldenFixture> graphite_pairwise_fixtures(const Material& graphite);

/// Relative discrepancy |F_pairwise - F_lifshitz| / |F_lifshitz| outside a solid cylinder.
double pairwise_lifshitz_discrepancy(const PolarizabilityModel& particle, const Material& material, double R_m,
                                     double a_m, double temperature_K);

}  // namespace vdw
