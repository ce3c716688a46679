#pragma once

// Shared result and option types for the Matsubara-summed free energies.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "vdw/quantities.hpp"

namespace vdw {

struct LifshitzOptions {
  /// Relative tolerance of each per-frequency y integral.
  double quad_rel_tol = 1e-6;
  /// The y integral runs over [zeta, zeta + y_span]; e^-40 is below double resolution of the sum.
  double y_span = 40.0;
  CutoffPolicy cutoff{};
};

struct SumDiagnostics {
  /// Matsubara terms evaluated, l = 0 included.
  std::size_t n_terms = 0;
  /// Largest |term / sum| among the terms that triggered the stop.
  double tail_relative = 0.0;
  /// Summed quadrature error estimates relative to |sum|.
  double quad_error_relative = 0.0;
  bool cap_reached = false;
  std::vector<std::string> warnings;
};

/// Atom-wall free energy F = -C3 / a^3.
struct LifshitzResult {
  double separation_m = 0.0;
  double temperature_K = 0.0;
  double free_energy_J = 0.0;
  /// Hartree * bohr^3.
  double c3_au = 0.0;
  /// J m^3.
  double c3_si = 0.0;
  SumDiagnostics diagnostics;
};

namespace detail {

struct TermValue {
  double value;
  double error;
};

struct SumOutcome {
  double sum = 0.0;
  SumDiagnostics diagnostics;
};

/// Sums term(0) + term(1) + ... under the cutoff policy. term(0) must already
/// carry the 1/2 weight of the zero frequency. Terms are added in ascending l.
SumOutcome matsubara_sum(const CutoffPolicy& policy, const std::function<TermValue(std::size_t)>& term);

}  // namespace detail

}  // namespace vdw
