#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature on finite intervals.
//
// The interval with the largest error estimate is bisected until the summed
// error estimate satisfies max(abs_tol, rel_tol * |I|) or the subdivision
// budget is spent. Initial breakpoints can be supplied, e.g. the nodes of an
// interpolated table, so that no panel straddles a kink.

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace vdw {

/// Raised when a numerical procedure fails to reach its requested accuracy.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double worst_lo = 0.0, double worst_hi = 0.0,
               double worst_error = 0.0)
      : std::runtime_error(what), worst_lo_(worst_lo), worst_hi_(worst_hi), worst_error_(worst_error) {}

  /// Sub-interval that carried the largest error estimate when integration stopped.
  double worst_lo() const { return worst_lo_; }
  double worst_hi() const { return worst_hi_; }
  double worst_error() const { return worst_error_; }

 private:
  double worst_lo_;
  double worst_hi_;
  double worst_error_;
};

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  int max_intervals = 4000;
  /// Throw NumericError instead of returning an unconverged result.
  bool throw_on_failure = true;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = false;
  double worst_lo = 0.0;
  double worst_hi = 0.0;
};

using Integrand = std::function<double(double)>;

/// Single G7/K15 panel; returns the Kronrod estimate and sets `error`.
double gauss_kronrod_15(const Integrand& f, double lo, double hi, double& error);

QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           const QuadratureOptions& options = {});

/// As above with the interval pre-split at `breakpoints` (sorted, inside [lo, hi]).
QuadratureResult integrate(const Integrand& f, std::span<const double> breakpoints,
                           const QuadratureOptions& options = {});

}  // namespace vdw
