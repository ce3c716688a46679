#include "vdw/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace vdw {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the embedded Gauss points.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const { return a.error < b.error; }
};

}  // namespace

double gauss_kronrod_15(const Integrand& f, double lo, double hi, double& error) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  error = std::abs(kronrod - gauss);
  return kronrod;
}

QuadratureResult integrate(const Integrand& f, double lo, double hi, const QuadratureOptions& options) {
  const std::array<double, 2> bp = {lo, hi};
  return integrate(f, bp, options);
}

QuadratureResult integrate(const Integrand& f, std::span<const double> breakpoints,
                           const QuadratureOptions& options) {
  QuadratureResult result;
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("integrate: need at least two breakpoints");
  }

  std::vector<Panel> heap;
  heap.reserve(breakpoints.size() + 64);
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b >= a)) throw std::invalid_argument("integrate: breakpoints must be non-decreasing");
    if (b == a) continue;
    Panel p{a, b, 0.0, 0.0};
    p.value = gauss_kronrod_15(f, a, b, p.error);
    result.evaluations += 15;
    total += p.value;
    total_err += p.error;
    heap.push_back(p);
  }
  if (heap.empty()) {
    result.converged = true;
    return result;
  }
  std::make_heap(heap.begin(), heap.end(), ByError{});

  auto target = [&] { return std::max(options.abs_tol, options.rel_tol * std::abs(total)); };

  while (total_err > target() && static_cast<int>(heap.size()) < options.max_intervals) {
    std::pop_heap(heap.begin(), heap.end(), ByError{});
    const Panel worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // Interval cannot be split further in double precision.
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), ByError{});
      break;
    }
    Panel left{worst.lo, mid, 0.0, 0.0};
    Panel right{mid, worst.hi, 0.0, 0.0};
    left.value = gauss_kronrod_15(f, left.lo, left.hi, left.error);
    right.value = gauss_kronrod_15(f, right.lo, right.hi, right.error);
    result.evaluations += 30;

    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), ByError{});
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), ByError{});
  }

  // Re-sum to shed drift from the incremental updates.
  total = 0.0;
  total_err = 0.0;
  for (const auto& p : heap) {
    total += p.value;
    total_err += p.error;
  }
  result.value = total;
  result.error = total_err;
  result.intervals = static_cast<int>(heap.size());
  result.converged = total_err <= target();
  const auto worst = std::max_element(heap.begin(), heap.end(), ByError{});
  result.worst_lo = worst->lo;
  result.worst_hi = worst->hi;

  if (!std::isfinite(total)) {
    throw NumericError("integrate: non-finite integral", worst->lo, worst->hi, worst->error);
  }
  if (!result.converged && options.throw_on_failure) {
    char msg[200];
    std::snprintf(msg, sizeof msg,
                  "integrate: no convergence (error %.3e > target %.3e, worst panel [%.6g, %.6g])",
                  total_err, target(), worst->lo, worst->hi);
    throw NumericError(msg, worst->lo, worst->hi, worst->error);
  }
  return result;
}

}  // namespace vdw
