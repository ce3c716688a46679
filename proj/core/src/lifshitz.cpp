#include "vdw/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace vdw::detail {

SumOutcome matsubara_sum(const CutoffPolicy& policy, const std::function<TermValue(std::size_t)>& term) {
  SumOutcome out;
  double err = 0.0;
  std::size_t quiet = 0;
  double quiet_max = 0.0;
  for (std::size_t l = 0;; ++l) {
    const TermValue t = term(l);
    out.sum += t.value;
    err += std::abs(t.error);
    out.diagnostics.n_terms = l + 1;

    const double rel = out.sum == 0.0 ? (t.value == 0.0 ? 0.0 : 1.0) : std::abs(t.value / out.sum);
    if (l > 0 && rel < policy.tail_tolerance) {
      quiet_max = quiet == 0 ? rel : std::max(quiet_max, rel);
      ++quiet;
    } else {
      quiet = 0;
      quiet_max = 0.0;
    }
    if (quiet >= policy.consecutive_negligible && out.diagnostics.n_terms >= policy.min_terms) {
      out.diagnostics.tail_relative = quiet_max;
      break;
    }
    if (l >= policy.max_index) {
      out.diagnostics.cap_reached = true;
      out.diagnostics.tail_relative = rel;
      char buf[128];
      std::snprintf(buf, sizeof buf, "Matsubara cap %zu reached; last term relative size %.3g", policy.max_index,
                    rel);
      out.diagnostics.warnings.emplace_back(buf);
      break;
    }
  }
  out.diagnostics.quad_error_relative = out.sum == 0.0 ? 0.0 : err / std::abs(out.sum);
  return out;
}

}  // namespace vdw::detail
