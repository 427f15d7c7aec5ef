#include "vdf/quadrature.hpp"

#include <algorithm>
#include <limits>

namespace vdf {

EpsilonEstimate wynn_epsilon(const std::vector<double> &s) {
  const std::size_t n = s.size();
  if (n == 0) return {};
  if (n < 3) return {s.back(), n == 2 ? std::abs(s[1] - s[0]) : std::numeric_limits<double>::infinity()};

  // Columns of the epsilon table; even columns hold the accelerated estimates.
  std::vector<double> prev(n, 0.0);
  std::vector<double> cur(s);
  double best = s.back();
  double best_prev = s[n - 2];
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<double> next(n - k);
    bool broke = false;
    for (std::size_t j = 0; j + k < n; ++j) {
      const double diff = cur[j + 1] - cur[j];
      if (diff == 0.0) {
        broke = true;
        break;
      }
      next[j] = prev[j + 1] + 1.0 / diff;
    }
    if (broke) break;
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) {
      const double older = best;
      best = cur.back();
      best_prev = cur.size() >= 2 ? cur[cur.size() - 2] : older;
    }
  }
  return {best, std::abs(best - best_prev)};
}

ExtrapolatedSum partition_extrapolate(const std::function<Vec3d(int)> &panel, double rel_tol, double abs_tol,
                                      int min_panels, int max_panels) {
  std::vector<double> sums[3];
  Vec3d running{};
  ExtrapolatedSum out;
  Vec3d last_est{};
  int stable = 0;
  for (int i = 0; i < max_panels; ++i) {
    running += panel(i);
    for (int c = 0; c < 3; ++c) sums[c].push_back(running[c]);
    out.panels = i + 1;
    if (i + 1 < std::max(min_panels, 3)) continue;
    Vec3d est;
    double err = 0.0;
    for (int c = 0; c < 3; ++c) {
      // a short trailing window keeps the table well conditioned
      const std::size_t w = std::min<std::size_t>(sums[c].size(), 24);
      std::vector<double> tail(sums[c].end() - static_cast<std::ptrdiff_t>(w), sums[c].end());
      const EpsilonEstimate e = wynn_epsilon(tail);
      est[c] = e.value;
      err = std::max(err, e.error);
    }
    const double change = max_abs(est - last_est);
    err = std::max(err, change);
    last_est = est;
    out.value = est;
    out.error = err;
    const double target = std::max(abs_tol, rel_tol * max_abs(est));
    stable = err <= target ? stable + 1 : 0;
    if (stable >= 2) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

}  // namespace vdf
