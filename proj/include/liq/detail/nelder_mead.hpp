#ifndef LIQ_DETAIL_NELDER_MEAD_HPP
#define LIQ_DETAIL_NELDER_MEAD_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace liq {
namespace detail {

struct NelderMeadOptions {
  int max_iter = 500;
  double f_tol = 1e-12;   // spread of simplex function values
  double x_tol = 1e-10;   // simplex edge length, relative to box size
  double init_step = 0.1; // initial simplex step, relative to box size
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

/// Box-constrained Nelder-Mead. Proposals are clamped to [lo, hi]; combined
/// with a multi-start driver this is robust enough for the low-dimensional
/// fits used here. Fully deterministic for a given start point.
inline NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const std::vector<double>& lo,
    const std::vector<double>& hi, const NelderMeadOptions& opt = {}) {
  const std::size_t n = x0.size();
  auto clamp_point = [&](std::vector<double>& p) {
    for (std::size_t i = 0; i < n; ++i) p[i] = std::clamp(p[i], lo[i], hi[i]);
  };
  clamp_point(x0);

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) {
    double step = opt.init_step * (hi[i] - lo[i]);
    simplex[i + 1][i] += step;
    if (simplex[i + 1][i] > hi[i]) simplex[i + 1][i] = x0[i] - step;
    clamp_point(simplex[i + 1]);
  }
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  NelderMeadResult result;
  int iter = 0;
  for (; iter < opt.max_iter; ++iter) {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::size_t best = order[0], worst = order[n], second = order[n - 1];

    // convergence: f-spread and simplex extent
    double fspread = std::abs(fv[worst] - fv[best]);
    double extent = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double lo_i = simplex[best][i], hi_i = simplex[best][i];
      for (std::size_t k = 0; k <= n; ++k) {
        lo_i = std::min(lo_i, simplex[k][i]);
        hi_i = std::max(hi_i, simplex[k][i]);
      }
      double span = hi[i] - lo[i];
      if (span > 0.0) extent = std::max(extent, (hi_i - lo_i) / span);
    }
    if (fspread <= opt.f_tol && extent <= opt.x_tol) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i];
    }
    for (std::size_t i = 0; i < n; ++i) centroid[i] /= static_cast<double>(n);

    auto blend = [&](double coef) {
      std::vector<double> p(n);
      for (std::size_t i = 0; i < n; ++i)
        p[i] = centroid[i] + coef * (centroid[i] - simplex[worst][i]);
      clamp_point(p);
      return p;
    };

    std::vector<double> xr = blend(1.0);
    double fr = f(xr);
    if (fr < fv[best]) {
      std::vector<double> xe = blend(2.0);
      double fe = f(xe);
      if (fe < fr) {
        simplex[worst] = std::move(xe);
        fv[worst] = fe;
      } else {
        simplex[worst] = std::move(xr);
        fv[worst] = fr;
      }
    } else if (fr < fv[second]) {
      simplex[worst] = std::move(xr);
      fv[worst] = fr;
    } else {
      std::vector<double> xc = blend(fr < fv[worst] ? 0.5 : -0.5);
      double fc = f(xc);
      if (fc < std::min(fr, fv[worst])) {
        simplex[worst] = std::move(xc);
        fv[worst] = fc;
      } else {
        for (std::size_t k = 0; k <= n; ++k) {
          if (k == best) continue;
          for (std::size_t i = 0; i < n; ++i)
            simplex[k][i] = simplex[best][i] + 0.5 * (simplex[k][i] - simplex[best][i]);
          clamp_point(simplex[k]);
          fv[k] = f(simplex[k]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (fv[i] < fv[best]) best = i;
  result.x = simplex[best];
  result.fx = fv[best];
  result.iterations = iter;
  return result;
}

}  // namespace detail
}  // namespace liq

#endif  // LIQ_DETAIL_NELDER_MEAD_HPP
