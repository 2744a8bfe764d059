#ifndef LIQ_DETAIL_CHOLESKY_HPP
#define LIQ_DETAIL_CHOLESKY_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "liq/errors.hpp"

namespace liq {
namespace detail {

/// Solve A x = rhs for symmetric positive-definite A (row-major n x n) via
/// Cholesky. If the factorization breaks down, retries once with `jitter`
/// added to the diagonal; a second breakdown throws SingularSystem.
inline std::vector<double> solve_spd(std::vector<double> a, std::size_t n,
                                     const std::vector<double>& rhs,
                                     double jitter) {
  auto factor = [&](std::vector<double>& m) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      double d = m[j * n + j];
      for (std::size_t k = 0; k < j; ++k) d -= m[j * n + k] * m[j * n + k];
      if (!(d > 0.0) || !std::isfinite(d)) return false;
      double l = std::sqrt(d);
      m[j * n + j] = l;
      for (std::size_t i = j + 1; i < n; ++i) {
        double s = m[i * n + j];
        for (std::size_t k = 0; k < j; ++k) s -= m[i * n + k] * m[j * n + k];
        m[i * n + j] = s / l;
      }
    }
    return true;
  };

  std::vector<double> m = a;
  if (!factor(m)) {
    m = a;
    for (std::size_t j = 0; j < n; ++j) m[j * n + j] += jitter;
    if (!factor(m)) throw SingularSystem();
  }

  // forward then back substitution with the lower factor
  std::vector<double> x = rhs;
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= m[i * n + k] * x[k];
    x[i] = s / m[i * n + i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= m[k * n + ii] * x[k];
    x[ii] = s / m[ii * n + ii];
  }
  return x;
}

}  // namespace detail
}  // namespace liq

#endif  // LIQ_DETAIL_CHOLESKY_HPP
