#ifndef LIQ_INDICES_HPP
#define LIQ_INDICES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "liq/errors.hpp"
#include "liq/mechanics.hpp"
#include "liq/mi.hpp"

namespace liq {
namespace indices {

inline constexpr double kLpiMaxDepth = 20.0;
inline constexpr double kLpiIshWeight = 25.56;

// Each standardized sample at depth z represents the cell [z - dz, z]; the
// depth weight is evaluated at the cell midpoint, which makes the integral of
// a linear weight exact, and the saturation/20-m gates are applied per cell.

namespace detail {

struct Cell {
  double top, mid, bottom, width;
  std::size_t sample;
};

template <typename Fn>
void for_cells(const mech::FsProfile& fs, Fn&& fn) {
  if (fs.size() == 0) throw EmptyProfile();
  double dz = fs.interval > 0.0
                  ? fs.interval
                  : (fs.size() > 1 ? fs.depth[1] - fs.depth[0] : fs.depth[0]);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    Cell c;
    c.bottom = fs.depth[i];
    c.top = c.bottom - dz;
    c.mid = c.bottom - 0.5 * dz;
    c.width = dz;
    c.sample = i;
    fn(c);
  }
}

inline bool saturated(const mech::FsProfile& fs, const Cell& c) {
  return c.mid > fs.gwt_depth;
}

}  // namespace detail

/// Post-liquefaction volumetric strain (percent) per the published CPT
/// curve family: power laws in qc1Ncs at fixed FS levels, linear
/// interpolation between levels, zero from FS = 2 upward.
inline double volumetric_strain_pct(double fs_liq, double qc1ncs) {
  if (fs_liq >= 2.0) return 0.0;
  double q = std::clamp(qc1ncs, 33.0, 200.0);

  struct CurveRow {
    double fs;
    double a1, b1;      // eps = a1 * q^b1 for q <= knee
    double knee;
    double a2, b2;      // eps = a2 * q^b2 beyond the knee
  };
  static constexpr CurveRow rows[] = {
      {0.5, 102.0, -0.82, 200.0, 0.0, 0.0},
      {0.6, 102.0, -0.82, 147.0, 2411.0, -1.45},
      {0.7, 102.0, -0.82, 110.0, 1701.0, -1.42},
      {0.8, 102.0, -0.82, 80.0, 1690.0, -1.46},
      {0.9, 102.0, -0.82, 60.0, 1430.0, -1.48},
      {1.0, 64.0, -0.93, 200.0, 0.0, 0.0},
      {1.1, 11.0, -0.65, 200.0, 0.0, 0.0},
      {1.2, 9.7, -0.69, 200.0, 0.0, 0.0},
      {1.3, 7.6, -0.71, 200.0, 0.0, 0.0},
  };
  constexpr int n_rows = 9;

  auto eval_row = [&](const CurveRow& r) {
    return q <= r.knee ? r.a1 * std::pow(q, r.b1) : r.a2 * std::pow(q, r.b2);
  };

  double eps;
  if (fs_liq <= rows[0].fs) {
    eps = eval_row(rows[0]);
  } else if (fs_liq >= rows[n_rows - 1].fs) {
    // taper linearly from the FS = 1.3 curve to zero at FS = 2
    double e13 = eval_row(rows[n_rows - 1]);
    eps = e13 * (2.0 - fs_liq) / (2.0 - rows[n_rows - 1].fs);
  } else {
    int hi = 1;
    while (rows[hi].fs < fs_liq) ++hi;
    const CurveRow& lo = rows[hi - 1];
    double t = (fs_liq - lo.fs) / (rows[hi].fs - lo.fs);
    eps = eval_row(lo) + t * (eval_row(rows[hi]) - eval_row(lo));
  }
  return std::clamp(eps, 0.0, 5.5);
}

/// Liquefaction potential index: depth-weighted (10 - 0.5 z) integral of
/// 1 - FS over susceptible, saturated cells above 20 m.
inline ManifestationIndex lpi(const mech::FsProfile& fs) {
  double total = 0.0;
  detail::for_cells(fs, [&](const detail::Cell& c) {
    if (c.bottom > kLpiMaxDepth + 1e-9) return;
    if (!fs.susceptible[c.sample] || !detail::saturated(fs, c)) return;
    double f = fs.fs_liq[c.sample];
    if (f >= 1.0) return;
    total += (1.0 - f) * (10.0 - 0.5 * c.mid) * c.width;
  });
  return {MiKind::Lpi, std::clamp(total, 0.0, 100.0)};
}

/// Ishihara-inspired LPI: 25.56/z weighting with contributions gated by the
/// thickness of the non-liquefied crust.
inline ManifestationIndex lpi_ish(const mech::FsProfile& fs) {
  // crust thickness: depth to the top of the shallowest liquefiable cell
  double h1 = -1.0;
  detail::for_cells(fs, [&](const detail::Cell& c) {
    if (h1 >= 0.0 || c.bottom > kLpiMaxDepth + 1e-9) return;
    if (fs.susceptible[c.sample] && detail::saturated(fs, c) &&
        fs.fs_liq[c.sample] < 1.0)
      h1 = std::max(c.top, 0.0);
  });
  if (h1 < 0.0) return {MiKind::LpiIsh, 0.0};

  double total = 0.0;
  detail::for_cells(fs, [&](const detail::Cell& c) {
    if (c.bottom > kLpiMaxDepth + 1e-9) return;
    if (!fs.susceptible[c.sample] || !detail::saturated(fs, c)) return;
    double f = fs.fs_liq[c.sample];
    if (f >= 1.0) return;
    if (h1 > 0.0) {
      double t = 5.0 / (kLpiIshWeight * (1.0 - f));
      if (t > 690.0) return;  // crust gate: m(FS) beyond any finite bound
      if (h1 * std::expm1(t) > 3.0) return;
    }
    total += (1.0 - f) * (kLpiIshWeight / c.mid) * c.width;
  });
  return {MiKind::LpiIsh, std::clamp(total, 0.0, 100.0)};
}

/// Liquefaction severity number: 1000 * strain / depth integral over
/// susceptible, saturated cells (no 20-m cutoff).
inline ManifestationIndex lsn(const mech::FsProfile& fs) {
  double total = 0.0;
  detail::for_cells(fs, [&](const detail::Cell& c) {
    if (!fs.susceptible[c.sample] || !detail::saturated(fs, c)) return;
    double eps = volumetric_strain_pct(fs.fs_liq[c.sample], fs.qc1ncs[c.sample]);
    if (eps <= 0.0) return;
    total += 1000.0 * (eps / 100.0) / c.mid * c.width;
  });
  return {MiKind::Lsn, std::max(total, 0.0)};
}

inline ManifestationIndex compute(const mech::FsProfile& fs, MiKind kind) {
  switch (kind) {
    case MiKind::Lpi: return lpi(fs);
    case MiKind::LpiIsh: return lpi_ish(fs);
    case MiKind::Lsn: return lsn(fs);
  }
  throw KindMismatch();
}

}  // namespace indices
}  // namespace liq

#endif  // LIQ_INDICES_HPP
