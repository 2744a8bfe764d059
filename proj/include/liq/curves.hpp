#ifndef LIQ_CURVES_HPP
#define LIQ_CURVES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "liq/detail/nelder_mead.hpp"
#include "liq/errors.hpp"
#include "liq/indices.hpp"
#include "liq/mechanics.hpp"
#include "liq/mi.hpp"

namespace liq {
namespace curves {

inline constexpr double kPgaMThreshold = 0.1;   // g; response is zero below
inline constexpr double kQuantScale = 0.01;     // value per 16-bit count
inline constexpr std::uint16_t kNoDataCode = 65535;
inline constexpr double kAbMax = 655.34;        // largest encodable value

/// Response curve for one site and one manifestation index. A sets the level
/// approached at high PGA_M (value -> A*pi/2); B sets how fast it gets there.
struct ResponseCurve {
  double a = 0.0;
  double b = 0.01;
  MiKind kind = MiKind::Lpi;
  double fit_rmse = 0.0;
};

/// MI(PGA_M): zero below the threshold, else the arctangent form with its
/// shifted, squared argument.
inline double eval_curve(double a, double b, double pga_m) {
  if (pga_m < kPgaMThreshold) return 0.0;
  double arg = pga_m - (a / 100.0) / b;
  return std::max(0.0, a * std::atan(b * arg * arg));
}

inline double eval_curve(const ResponseCurve& curve, double pga_m) {
  return eval_curve(curve.a, curve.b, pga_m);
}

struct LoadingArray {
  std::vector<double> pga_values;        // g
  std::vector<double> magnitude_values;  // Mw

  std::size_t size() const {
    return pga_values.size() * magnitude_values.size();
  }

  void validate() const {
    for (double p : pga_values)
      if (!(p >= 0.05 && p <= 2.0)) throw ConfigError("pga outside [0.05, 2]");
    for (double m : magnitude_values)
      if (!(m >= 4.5 && m <= 9.0))
        throw ConfigError("magnitude outside [4.5, 9]");
  }
};

/// PGA 0.05..2.0 g in 0.05 steps crossed with Mw 4.5..9.0 in 0.5 steps.
inline LoadingArray default_loading_array() {
  LoadingArray array;
  array.pga_values.reserve(40);
  for (int i = 1; i <= 40; ++i) array.pga_values.push_back(i * 0.05);
  array.magnitude_values.reserve(10);
  for (int i = 0; i < 10; ++i) array.magnitude_values.push_back(4.5 + 0.5 * i);
  return array;
}

/// One (PGA_M, MI) response sample.
struct CurveSample {
  double pga_m = 0.0;
  double mi = 0.0;
};

/// Run the mechanics chain for every loading in the array and collect the
/// site's (PGA_M, MI) response, sorted by PGA_M.
inline std::vector<CurveSample> sweep_site(const cpt::Profile& profile,
                                           const LoadingArray& array,
                                           MiKind kind,
                                           const mech::TriggeringOptions& opt = {}) {
  std::vector<CurveSample> samples;
  samples.reserve(array.size());
  for (double mag : array.magnitude_values) {
    double scale = mech::msf(mag);
    for (double pga : array.pga_values) {
      mech::FsProfile fsp =
          mech::factor_of_safety(profile, {pga, mag}, opt);
      samples.push_back({pga / scale, indices::compute(fsp, kind).value});
    }
  }
  std::sort(samples.begin(), samples.end(),
            [](const CurveSample& x, const CurveSample& y) {
              return x.pga_m != y.pga_m ? x.pga_m < y.pga_m : x.mi < y.mi;
            });
  return samples;
}

/// Least-squares fit of the curve to response samples at PGA_M >= 0.1 g.
/// Multi-start bounded Nelder-Mead with a fixed start set, so the result is
/// deterministic and independent of sample order.
inline ResponseCurve fit_curve(std::vector<CurveSample> samples, MiKind kind) {
  std::sort(samples.begin(), samples.end(),
            [](const CurveSample& x, const CurveSample& y) {
              return x.pga_m != y.pga_m ? x.pga_m < y.pga_m : x.mi < y.mi;
            });
  std::vector<CurveSample> used;
  used.reserve(samples.size());
  for (const CurveSample& s : samples)
    if (s.pga_m >= kPgaMThreshold) used.push_back(s);
  if (used.size() < 10) throw TooFewSamples();

  ResponseCurve curve;
  curve.kind = kind;

  double max_mi = 0.0;
  for (const CurveSample& s : used) max_mi = std::max(max_mi, s.mi);
  if (max_mi <= 0.0) {
    curve.a = 0.0;
    curve.b = 0.01;
    curve.fit_rmse = 0.0;
    return curve;
  }

  const std::vector<double> lo{0.0, 0.01};
  const std::vector<double> hi{kAbMax, kAbMax};
  auto sse = [&](const std::vector<double>& p) {
    double acc = 0.0;
    for (const CurveSample& s : used) {
      double r = eval_curve(p[0], p[1], s.pga_m) - s.mi;
      acc += r * r;
    }
    return acc;
  };

  double a0 = std::clamp(max_mi / (3.14159265358979323846 / 2.0), 0.0, kAbMax);
  static constexpr double b_starts[] = {0.02, 0.1, 0.5, 2.0, 8.0, 32.0, 128.0};

  detail::NelderMeadOptions nm;
  nm.max_iter = 600;
  nm.f_tol = 1e-14;
  nm.x_tol = 1e-11;
  nm.init_step = 0.05;

  detail::NelderMeadResult best;
  for (double b0 : b_starts) {
    auto r = detail::nelder_mead(sse, {a0, b0}, lo, hi, nm);
    if (r.fx < best.fx) best = r;
  }
  // polish from the winner with a tighter simplex
  detail::NelderMeadOptions polish = nm;
  polish.init_step = 1e-4;
  polish.max_iter = 2000;
  auto refined = detail::nelder_mead(sse, best.x, lo, hi, polish);
  if (refined.fx < best.fx) best = refined;

  if (!std::isfinite(best.fx)) throw DegenerateFit();
  curve.a = best.x[0];
  curve.b = best.x[1];
  curve.fit_rmse = std::sqrt(best.fx / static_cast<double>(used.size()));
  return curve;
}

/// 0.01-per-count quantization over [0, 655.34]; 65535 is reserved for
/// nodata. Out-of-range inputs clamp silently (callers may watch `clamped`).
inline std::uint16_t encode_ab(double x, bool* clamped = nullptr) {
  if (clamped) *clamped = x < 0.0 || x > kAbMax;
  double v = std::clamp(x, 0.0, kAbMax);
  return static_cast<std::uint16_t>(std::lround(v / kQuantScale));
}

/// Decodes a quantized value; the nodata code maps to NaN so it can never be
/// mistaken for a real value.
inline double decode_ab(std::uint16_t code) {
  if (code == kNoDataCode) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(code) * kQuantScale;
}

}  // namespace curves
}  // namespace liq

#endif  // LIQ_CURVES_HPP
