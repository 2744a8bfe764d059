#ifndef LIQ_MECHANICS_HPP
#define LIQ_MECHANICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "liq/cpt.hpp"
#include "liq/errors.hpp"

namespace liq {
namespace mech {

inline constexpr double kAtmosphereKpa = 101.325;
inline constexpr double kWaterUnitWeight = 9.81;  // kN/m^3
inline constexpr double kFsCap = 4.0;
inline constexpr double kIcSusceptibleDefault = 2.5;
inline constexpr double kIterTol = 1e-3;
inline constexpr int kIterMax = 50;

struct LoadingScenario {
  double pga = 0.0;        // g, at the surface
  double magnitude = 7.5;  // moment magnitude
};

enum class FinesRegion { Global, NewZealand };

/// Per-depth triggering results for one profile under one loading.
struct FsProfile {
  std::vector<double> depth;        // m
  std::vector<double> fs_liq;       // factor of safety, capped at kFsCap
  std::vector<double> ic;           // soil behavior type index
  std::vector<bool> susceptible;    // Ic below threshold
  std::vector<double> sigma_v;      // total vertical stress, kPa
  std::vector<double> sigma_v_eff;  // effective vertical stress, kPa
  std::vector<double> qc1ncs;       // clean-sand normalized tip resistance
  double gwt_depth = 0.0;
  double interval = 0.0;

  std::size_t size() const { return depth.size(); }
};

/// Magnitude scaling factor (sand form). Capped at 1.8; floored at 0.05 to
/// keep pathological magnitudes finite.
inline double msf(double magnitude) {
  double raw = 6.9 * std::exp(-magnitude / 4.0) - 0.058;
  return std::clamp(raw, 0.05, 1.8);
}

/// Shear stress reduction coefficient rd(z, M); depth saturates at 34 m.
inline double stress_reduction(double z, double magnitude) {
  double zz = std::min(z, 34.0);
  double a = -1.012 - 1.126 * std::sin(zz / 11.73 + 5.133);
  double b = 0.106 + 0.118 * std::sin(zz / 11.28 + 5.142);
  return std::exp(a + b * magnitude);
}

/// Total and effective vertical stress at each sample of a standardized
/// profile, two-zone unit weight split at the water table.
inline void stress_profile(const cpt::Profile& profile,
                           std::vector<double>& sigma_v,
                           std::vector<double>& sigma_v_eff) {
  const double gwt = profile.gwt_depth;
  const double ga = profile.unit_weight.gamma_above_gwt;
  const double gb = profile.unit_weight.gamma_below_gwt;
  sigma_v.resize(profile.records.size());
  sigma_v_eff.resize(profile.records.size());
  double acc = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < profile.records.size(); ++i) {
    double z = profile.records[i].depth;
    if (prev < gwt && gwt <= z)
      acc += (gwt - prev) * ga + (z - gwt) * gb;
    else if (z <= gwt)
      acc += (z - prev) * ga;
    else
      acc += (z - prev) * gb;
    sigma_v[i] = acc;
    double u = kWaterUnitWeight * std::max(0.0, z - gwt);
    sigma_v_eff[i] = acc - u;
    if (!(sigma_v_eff[i] > 0.0)) throw NonPositiveStress();
    prev = z;
  }
}

namespace detail {

// Qtn and Fr are clamped away from zero so the log-space Ic stays finite on
// degenerate (net resistance <= 0) samples; such samples classify clay-like.
inline double clamp_qtn(double x) { return std::clamp(x, 1e-3, 1e6); }
inline double clamp_fr(double x) { return std::clamp(x, 1e-3, 1e3); }

inline double ic_from(double qtn, double fr) {
  double lq = std::log10(qtn);
  double lf = std::log10(fr);
  return std::sqrt((3.47 - lq) * (3.47 - lq) + (lf + 1.22) * (lf + 1.22));
}

}  // namespace detail

/// Soil-behavior-type index at one sample, iterating the stress-normalization
/// exponent n to convergence (n capped at 1).
inline double soil_behavior_index_at(double qc_mpa, double fs_kpa,
                                     double sigma_v, double sigma_v_eff) {
  if (!(sigma_v_eff > 0.0)) throw NonPositiveStress();
  const double qt = qc_mpa * 1000.0;  // kPa
  const double net = std::max(qt - sigma_v, 1e-3);
  const double fr = detail::clamp_fr(fs_kpa / net * 100.0);
  double n = 1.0;
  double ic = 0.0;
  for (int it = 0; it < kIterMax; ++it) {
    double qtn = detail::clamp_qtn((net / kAtmosphereKpa) *
                                   std::pow(kAtmosphereKpa / sigma_v_eff, n));
    ic = detail::ic_from(qtn, fr);
    double n_new =
        std::min(0.381 * ic + 0.05 * (sigma_v_eff / kAtmosphereKpa) - 0.15, 1.0);
    if (std::abs(n_new - n) <= kIterTol) {
      double qtn_f = detail::clamp_qtn(
          (net / kAtmosphereKpa) * std::pow(kAtmosphereKpa / sigma_v_eff, n_new));
      return detail::ic_from(qtn_f, fr);
    }
    n = n_new;
  }
  throw NonConvergence("soil_behavior_index: n iteration exceeded 50 rounds");
}

/// Ic for every sample of a standardized profile.
inline std::vector<double> soil_behavior_index(const cpt::Profile& profile) {
  std::vector<double> sv, sve;
  stress_profile(profile, sv, sve);
  std::vector<double> ic(profile.records.size());
  for (std::size_t i = 0; i < profile.records.size(); ++i)
    ic[i] = soil_behavior_index_at(profile.records[i].qc, profile.records[i].fs,
                                   sv[i], sve[i]);
  return ic;
}

/// Susceptible iff Ic <= threshold (boundary inclusive).
inline std::vector<bool> susceptibility(const std::vector<double>& ic,
                                        double threshold = kIcSusceptibleDefault) {
  std::vector<bool> out(ic.size());
  for (std::size_t i = 0; i < ic.size(); ++i) out[i] = ic[i] <= threshold;
  return out;
}

/// Fines content (percent) from Ic. The global correlation is the published
/// linear form FC = 80 (Ic + Cfc) - 137 with Cfc = 0; the regional selector
/// applies a nonzero offset of the same family.
inline double fines_content_at(double ic, FinesRegion region = FinesRegion::Global) {
  double cfc = region == FinesRegion::NewZealand ? 0.13 : 0.0;
  return std::clamp(80.0 * (ic + cfc) - 137.0, 0.0, 100.0);
}

inline std::vector<double> fines_content(const std::vector<double>& ic,
                                         FinesRegion region = FinesRegion::Global) {
  std::vector<double> fc(ic.size());
  for (std::size_t i = 0; i < ic.size(); ++i)
    fc[i] = fines_content_at(ic[i], region);
  return fc;
}

namespace detail {

/// Overburden-normalized clean-sand tip resistance. CN's exponent depends on
/// qc1Ncs, so the pair is iterated to a fixed point.
inline double clean_sand_qc1n(double qc_mpa, double sigma_v_eff, double fc) {
  const double qcn = qc_mpa * 1000.0 / kAtmosphereKpa;
  double qc1ncs = qcn;
  double fcd = fc + 0.01;
  double fines_boost =
      std::exp(1.63 + 9.7 / fcd - (15.7 / fcd) * (15.7 / fcd));
  for (int it = 0; it < 100; ++it) {
    double m = 1.338 - 0.249 * std::pow(std::clamp(qc1ncs, 21.0, 254.0), 0.264);
    double cn = std::min(std::pow(kAtmosphereKpa / sigma_v_eff, m), 1.7);
    double qc1n = cn * qcn;
    double next = qc1n + (5.4 + qc1n / 16.0) * fines_boost;
    if (std::abs(next - qc1ncs) <= kIterTol) return next;
    qc1ncs = next;
  }
  return qc1ncs;
}

inline double crr_basis(double qc1ncs) {
  double x = qc1ncs;
  return std::exp(x / 540.0 + (x / 67.0) * (x / 67.0) -
                  (x / 80.0) * (x / 80.0) * (x / 80.0) +
                  (x / 114.0) * (x / 114.0) * (x / 114.0) * (x / 114.0) - 3.0);
}

inline double k_sigma(double qc1ncs, double sigma_v_eff) {
  double c = 1.0 / (37.3 - 8.27 * std::pow(std::min(qc1ncs, 211.0), 0.264));
  c = std::min(c, 0.3);
  return std::min(1.0 - c * std::log(sigma_v_eff / kAtmosphereKpa), 1.1);
}

}  // namespace detail

struct TriggeringOptions {
  double ic_threshold = kIcSusceptibleDefault;
  FinesRegion region = FinesRegion::Global;
};

/// Factor of safety against triggering at every sample: FS = CRR / CSR with
/// the CRR side scaled by MSF and K-sigma. Non-susceptible samples carry the
/// cap so downstream integrals see them as inert.
inline FsProfile factor_of_safety(const cpt::Profile& profile,
                                  const LoadingScenario& loading,
                                  const TriggeringOptions& opt = {}) {
  if (!(loading.pga > 0.0)) throw NonFiniteInput("pga must be positive");
  FsProfile out;
  out.gwt_depth = profile.gwt_depth;
  out.interval = profile.interval;
  const std::size_t n = profile.records.size();
  out.depth.resize(n);
  out.fs_liq.resize(n);
  out.ic.resize(n);
  out.susceptible.resize(n);
  out.qc1ncs.resize(n);
  stress_profile(profile, out.sigma_v, out.sigma_v_eff);

  const double scale = msf(loading.magnitude);
  for (std::size_t i = 0; i < n; ++i) {
    const cpt::Record& r = profile.records[i];
    out.depth[i] = r.depth;
    out.ic[i] = soil_behavior_index_at(r.qc, r.fs, out.sigma_v[i],
                                       out.sigma_v_eff[i]);
    out.susceptible[i] = out.ic[i] <= opt.ic_threshold;
    double fc = fines_content_at(out.ic[i], opt.region);
    out.qc1ncs[i] = detail::clean_sand_qc1n(r.qc, out.sigma_v_eff[i], fc);
    if (!out.susceptible[i]) {
      out.fs_liq[i] = kFsCap;
      continue;
    }
    double csr = 0.65 * loading.pga * (out.sigma_v[i] / out.sigma_v_eff[i]) *
                 stress_reduction(r.depth, loading.magnitude);
    double crr = detail::crr_basis(out.qc1ncs[i]) * scale *
                 detail::k_sigma(out.qc1ncs[i], out.sigma_v_eff[i]);
    double fs = crr / csr;
    out.fs_liq[i] = std::clamp(fs, 1e-12, kFsCap);
  }
  return out;
}

}  // namespace mech
}  // namespace liq

#endif  // LIQ_MECHANICS_HPP
