#ifndef LIQ_CPT_HPP
#define LIQ_CPT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "liq/errors.hpp"
#include "liq/geo.hpp"

namespace liq {
namespace cpt {

/// One raw sounding sample. qc in MPa, fs in kPa, depth in meters.
/// Channels carry independent validity flags; invalid entries are repaired
/// during standardization.
struct Record {
  double depth = 0.0;
  double qc = 0.0;
  double fs = 0.0;
  bool qc_valid = true;
  bool fs_valid = true;
};

/// Total unit weight used for stress integration, two-zone by groundwater.
struct UnitWeightModel {
  double gamma_above_gwt = 17.0;  // kN/m^3
  double gamma_below_gwt = 19.5;  // kN/m^3
};

struct Profile {
  std::string id;
  geo::LonLat location;
  std::vector<Record> records;
  double gwt_depth = 0.0;       // m
  double predrill_depth = 0.0;  // m
  UnitWeightModel unit_weight;
  bool standardized = false;
  double interval = 0.0;  // constant sample spacing once standardized, m
};

struct StandardizeOptions {
  int max_lag = 10;  // samples searched when aligning tip and sleeve
};

/// Integer-sample lag in [-max_lag, +max_lag] maximizing the sample
/// cross-covariance of a against b shifted by the lag. Covariance is taken on
/// mean-removed values over the overlapping window only. Ties break toward
/// smaller |lag|, then toward the negative lag.
inline int align_lag(const std::vector<double>& a, const std::vector<double>& b,
                     int max_lag) {
  if (a.size() != b.size() ||
      static_cast<int>(a.size()) < max_lag + 2 || max_lag < 0)
    throw SeriesTooShort();
  const int n = static_cast<int>(a.size());

  auto covariance_at = [&](int lag) {
    int start = std::max(0, -lag);
    int stop = std::min(n, n - lag);  // indices i with 0 <= i+lag < n
    int count = stop - start;
    if (count < 2) return -std::numeric_limits<double>::infinity();
    double ma = 0.0, mb = 0.0;
    for (int i = start; i < stop; ++i) {
      ma += a[static_cast<std::size_t>(i)];
      mb += b[static_cast<std::size_t>(i + lag)];
    }
    ma /= count;
    mb /= count;
    double cov = 0.0;
    for (int i = start; i < stop; ++i)
      cov += (a[static_cast<std::size_t>(i)] - ma) *
             (b[static_cast<std::size_t>(i + lag)] - mb);
    return cov / count;
  };

  // visit lags in tie-break order (0, -1, +1, -2, +2, ...) and require a
  // strictly better score to switch
  int best_lag = 0;
  double best = covariance_at(0);
  for (int k = 1; k <= max_lag; ++k) {
    for (int lag : {-k, k}) {
      double c = covariance_at(lag);
      if (c > best) {
        best = c;
        best_lag = lag;
      }
    }
  }
  return best_lag;
}

namespace detail {

/// Valid (depth, value) anchors of one channel, first-kept on duplicate depth.
inline void channel_anchors(const std::vector<Record>& records, bool use_qc,
                            std::vector<double>& z, std::vector<double>& v) {
  z.clear();
  v.clear();
  for (const Record& r : records) {
    bool valid = use_qc ? r.qc_valid : r.fs_valid;
    if (!valid) continue;
    double value = use_qc ? r.qc : r.fs;
    if (!std::isfinite(value) || !std::isfinite(r.depth) || r.depth < 0.0)
      throw NonFiniteInput();
    if (!z.empty() && r.depth <= z.back()) continue;  // first wins on dupes
    z.push_back(r.depth);
    v.push_back(value);
  }
}

/// Piecewise-linear sample with constant back-fill above the first anchor.
/// Queries below the last anchor are the caller's responsibility (the output
/// grid is truncated there).
inline double sample_channel(const std::vector<double>& z,
                             const std::vector<double>& v, double query) {
  if (query <= z.front()) return v.front();
  auto it = std::lower_bound(z.begin(), z.end(), query);
  std::size_t hi = static_cast<std::size_t>(it - z.begin());
  if (hi >= z.size()) return v.back();
  if (z[hi] == query) return v[hi];
  std::size_t lo = hi - 1;
  double t = (query - z[lo]) / (z[hi] - z[lo]);
  return v[lo] + t * (v[hi] - v[lo]);
}

}  // namespace detail

/// Resample a profile onto the uniform grid {d, 2d, ...}, repair invalid
/// samples, back-fill the predrill zone, and align tip against sleeve by
/// cross-covariance. The output is gap-free and strictly increasing in depth;
/// nothing is extrapolated below the deepest valid measurement.
inline Profile standardize(const Profile& raw, double interval,
                           const StandardizeOptions& opt = {}) {
  if (!(interval > 0.0)) throw IntervalNonPositive();
  if (!std::isfinite(raw.gwt_depth) || raw.gwt_depth < 0.0 ||
      !std::isfinite(raw.predrill_depth) || raw.predrill_depth < 0.0)
    throw NonFiniteInput();

  std::vector<double> zq, vq, zf, vf;
  detail::channel_anchors(raw.records, true, zq, vq);
  detail::channel_anchors(raw.records, false, zf, vf);

  // anything recorded above the predrill depth is an artifact; the zone is
  // back-filled from the first measurement at or below it
  auto drop_above_predrill = [&](std::vector<double>& z, std::vector<double>& v) {
    std::size_t first = 0;
    while (first < z.size() && z[first] < raw.predrill_depth) ++first;
    z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(first));
    v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(first));
  };
  if (raw.predrill_depth > 0.0) {
    drop_above_predrill(zq, vq);
    drop_above_predrill(zf, vf);
  }
  if (zq.size() < 2 || zf.size() < 2) throw TooFewRecords();

  double max_depth = 0.0;
  for (const Record& r : raw.records) max_depth = std::max(max_depth, r.depth);
  double deepest_valid = std::min(zq.back(), zf.back());
  double zmax = std::min(max_depth, deepest_valid);

  std::size_t count = static_cast<std::size_t>(
      std::floor(zmax / interval + 1e-9));
  if (count < 2) throw TooFewRecords();

  std::vector<double> qc(count), fs(count);
  for (std::size_t k = 0; k < count; ++k) {
    double z = static_cast<double>(k + 1) * interval;
    qc[k] = detail::sample_channel(zq, vq, z);
    fs[k] = detail::sample_channel(zf, vf, z);
  }

  // channel alignment repairs the physical tip/sleeve sensor offset in raw
  // soundings; it is applied exactly once, so re-standardizing is idempotent
  int max_lag = std::min<int>(opt.max_lag, static_cast<int>(count) - 2);
  int lag = !raw.standardized && max_lag >= 0 &&
                    count >= static_cast<std::size_t>(max_lag) + 2
                ? align_lag(qc, fs, max_lag)
                : 0;
  if (lag != 0) {
    std::vector<double> shifted(count);
    for (std::size_t k = 0; k < count; ++k) {
      long src = static_cast<long>(k) + lag;
      src = std::clamp<long>(src, 0, static_cast<long>(count) - 1);
      shifted[k] = fs[static_cast<std::size_t>(src)];
    }
    fs = std::move(shifted);
  }

  Profile out;
  out.id = raw.id;
  out.location = raw.location;
  out.gwt_depth = raw.gwt_depth;
  out.predrill_depth = raw.predrill_depth;
  out.unit_weight = raw.unit_weight;
  out.standardized = true;
  out.interval = interval;
  out.records.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    Record& r = out.records[k];
    r.depth = static_cast<double>(k + 1) * interval;
    r.qc = qc[k];
    r.fs = fs[k];
    r.qc_valid = r.fs_valid = true;
  }
  return out;
}

}  // namespace cpt
}  // namespace liq

#endif  // LIQ_CPT_HPP
