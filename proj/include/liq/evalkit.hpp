#ifndef LIQ_EVALKIT_HPP
#define LIQ_EVALKIT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "liq/detail/parallel.hpp"
#include "liq/detail/rng.hpp"
#include "liq/errors.hpp"
#include "liq/geo.hpp"

namespace liq {
namespace evalkit {

inline constexpr double kMoransClusterThreshold = 0.3;

/// One labeled observation point with per-model predicted probabilities.
struct CaseHistory {
  geo::LonLat location;
  int observed = 0;  // 0 = no manifestation, 1 = manifestation
  std::vector<double> predicted;
};

inline double median(std::vector<double> v) {
  if (v.empty()) throw Empty("median of an empty sample");
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

namespace detail_ek {

inline void check_case(const CaseHistory& c, std::size_t model) {
  if (c.observed != 0 && c.observed != 1)
    throw NonFiniteInput("observed outcome must be 0 or 1");
  if (model >= c.predicted.size())
    throw ConfigError("model index out of range for a case record");
  double p = c.predicted[model];
  if (!(p >= 0.0 && p <= 1.0))
    throw NonFiniteInput("predicted probability must lie in [0, 1]");
}

inline double sample_sd(const std::vector<double>& v) {
  double mean = std::accumulate(v.begin(), v.end(), 0.0) /
                static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

/// Interpolated quantile (the common "type 7" rule) of a sorted sample.
inline double quantile_sorted(const std::vector<double>& s, double p) {
  double h = p * static_cast<double>(s.size() - 1);
  auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= s.size()) return s.back();
  return s[lo] + (h - lo) * (s[lo + 1] - s[lo]);
}

}  // namespace detail_ek

// ---------------------------------------------------------------------------
// Brier score
// ---------------------------------------------------------------------------

inline double brier(const std::vector<CaseHistory>& cases,
                    std::size_t model = 0) {
  if (cases.empty()) throw Empty("brier needs at least one case");
  double sum = 0.0;
  for (const auto& c : cases) {
    detail_ek::check_case(c, model);
    double d = c.predicted[model] - c.observed;
    sum += d * d;
  }
  return sum / static_cast<double>(cases.size());
}

// ---------------------------------------------------------------------------
// Percentile bootstrap
// ---------------------------------------------------------------------------

struct BootstrapCi {
  double low = 0.0;
  double high = 0.0;
  double mean = 0.0;  // mean of the bootstrap distribution
};

inline BootstrapCi bootstrap_ci(
    const std::vector<CaseHistory>& cases,
    const std::function<double(const std::vector<CaseHistory>&)>& statistic,
    std::size_t reps = 10000, double level = 0.99, std::uint64_t seed = 0,
    int jobs = 0) {
  if (cases.size() < 2) throw TooFew("bootstrap needs at least 2 cases");
  if (reps < 2) throw ConfigError("bootstrap needs at least 2 replicates");
  if (!(level > 0.0 && level < 1.0))
    throw ConfigError("confidence level must lie in (0, 1)");

  std::size_t n = cases.size();
  std::vector<double> stats(reps);
  liq::detail::parallel_for(
      reps,
      [&](std::size_t r) {
        liq::detail::SplitMix64 rng(
            liq::detail::derive_seed(seed, static_cast<std::uint64_t>(r)));
        std::vector<CaseHistory> sample;
        sample.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          auto idx = static_cast<std::size_t>(rng.next_double() *
                                              static_cast<double>(n));
          sample.push_back(cases[std::min(idx, n - 1)]);
        }
        stats[r] = statistic(sample);
      },
      jobs);

  std::vector<double> sorted = stats;
  std::sort(sorted.begin(), sorted.end());
  double tail = 0.5 * (1.0 - level);
  BootstrapCi ci;
  ci.low = detail_ek::quantile_sorted(sorted, tail);
  ci.high = detail_ek::quantile_sorted(sorted, 1.0 - tail);
  ci.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
            static_cast<double>(sorted.size());
  return ci;
}

// ---------------------------------------------------------------------------
// Two-sample Kolmogorov-Smirnov statistic
// ---------------------------------------------------------------------------

inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw Empty("ks needs two nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double na = static_cast<double>(a.size());
  double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Cohen's d
// ---------------------------------------------------------------------------

inline double cohens_d(const std::vector<double>& treatment,
                       const std::vector<double>& control) {
  if (treatment.size() < 2 || control.size() < 2)
    throw TooFew("cohens_d needs at least 2 values per group");
  double nt = static_cast<double>(treatment.size());
  double nc = static_cast<double>(control.size());
  double mt = std::accumulate(treatment.begin(), treatment.end(), 0.0) / nt;
  double mc = std::accumulate(control.begin(), control.end(), 0.0) / nc;
  double st = detail_ek::sample_sd(treatment);
  double sc = detail_ek::sample_sd(control);
  double pooled = std::sqrt(((nt - 1.0) * st * st + (nc - 1.0) * sc * sc) /
                            (nt + nc - 2.0));
  if (!(pooled > 0.0)) throw ZeroVariance("pooled standard deviation is zero");
  return (mt - mc) / pooled;
}

// ---------------------------------------------------------------------------
// Moran's I
// ---------------------------------------------------------------------------

struct MoransI {
  double value = 0.0;
  bool exceeds_threshold = false;  // value > 0.3
};

/// Row-standardized inverse-distance weights with a cutoff of 5x the median
/// nearest-neighbor distance.
inline MoransI morans_i(const std::vector<double>& values,
                        const std::vector<geo::LonLat>& locations) {
  std::size_t n = values.size();
  if (n != locations.size())
    throw ConfigError("values and locations differ in length");
  if (n < 3) throw TooFew("morans_i needs at least 3 points");

  double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                static_cast<double>(n);
  double denom = 0.0;
  for (double v : values) denom += (v - mean) * (v - mean);
  if (!(denom > 0.0)) throw ConstantField("morans_i of a constant field");

  std::vector<double> dist(n * n, 0.0);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = geo::great_circle_m(locations[i], locations[j]);
      dist[i * n + j] = d;
      dist[j * n + i] = d;
      nearest[i] = std::min(nearest[i], d);
      nearest[j] = std::min(nearest[j], d);
    }
  }
  double cutoff = 5.0 * median(nearest);
  if (!(cutoff > 0.0))
    throw NonFiniteInput("degenerate geometry: all points coincide");

  double num = 0.0, s0 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double d = dist[i * n + j];
      if (d > cutoff) continue;
      row_sum += 1.0 / std::max(d, 1e-3);
    }
    if (!(row_sum > 0.0)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double d = dist[i * n + j];
      if (d > cutoff) continue;
      double w = (1.0 / std::max(d, 1e-3)) / row_sum;
      num += w * (values[i] - mean) * (values[j] - mean);
      s0 += w;
    }
  }
  if (!(s0 > 0.0))
    throw NonFiniteInput("no spatial weights inside the cutoff radius");

  MoransI out;
  out.value = (static_cast<double>(n) / s0) * (num / denom);
  out.exceeds_threshold = out.value > kMoransClusterThreshold;
  return out;
}

// ---------------------------------------------------------------------------
// Spatially stratified resampling
// ---------------------------------------------------------------------------

/// Average-linkage agglomerative clustering on great-circle distance.
/// Returns one label in [0, k) per point; labels are ordered by each
/// cluster's smallest member index, so the output is deterministic.
inline std::vector<int> agglomerative_clusters(
    const std::vector<geo::LonLat>& points, std::size_t k) {
  std::size_t n = points.size();
  if (k < 1 || n < k) throw TooFew("need at least k points to form k clusters");

  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = geo::great_circle_m(points[i], points[j]);
      d[i * n + j] = v;
      d[j * n + i] = v;
    }

  std::vector<bool> active(n, true);
  std::vector<std::size_t> size(n, 1);
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};

  for (std::size_t live = n; live > k; --live) {
    std::size_t bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        if (d[i * n + j] < best) {
          best = d[i * n + j];
          bi = i;
          bj = j;
        }
      }
    }
    // Lance-Williams average-linkage update, merging bj into bi.
    for (std::size_t c = 0; c < n; ++c) {
      if (!active[c] || c == bi || c == bj) continue;
      double merged = (static_cast<double>(size[bi]) * d[bi * n + c] +
                       static_cast<double>(size[bj]) * d[bj * n + c]) /
                      static_cast<double>(size[bi] + size[bj]);
      d[bi * n + c] = merged;
      d[c * n + bi] = merged;
    }
    size[bi] += size[bj];
    members[bi].insert(members[bi].end(), members[bj].begin(),
                       members[bj].end());
    active[bj] = false;
  }

  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i)
    if (active[i]) roots.push_back(i);
  std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
    return *std::min_element(members[a].begin(), members[a].end()) <
           *std::min_element(members[b].begin(), members[b].end());
  });
  std::vector<int> labels(n, -1);
  for (std::size_t c = 0; c < roots.size(); ++c)
    for (std::size_t m : members[roots[c]]) labels[m] = static_cast<int>(c);
  return labels;
}

/// Whole-cluster bootstrap: draw clusters with replacement, appending all of
/// a cluster's cases per draw, until at least the original count is reached.
inline std::vector<CaseHistory> spatial_stratified_resample(
    const std::vector<CaseHistory>& cases, std::size_t k_clusters,
    std::uint64_t seed) {
  if (cases.size() < k_clusters || k_clusters < 1)
    throw TooFew("need at least k cases to stratify into k clusters");
  std::vector<geo::LonLat> pts;
  pts.reserve(cases.size());
  for (const auto& c : cases) pts.push_back(c.location);
  std::vector<int> labels = agglomerative_clusters(pts, k_clusters);

  std::vector<std::vector<std::size_t>> clusters(k_clusters);
  for (std::size_t i = 0; i < cases.size(); ++i)
    clusters[static_cast<std::size_t>(labels[i])].push_back(i);

  liq::detail::SplitMix64 rng(liq::detail::derive_seed(seed, 0x57A7ULL));
  std::vector<CaseHistory> out;
  out.reserve(cases.size());
  while (out.size() < cases.size()) {
    auto c = static_cast<std::size_t>(rng.next_double() *
                                      static_cast<double>(k_clusters));
    for (std::size_t idx : clusters[std::min(c, k_clusters - 1)])
      out.push_back(cases[idx]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Calibration curve
// ---------------------------------------------------------------------------

struct CalibrationBin {
  double mean_predicted = 0.0;
  double mean_observed = 0.0;
  std::size_t count = 0;
};

inline std::vector<CalibrationBin> calibration_curve(
    const std::vector<CaseHistory>& cases, std::size_t model = 0,
    std::size_t n_bins = 10) {
  if (cases.empty()) throw Empty("calibration needs at least one case");
  if (n_bins < 1) throw ConfigError("calibration needs at least one bin");
  std::vector<double> psum(n_bins, 0.0), osum(n_bins, 0.0);
  std::vector<std::size_t> count(n_bins, 0);
  for (const auto& c : cases) {
    detail_ek::check_case(c, model);
    double p = c.predicted[model];
    auto bin = std::min(static_cast<std::size_t>(p * n_bins), n_bins - 1);
    psum[bin] += p;
    osum[bin] += c.observed;
    ++count[bin];
  }
  std::vector<CalibrationBin> out;
  for (std::size_t b = 0; b < n_bins; ++b) {
    if (count[b] == 0) continue;
    auto cnt = static_cast<double>(count[b]);
    out.push_back({psum[b] / cnt, osum[b] / cnt, count[b]});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nash-Sutcliffe efficiency
// ---------------------------------------------------------------------------

inline double nash_sutcliffe(const std::vector<double>& predicted,
                             const std::vector<double>& observed) {
  if (predicted.size() != observed.size())
    throw ConfigError("predicted and observed differ in length");
  if (observed.size() < 2)
    throw TooFew("nash_sutcliffe needs at least 2 observations");
  double mean = std::accumulate(observed.begin(), observed.end(), 0.0) /
                static_cast<double>(observed.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    num += (predicted[i] - observed[i]) * (predicted[i] - observed[i]);
    den += (observed[i] - mean) * (observed[i] - mean);
  }
  if (!(den > 0.0))
    throw ConstantObserved("observed values have zero variance");
  return 1.0 - num / den;
}

// ---------------------------------------------------------------------------
// Residual summary
// ---------------------------------------------------------------------------

struct ResidualSummary {
  double mae = 0.0;        // median absolute residual
  double msd = 0.0;        // median of per-bin standard deviations
  double mean_bias = 0.0;  // plain mean residual
};

/// MAE/MSD over residuals; the standard-deviation bins are equal-count bins
/// of the conditioning variable (typically the loading level).
inline ResidualSummary residual_summary(const std::vector<double>& residuals,
                                        const std::vector<double>& conditioning,
                                        std::size_t n_bins = 10) {
  if (residuals.empty()) throw Empty("residual summary of an empty sample");
  if (residuals.size() != conditioning.size())
    throw ConfigError("residuals and conditioning differ in length");
  if (n_bins < 1) throw ConfigError("need at least one residual bin");

  ResidualSummary out;
  std::vector<double> absr(residuals.size());
  for (std::size_t i = 0; i < residuals.size(); ++i)
    absr[i] = std::abs(residuals[i]);
  out.mae = median(absr);
  out.mean_bias = std::accumulate(residuals.begin(), residuals.end(), 0.0) /
                  static_cast<double>(residuals.size());

  std::vector<std::size_t> order(residuals.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return conditioning[a] < conditioning[b];
                   });
  std::size_t n = order.size();
  std::vector<double> sds;
  for (std::size_t b = 0; b < n_bins; ++b) {
    std::size_t lo = b * n / n_bins;
    std::size_t hi = (b + 1) * n / n_bins;
    if (hi - lo < 2) continue;
    std::vector<double> bin;
    bin.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) bin.push_back(residuals[order[i]]);
    sds.push_back(detail_ek::sample_sd(bin));
  }
  out.msd = sds.empty() ? 0.0 : median(sds);
  return out;
}

inline ResidualSummary residual_summary(const std::vector<double>& residuals,
                                        std::size_t n_bins = 10) {
  std::vector<double> order_index(residuals.size());
  std::iota(order_index.begin(), order_index.end(), 0.0);
  return residual_summary(residuals, order_index, n_bins);
}

// ---------------------------------------------------------------------------
// Model comparison report
// ---------------------------------------------------------------------------

struct ModelReport {
  std::string name;
  double mean_bs = 0.0;
  BootstrapCi ci;
  double ks_vs_control = 0.0;
  double cohens_d_vs_control = 0.0;
  MoransI morans;
  std::vector<CalibrationBin> calibration;
};

struct ComparisonReport {
  std::size_t control = 0;
  std::vector<ModelReport> models;
};

/// Assemble the per-model statistics table. Effect sizes compare per-case
/// Brier contributions against the control model's contributions.
inline ComparisonReport compare_models(const std::vector<CaseHistory>& cases,
                                       const std::vector<std::string>& names,
                                       std::size_t control,
                                       std::size_t reps = 10000,
                                       double level = 0.99,
                                       std::uint64_t seed = 0, int jobs = 0) {
  if (cases.empty()) throw Empty("comparison needs cases");
  if (names.empty() || control >= names.size())
    throw ConfigError("control model index out of range");

  auto contributions = [&](std::size_t model) {
    std::vector<double> out;
    out.reserve(cases.size());
    for (const auto& c : cases) {
      detail_ek::check_case(c, model);
      double d = c.predicted[model] - c.observed;
      out.push_back(d * d);
    }
    return out;
  };
  std::vector<double> control_bs = contributions(control);

  std::vector<geo::LonLat> pts;
  pts.reserve(cases.size());
  for (const auto& c : cases) pts.push_back(c.location);

  ComparisonReport report;
  report.control = control;
  for (std::size_t m = 0; m < names.size(); ++m) {
    ModelReport row;
    row.name = names[m];
    row.mean_bs = brier(cases, m);
    row.ci = bootstrap_ci(
        cases, [m](const std::vector<CaseHistory>& cs) { return brier(cs, m); },
        reps, level, liq::detail::derive_seed(seed, m), jobs);
    std::vector<double> bs = contributions(m);
    if (m == control) {
      row.ks_vs_control = 0.0;
      row.cohens_d_vs_control = 0.0;
    } else {
      row.ks_vs_control = ks_two_sample(bs, control_bs);
      row.cohens_d_vs_control = cohens_d(bs, control_bs);
    }
    std::vector<double> residual(cases.size());
    for (std::size_t i = 0; i < cases.size(); ++i)
      residual[i] = cases[i].predicted[m] - cases[i].observed;
    row.morans = morans_i(residual, pts);
    row.calibration = calibration_curve(cases, m);
    report.models.push_back(std::move(row));
  }
  return report;
}

}  // namespace evalkit
}  // namespace liq

#endif  // LIQ_EVALKIT_HPP
