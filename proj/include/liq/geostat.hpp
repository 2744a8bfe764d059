#ifndef LIQ_GEOSTAT_HPP
#define LIQ_GEOSTAT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "liq/curves.hpp"
#include "liq/detail/cholesky.hpp"
#include "liq/detail/nelder_mead.hpp"
#include "liq/detail/parallel.hpp"
#include "liq/errors.hpp"
#include "liq/geo.hpp"
#include "liq/raster.hpp"

namespace liq {
namespace geostat {

inline constexpr double kNeighborhoodRadiusM = 3000.0;
inline constexpr double kPredictionRadiusM = 1200.0;
inline constexpr double kBinWidthM = 150.0;

struct Station {
  geo::LonLat location;
  double residual = 0.0;
};

/// Stable semivariogram: gamma(h) = b + c0 * (1 - exp(-(h/r)^alpha)).
struct SemivariogramModel {
  double b = 0.0;      ///< nugget, variance units
  double c0 = 1.0;     ///< sill, variance units
  double r = 1000.0;   ///< effective range, meters
  double alpha = 1.0;  ///< shape, (0, 2]

  double gamma(double h) const {
    return b + c0 * (1.0 - std::exp(-std::pow(h / r, alpha)));
  }

  /// Spatial covariance used by the kriging system; the nugget is excluded,
  /// which is what makes b = 0 kriging an exact interpolator.
  double covariance(double h) const {
    return c0 * std::exp(-std::pow(h / r, alpha));
  }
};

struct ResidualField {
  std::vector<Station> stations;
  SemivariogramModel model;
  double neighborhood_radius_m = kNeighborhoodRadiusM;
  double prediction_radius_m = kPredictionRadiusM;
};

struct VariogramBin {
  double h = 0.0;  ///< bin center, meters
  double gamma = 0.0;
  std::size_t count = 0;
};

/// Classical binned estimator over station pairs no farther apart than
/// max_h: gamma_hat = (1/2N) * sum (z_i - z_j)^2. Empty bins are omitted.
inline std::vector<VariogramBin> empirical_semivariogram(
    const std::vector<Station>& stations, double bin_width = kBinWidthM,
    double max_h = kNeighborhoodRadiusM) {
  if (stations.size() < 2)
    throw TooFewStations("semivariogram needs at least 2 stations");
  if (!(bin_width > 0.0) || !(max_h > 0.0))
    throw NonFiniteInput("bin width and max separation must be > 0");
  auto nbins = static_cast<std::size_t>(std::ceil(max_h / bin_width));
  std::vector<double> sum(nbins, 0.0);
  std::vector<std::size_t> count(nbins, 0);
  for (std::size_t i = 0; i < stations.size(); ++i) {
    for (std::size_t j = i + 1; j < stations.size(); ++j) {
      double d =
          geo::local_distance_m(stations[i].location, stations[j].location);
      if (d > max_h) continue;
      auto bin = std::min(static_cast<std::size_t>(d / bin_width), nbins - 1);
      double dz = stations[i].residual - stations[j].residual;
      sum[bin] += dz * dz;
      ++count[bin];
    }
  }
  std::vector<VariogramBin> out;
  for (std::size_t b = 0; b < nbins; ++b) {
    if (count[b] == 0) continue;
    out.push_back({(static_cast<double>(b) + 0.5) * bin_width,
                   sum[b] / (2.0 * static_cast<double>(count[b])),
                   count[b]});
  }
  return out;
}

/// Weighted least squares fit of the stable model, weights = pair counts.
/// The nugget is pinned at zero by default; alpha is bounded to (0, 2] and
/// the range to (0, 2*max_h].
inline SemivariogramModel fit_stable(const std::vector<VariogramBin>& bins,
                                     bool fix_nugget_zero = true,
                                     double max_h = kNeighborhoodRadiusM) {
  if (bins.size() < 4) throw TooFewBins("stable fit needs >= 4 bins");
  double gmax = 0.0;
  for (const auto& b : bins) {
    if (!std::isfinite(b.gamma) || !std::isfinite(b.h))
      throw FitNonConvergence("non-finite semivariogram bin");
    gmax = std::max(gmax, b.gamma);
  }
  double c_hi = std::max(10.0 * gmax, 1e-6);

  std::size_t dim = fix_nugget_zero ? 3 : 4;
  auto objective = [&](const std::vector<double>& x) {
    SemivariogramModel m{fix_nugget_zero ? 0.0 : x[3], x[0], x[1], x[2]};
    double sse = 0.0;
    for (const auto& b : bins) {
      double d = m.gamma(b.h) - b.gamma;
      sse += static_cast<double>(b.count) * d * d;
    }
    return sse;
  };

  std::vector<double> lo{1e-12, 1e-6 * max_h, 1e-6};
  std::vector<double> hi{c_hi, 2.0 * max_h, 2.0};
  if (!fix_nugget_zero) {
    lo.push_back(0.0);
    hi.push_back(std::max(gmax, 1e-6));
  }

  detail::NelderMeadResult best;
  detail::NelderMeadOptions opt;
  opt.max_iter = 800;
  opt.f_tol = 1e-14;
  opt.x_tol = 1e-11;
  for (double c0 : {std::max(gmax, 1e-6), std::max(0.5 * gmax, 1e-6)}) {
    for (double r : {max_h / 10.0, max_h / 3.0, max_h}) {
      for (double alpha : {0.5, 1.0, 1.5}) {
        std::vector<double> x0{c0, r, alpha};
        if (!fix_nugget_zero) x0.push_back(0.0);
        auto res = detail::nelder_mead(objective, x0, lo, hi, opt);
        if (res.fx < best.fx) best = std::move(res);
      }
    }
  }
  detail::NelderMeadOptions polish = opt;
  polish.max_iter = 2000;
  polish.init_step = 1e-3;
  auto res = detail::nelder_mead(objective, best.x, lo, hi, polish);
  if (res.fx < best.fx) best = std::move(res);

  if (!std::isfinite(best.fx) || best.x.empty())
    throw FitNonConvergence("stable semivariogram fit failed");
  SemivariogramModel m;
  m.c0 = best.x[0];
  m.r = best.x[1];
  m.alpha = best.x[2];
  m.b = fix_nugget_zero ? 0.0 : best.x[3];
  return m;
}

struct KrigeResult {
  double residual = 0.0;
  double variance = 0.0;
};

namespace detail_geo {

/// Simple kriging (known mean 0) against an explicit station subset.
inline KrigeResult krige_subset(const ResidualField& field,
                                const std::vector<std::size_t>& subset,
                                const geo::LonLat& query) {
  const SemivariogramModel& m = field.model;
  if (subset.empty()) return {0.0, m.c0};
  std::size_t n = subset.size();
  std::vector<double> K(n * n);
  std::vector<double> k(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Station& si = field.stations[subset[i]];
    k[i] = m.covariance(geo::local_distance_m(si.location, query));
    K[i * n + i] = m.covariance(0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      double c = m.covariance(geo::local_distance_m(
          si.location, field.stations[subset[j]].location));
      K[i * n + j] = c;
      K[j * n + i] = c;
    }
  }
  std::vector<double> w = liq::detail::solve_spd(K, n, k, 1e-10 * m.c0);
  double res = 0.0, reduction = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    res += w[i] * field.stations[subset[i]].residual;
    reduction += w[i] * k[i];
  }
  return {res, std::clamp(m.c0 - reduction, 0.0, m.c0)};
}

inline bool plausible_lonlat(const geo::LonLat& p) {
  return std::isfinite(p.lon) && std::isfinite(p.lat) &&
         std::abs(p.lon) <= 360.0 && std::abs(p.lat) <= 90.0;
}

/// Uniform-grid bucket index over stations, bucket edge = query radius.
class StationIndex {
public:
  StationIndex(const std::vector<Station>& stations, double radius_m)
      : stations_(stations), radius_m_(radius_m) {
    double lat_ref = 0.0;
    for (const auto& s : stations) lat_ref += s.location.lat;
    if (!stations.empty()) lat_ref /= static_cast<double>(stations.size());
    double m_per_deg = geo::kDegToRad * geo::kEarthRadiusM;
    dlat_ = radius_m / m_per_deg;
    dlon_ = radius_m /
            (m_per_deg * std::max(std::cos(lat_ref * geo::kDegToRad), 0.01));
    for (std::size_t i = 0; i < stations.size(); ++i)
      buckets_[key(stations[i].location)].push_back(i);
  }

  void within(const geo::LonLat& q, std::vector<std::size_t>& out) const {
    out.clear();
    auto [c, r] = key(q);
    for (long long dr = -1; dr <= 1; ++dr) {
      for (long long dc = -1; dc <= 1; ++dc) {
        auto it = buckets_.find({c + dc, r + dr});
        if (it == buckets_.end()) continue;
        for (auto i : it->second) {
          if (geo::local_distance_m(stations_[i].location, q) <= radius_m_)
            out.push_back(i);
        }
      }
    }
  }

private:
  std::pair<long long, long long> key(const geo::LonLat& p) const {
    return {static_cast<long long>(std::floor(p.lon / dlon_)),
            static_cast<long long>(std::floor(p.lat / dlat_))};
  }

  const std::vector<Station>& stations_;
  double radius_m_;
  double dlat_ = 1.0, dlon_ = 1.0;
  std::map<std::pair<long long, long long>, std::vector<std::size_t>> buckets_;
};

}  // namespace detail_geo

/// Kriged residual and variance at one location, using stations within the
/// field's prediction radius. No station in range gives (0, c0).
inline KrigeResult krige_residual(const ResidualField& field,
                                  const geo::LonLat& query) {
  std::vector<std::size_t> subset;
  for (std::size_t i = 0; i < field.stations.size(); ++i) {
    if (geo::local_distance_m(field.stations[i].location, query) <=
        field.prediction_radius_m)
      subset.push_back(i);
  }
  return detail_geo::krige_subset(field, subset, query);
}

/// Four-class variance map value: fraction of the sill remaining.
inline int variance_class(double variance, double c0) {
  if (!(c0 > 0.0)) throw NonPositiveSill();
  double rho = std::clamp(variance / c0, 0.0, 1.0);
  if (rho < 0.05) return 0;
  if (rho < 0.5) return 1;
  if (rho < 0.95) return 2;
  return 3;
}

struct UpdateResult {
  raster::AbRaster updated;
  raster::AbRaster classes;
};

/// Regression-kriging update: every non-nodata cell within the prediction
/// radius of a station gets the kriged residual added (clamped and
/// re-quantized); every cell, nodata or not, gets a variance class.
inline UpdateResult update_raster(const raster::AbRaster& ab,
                                  const ResidualField& field, int jobs = 0) {
  if (!detail_geo::plausible_lonlat({ab.origin_lon, ab.origin_lat}))
    throw CrsMismatch("raster origin is not geographic lon/lat");
  for (const auto& s : field.stations)
    if (!detail_geo::plausible_lonlat(s.location))
      throw CrsMismatch("station coordinates are not geographic lon/lat");

  UpdateResult out{
      ab, raster::make_raster(ab.width, ab.height, ab.origin_lon,
                              ab.origin_lat, ab.cell_size,
                              raster::BandKind::Class, ab.mi_kind, 1.0f)};
  detail_geo::StationIndex index(field.stations, field.prediction_radius_m);
  liq::detail::parallel_for(
      ab.height,
      [&](std::size_t row_i) {
        auto row = static_cast<std::uint32_t>(row_i);
        std::vector<std::size_t> subset;
        for (std::uint32_t col = 0; col < ab.width; ++col) {
          geo::LonLat q = ab.coord_of(col, row);
          index.within(q, subset);
          KrigeResult kr = detail_geo::krige_subset(field, subset, q);
          if (!subset.empty() && !ab.is_nodata(col, row)) {
            out.updated.set(col, row, ab.at(col, row) + kr.residual);
          }
          out.classes.set(col, row, variance_class(kr.variance, field.model.c0));
        }
      },
      jobs);
  return out;
}

}  // namespace geostat
}  // namespace liq

#endif  // LIQ_GEOSTAT_HPP
