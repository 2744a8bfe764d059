#ifndef LIQ_GEO_HPP
#define LIQ_GEO_HPP

#include <cmath>

namespace liq {
namespace geo {

inline constexpr double kEarthRadiusM = 6371000.0;
inline constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

struct LonLat {
  double lon = 0.0;
  double lat = 0.0;
};

/// Great-circle distance in meters (haversine).
inline double great_circle_m(const LonLat& a, const LonLat& b) {
  double phi1 = a.lat * kDegToRad;
  double phi2 = b.lat * kDegToRad;
  double dphi = (b.lat - a.lat) * kDegToRad;
  double dlam = (b.lon - a.lon) * kDegToRad;
  double s = std::sin(dphi / 2.0);
  double t = std::sin(dlam / 2.0);
  double h = s * s + std::cos(phi1) * std::cos(phi2) * t * t;
  if (h > 1.0) h = 1.0;
  return 2.0 * kEarthRadiusM * std::asin(std::sqrt(h));
}

/// Equirectangular approximation, adequate below a few km of separation.
inline double local_distance_m(const LonLat& a, const LonLat& b) {
  double midlat = 0.5 * (a.lat + b.lat) * kDegToRad;
  double dx = (b.lon - a.lon) * kDegToRad * std::cos(midlat) * kEarthRadiusM;
  double dy = (b.lat - a.lat) * kDegToRad * kEarthRadiusM;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace geo
}  // namespace liq

#endif  // LIQ_GEO_HPP
