#pragma once

#include <algorithm>
#include <cmath>

namespace fairslot {

inline constexpr double kEarthRadiusMeters = 6371008.8;

// Great-circle distance on a WGS-84 mean-radius sphere, in meters.
inline double haversine_m(double lat1, double lon1, double lat2, double lon2) {
  constexpr double deg = 0.017453292519943295;  // pi / 180
  double phi1 = lat1 * deg;
  double phi2 = lat2 * deg;
  double dphi = (lat2 - lat1) * deg;
  double dlam = (lon2 - lon1) * deg;
  double sp = std::sin(dphi / 2.0);
  double sl = std::sin(dlam / 2.0);
  double a = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
  a = std::clamp(a, 0.0, 1.0);
  return 2.0 * kEarthRadiusMeters * std::asin(std::sqrt(a));
}

}  // namespace fairslot
