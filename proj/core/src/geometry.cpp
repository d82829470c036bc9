#include "sagin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sagin {

double user_distance_at(double theta, const NetworkConfig& cfg) {
    const double re = cfg.earth_radius;
    const double rh = cfg.hap_sphere_radius();
    return std::sqrt(re * re + rh * rh - 2.0 * re * rh * std::cos(theta));
}

double sat_distance_at(double theta_c, const NetworkConfig& cfg) {
    const double rh = cfg.hap_sphere_radius();
    const double rs = cfg.sat_shell_radius;
    return std::sqrt(rh * rh + rs * rs - 2.0 * rh * rs * std::cos(theta_c));
}

double theta_from_user_distance(double d, const NetworkConfig& cfg) {
    const double re = cfg.earth_radius;
    const double rh = cfg.hap_sphere_radius();
    const double c = (re * re + rh * rh - d * d) / (2.0 * re * rh);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

DerivedGeometry derive_geometry(const NetworkConfig& cfg) {
    cfg.validate();
    DerivedGeometry g;
    g.hap_sphere_radius = cfg.hap_sphere_radius();
    g.theta_max = cfg.hap_coverage_radius / cfg.earth_radius;
    g.d_max = user_distance_at(g.theta_max, cfg);
    g.fso_d_min = cfg.sat_shell_radius - g.hap_sphere_radius;
    const double rh2 = g.hap_sphere_radius * g.hap_sphere_radius;
    const double rs2 = cfg.sat_shell_radius * cfg.sat_shell_radius;
    const double re2 = cfg.earth_radius * cfg.earth_radius;
    g.fso_d_max = std::sqrt(rh2 - re2) + std::sqrt(rs2 - re2);
    g.cap_area = 2.0 * std::numbers::pi * re2 * (1.0 - std::cos(g.theta_max));
    g.mean_user_count = cfg.user_density * g.cap_area;
    return g;
}

}  // namespace sagin
