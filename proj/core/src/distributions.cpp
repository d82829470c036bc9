#include "sagin/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sagin/special_functions.hpp"

namespace sagin {

double user_distance_pdf(double d, const NetworkConfig& cfg, const DerivedGeometry& geom) {
    if (d < cfg.hap_altitude || d > geom.d_max) return 0.0;
    const double norm =
        cfg.earth_radius * geom.hap_sphere_radius * (1.0 - std::cos(geom.theta_max));
    return d / norm;
}

double user_distance_cdf(double d, const NetworkConfig& cfg, const DerivedGeometry& geom) {
    const double h = cfg.hap_altitude;
    if (d <= h) return 0.0;
    if (d >= geom.d_max) return 1.0;
    return (d * d - h * h) / (geom.d_max * geom.d_max - h * h);
}

double contact_angle_cdf(double theta, int sat_count) {
    if (theta <= 0.0) return 0.0;
    if (theta >= std::numbers::pi) return 1.0;
    return 1.0 - std::pow((1.0 + std::cos(theta)) / 2.0, sat_count);
}

double contact_angle_pdf(double theta, int sat_count) {
    if (theta <= 0.0 || theta >= std::numbers::pi) return 0.0;
    return sat_count / 2.0 * std::sin(theta) *
           std::pow((1.0 + std::cos(theta)) / 2.0, sat_count - 1);
}

double nearest_sat_distance_pdf(double d, const NetworkConfig& cfg) {
    const double rh = cfg.hap_sphere_radius();
    const double rs = cfg.sat_shell_radius;
    const DerivedGeometry geom = derive_geometry(cfg);
    if (d < geom.fso_d_min || d > geom.fso_d_max) return 0.0;
    const double sum = rh + rs;
    const double base = (sum * sum - d * d) / (4.0 * rh * rs);
    return cfg.sat_count * d / (2.0 * rh * rs) * std::pow(base, cfg.sat_count - 1);
}

double nearest_sat_distance_cdf(double d, const NetworkConfig& cfg) {
    const double rh = cfg.hap_sphere_radius();
    const double rs = cfg.sat_shell_radius;
    const DerivedGeometry geom = derive_geometry(cfg);
    if (d <= geom.fso_d_min) return 0.0;
    d = std::min(d, geom.fso_d_max);
    const double sum = rh + rs;
    const double base = (sum * sum - d * d) / (4.0 * rh * rs);
    return 1.0 - std::pow(base, cfg.sat_count);
}

double blockage_probability(const NetworkConfig& cfg) {
    const double rh = cfg.hap_sphere_radius();
    const double rs = cfg.sat_shell_radius;
    const DerivedGeometry geom = derive_geometry(cfg);
    const double cos_vis =
        (rh * rh + rs * rs - geom.fso_d_max * geom.fso_d_max) / (2.0 * rh * rs);
    return std::pow((1.0 + cos_vis) / 2.0, cfg.sat_count);
}

double fso_deficit_mass(const NetworkConfig& cfg) {
    return 1.0 - cos_weighted_rayleigh_mass(cfg.deviation_std);
}

}  // namespace sagin
