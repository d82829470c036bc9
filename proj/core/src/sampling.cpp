#include "sagin/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sagin {

double sample_rf_fade(RandomStream& rng, double m1, double m2) {
    return rng.gamma(m1, m2);
}

std::vector<UserRealization> sample_users(RandomStream& rng, const NetworkConfig& cfg,
                                          const DerivedGeometry& geom) {
    const long count = rng.poisson(geom.mean_user_count);
    std::vector<UserRealization> users(count);
    const double one_minus_cos = 1.0 - std::cos(geom.theta_max);
    const double re = cfg.earth_radius;
    const double rh = geom.hap_sphere_radius;
    for (auto& u : users) {
        const double cos_theta = 1.0 - rng.uniform() * one_minus_cos;
        u.polar_angle = std::acos(std::clamp(cos_theta, -1.0, 1.0));
        u.azimuth = 2.0 * std::numbers::pi * rng.uniform();
        u.distance = std::sqrt(re * re + rh * rh - 2.0 * re * rh * cos_theta);
        u.rf_fade_pow = sample_rf_fade(rng, cfg.rician_shape, cfg.rician_scale);
    }
    return users;
}

FsoFadeDraw sample_fso_fade(RandomStream& rng, const NetworkConfig& cfg,
                            FsoDeficitMode mode) {
    FsoFadeDraw draw;
    draw.deviation_angle = rng.rayleigh(cfg.deviation_std);
    // cos clamped at zero: beyond pi/2 the beam cannot hit at all.
    const double accept = std::max(std::cos(draw.deviation_angle), 0.0);
    if (rng.uniform() < accept) {
        const double e2 = cfg.pointing_shape * cfg.pointing_shape;
        draw.fade = cfg.pointing_cap * std::pow(rng.uniform_pos(), 1.0 / e2);
    } else {
        draw.fade = (mode == FsoDeficitMode::kDeficitAtCap) ? cfg.pointing_cap : 0.0;
    }
    return draw;
}

SatelliteRealization sample_nearest_satellite(RandomStream& rng, const NetworkConfig& cfg,
                                              SatSampleMethod method) {
    const DerivedGeometry geom = derive_geometry(cfg);
    SatelliteRealization sat;

    double cos_tc;
    if (method == SatSampleMethod::kContactAngle) {
        // P(cos theta_c <= c) = ((1+c)/2)^N  =>  cos theta_c = 2 U^(1/N) - 1
        cos_tc = 2.0 * std::pow(rng.uniform_pos(), 1.0 / cfg.sat_count) - 1.0;
    } else {
        cos_tc = -1.0;
        for (int i = 0; i < cfg.sat_count; ++i) {
            const double c = 2.0 * rng.uniform() - 1.0;  // uniform on the shell
            cos_tc = std::max(cos_tc, c);
        }
    }
    sat.contact_angle = std::acos(std::clamp(cos_tc, -1.0, 1.0));
    const double rh = geom.hap_sphere_radius;
    const double rs = cfg.sat_shell_radius;
    sat.distance = std::sqrt(rh * rh + rs * rs - 2.0 * rh * rs * cos_tc);
    sat.visible = sat.distance <= geom.fso_d_max;

    const FsoFadeDraw fade = sample_fso_fade(rng, cfg, cfg.fso_deficit_mode);
    sat.deviation_angle = fade.deviation_angle;
    sat.fso_fade = fade.fade;
    return sat;
}

}  // namespace sagin
