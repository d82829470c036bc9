#pragma once

#include "sagin/config.hpp"

namespace sagin {

/// Spherical-cap geometry derived from a NetworkConfig. Angles in radians,
/// distances in meters. Immutable once computed.
struct DerivedGeometry {
    double hap_sphere_radius = 0.0;  // R_H = R_earth + H
    double theta_max = 0.0;          // cap half-angle seen from Earth center
    double d_max = 0.0;              // slant range to the cap edge
    double fso_d_min = 0.0;          // R_s - R_H
    double fso_d_max = 0.0;          // visibility limit of the HAP-satellite link
    double cap_area = 0.0;           // m^2 of the ground coverage cap
    double mean_user_count = 0.0;    // user_density * cap_area
};

/// theta_max = coverage_radius / R_earth (geodesic cap), then the slant
/// range d_max and the Earth-tangent visibility limit by the cosine rule.
DerivedGeometry derive_geometry(const NetworkConfig& cfg);

/// Slant range between a ground point at polar angle theta and the HAP at
/// (R_H, 0, 0): d^2 = Re^2 + RH^2 - 2 Re RH cos(theta).
double user_distance_at(double theta, const NetworkConfig& cfg);

/// HAP-satellite distance at contact angle theta_c:
/// d^2 = RH^2 + Rs^2 - 2 RH Rs cos(theta_c).
double sat_distance_at(double theta_c, const NetworkConfig& cfg);

/// Inverse of user_distance_at on [0, pi].
double theta_from_user_distance(double d, const NetworkConfig& cfg);

}  // namespace sagin
