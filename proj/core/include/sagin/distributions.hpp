#pragma once

#include "sagin/config.hpp"
#include "sagin/geometry.hpp"

namespace sagin {

/// Density of the user-to-HAP slant distance,
/// f(d) = d / (Re RH (1 - cos theta_max)) on [H, d_max], 0 outside.
double user_distance_pdf(double d, const NetworkConfig& cfg, const DerivedGeometry& geom);

/// CDF matching user_distance_pdf: (d^2 - H^2) / (d_max^2 - H^2) on support.
double user_distance_cdf(double d, const NetworkConfig& cfg, const DerivedGeometry& geom);

/// Contact angle of the nearest of N uniform points on a sphere:
/// CDF 1 - ((1 + cos t) / 2)^N.
double contact_angle_cdf(double theta, int sat_count);
double contact_angle_pdf(double theta, int sat_count);

/// Density of the HAP-to-nearest-satellite distance on the visibility
/// truncated support [Rs - RH, fso_d_max]; the missing mass beyond the
/// visibility limit is the blockage probability. Zero outside.
double nearest_sat_distance_pdf(double d, const NetworkConfig& cfg);

/// Sub-CDF of the same distribution (saturates at 1 - blockage at the
/// visibility limit).
double nearest_sat_distance_cdf(double d, const NetworkConfig& cfg);

/// Probability that every satellite sits beyond the visibility limit:
/// ((1 + cos theta_vis) / 2)^N.
double blockage_probability(const NetworkConfig& cfg);

/// Pointing-miss probability mass 1 - M(sigma0): the part of the fade
/// distribution that the conditional density does not cover.
double fso_deficit_mass(const NetworkConfig& cfg);

}  // namespace sagin
