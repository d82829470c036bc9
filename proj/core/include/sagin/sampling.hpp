#pragma once

#include <vector>

#include "sagin/config.hpp"
#include "sagin/geometry.hpp"
#include "sagin/random.hpp"

namespace sagin {

/// One user drawn from the spherical PPP restricted to the coverage cap.
struct UserRealization {
    double polar_angle = 0.0;  // rad, in [0, theta_max]
    double azimuth = 0.0;      // rad, uniform; metrics never read it
    double distance = 0.0;     // m, slant range to the HAP
    double rf_fade_pow = 0.0;  // h_RF^2
};

/// Nearest satellite of the binomial process, with its FSO fade draw.
struct SatelliteRealization {
    double contact_angle = 0.0;    // rad
    double distance = 0.0;         // m
    bool visible = false;          // distance <= visibility limit
    double deviation_angle = 0.0;  // rad, beam misalignment
    double fso_fade = 0.0;         // h_FSO in [0, A0]
};

enum class SatSampleMethod {
    kContactAngle,  // direct inverse-CDF draw of the contact angle
    kFullBpp,       // N uniform points on the shell, take the nearest
};

/// Draw of squared shadowed-Rician fading: Gamma(shape m1, scale m2).
double sample_rf_fade(RandomStream& rng, double m1, double m2);

/// Poisson user count over the cap, inverse-CDF polar angles, fades.
std::vector<UserRealization> sample_users(RandomStream& rng, const NetworkConfig& cfg,
                                          const DerivedGeometry& geom);

struct FsoFadeDraw {
    double deviation_angle = 0.0;
    double fade = 0.0;
};

/// Rayleigh deviation angle, then the conditional fade A0 * U^(1/eta^2)
/// accepted with probability max(cos theta_d, 0). The rejected mass goes
/// to A0 or 0 depending on the configured deficit mode.
FsoFadeDraw sample_fso_fade(RandomStream& rng, const NetworkConfig& cfg,
                            FsoDeficitMode mode);

SatelliteRealization sample_nearest_satellite(RandomStream& rng, const NetworkConfig& cfg,
                                              SatSampleMethod method = SatSampleMethod::kContactAngle);

}  // namespace sagin
