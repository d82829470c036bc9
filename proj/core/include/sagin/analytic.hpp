#pragma once

#include "sagin/config.hpp"
#include "sagin/geometry.hpp"
#include "sagin/special_functions.hpp"

namespace sagin {

/// Everything z-independent that the conditional SINR-ratio variable Z
/// needs at one user polar angle: Z = h^2 * a(d) / (noise + I), and the
/// tail sum evaluates at mu(z) = z * mu_coeff.
struct ZContext {
    double polar_angle = 0.0;
    double distance = 0.0;
    double beta = 0.0;      // (m1!)^(-1/m1)
    double mu_coeff = 0.0;  // d^alpha / (m2 * rf_amp), units 1/W
};

ZContext make_z_context(double theta, const NetworkConfig& cfg);

/// Laplace transform of the aggregate received RF power at the HAP,
/// L(s) = exp(-2 pi Lam Re^2 Integral[1 - (1 + s m2 a(theta))^-m1] sin).
/// Exact for the Gamma fading model; adaptive quadrature keeps the
/// exponent to 1e-10 absolute.
double laplace_interference(double s, const NetworkConfig& cfg);

/// CCDF of Z under the exponential-sum bound of the Gamma tail:
/// sum_k C(m1,k) (-1)^(k+1) exp(-k beta mu sigma^2) L(k beta mu),
/// clamped to [0, 1].
double ccdf_Z(double z, const ZContext& ctx, const NetworkConfig& cfg);

/// E[exp(c Z)] through the CCDF identity 1 + c Integral_0^1 e^(cz) F̄(z) dz.
double mgf_Z(double c, const ZContext& ctx, const NetworkConfig& cfg);

/// Average access data rate (bit/s): linearized-rate expectation over the
/// user process, (2 pi Lam Re^2 B_RF / ln 2) Int sin(theta) Int F̄_Z.
double aadr(const NetworkConfig& cfg);

/// Marginal FSO fade density / CDF on [0, A0] (continuous part; the
/// pointing-miss deficit lives at the cap or at zero per config).
double fso_fade_pdf(double h, const NetworkConfig& cfg);
double fso_fade_cdf(double h, const NetworkConfig& cfg);

/// Truncated moment E[d_s^p * 1{visible}] of the nearest-satellite
/// distance; p = 0 recovers 1 - blockage probability.
double ds_moment(double p, const NetworkConfig& cfg);

/// Average backhaul data rate (bit/s): double quadrature of
/// B_FSO/ln2 * ln(1 + SNR(h, t)) against the fade and distance densities.
double abdr(const NetworkConfig& cfg);

/// Backhaul rate exceedance probability and its reusable decomposition.
/// The transmit power enters only through the factor P^(-eta^2/2), so a
/// curve built once serves any number of power evaluations (power
/// planning bisects on it).
class BrepCurve {
public:
    explicit BrepCurve(const NetworkConfig& cfg);

    /// BREP at HAP transmit power `power_w`, clamped to [0, 1].
    double at_power(double power_w) const;

    /// Unclamped value; negative near the low-power foot of the curve
    /// where the series expansion leaves the survivor's domain.
    double at_power_raw(double power_w) const;

    /// Largest target the solver treats as reachable: 1 minus the
    /// pointing-miss deficit and the blockage mass.
    double feasibility_ceiling() const;

    const SeriesResult& series() const { return series_; }

private:
    double power_free_factor_ = 0.0;  // multiplies P^(-eta^2/2)
    double half_eta_sq_ = 0.0;
    double ceiling_ = 1.0;
    SeriesResult series_;
};

double brep(const NetworkConfig& cfg);

/// Quadrature/series health counters carried alongside the metric values.
struct AnalyticDiagnostics {
    int brep_series_terms = 0;
    double brep_series_truncation = 0.0;
    double clamped_brep_overshoot = 0.0;  // how far the raw value left [0,1]
};

struct AnalyticMetrics {
    double aadr = 0.0;           // bit/s
    double abdr = 0.0;           // bit/s
    double brep = 0.0;           // probability
    double blockage_prob = 0.0;  // probability
    AnalyticDiagnostics diagnostics;
};

AnalyticMetrics analytic_metrics(const NetworkConfig& cfg);

}  // namespace sagin
