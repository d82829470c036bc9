#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace sagin {

/// Raised on missing keys, unparseable values, or invariant violations.
/// The offending key is part of the message.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FsoDeficitMode {
    kDeficitAtCap,   // pointing-miss probability mass concentrated at h = A0
    kDeficitAtZero,  // pointing miss drops the link (h = 0)
};

/// Physical and network parameters of the relay scenario. All quantities
/// are stored in SI units with antenna gains linear; dB/dBi/dBW and
/// km/GHz/nm conversions happen only at the config-file boundary.
struct NetworkConfig {
    double earth_radius = 6371e3;         // m
    double sat_shell_radius = 6871e3;     // m, Earth center to satellite shell
    double hap_altitude = 20e3;           // m
    double hap_coverage_radius = 80e3;    // m, geodesic ground radius
    double user_density = 1e-5;           // users per m^2 of ground cap
    int sat_count = 300;
    double user_tx_power = 20.0;          // W
    double user_gain = 6.309573444801932;        // 8 dBi
    double hap_rx_gain = 1584.893192461114;      // 32 dBi
    double hap_tx_power = 0.1;            // W (-10 dBW); planning commands sweep this
    double hap_tx_gain = 158489.3192461114;      // 52 dBi
    double sat_gain = 15848.93192461114;         // 42 dBi
    double rf_frequency = 2e9;            // Hz
    double fso_wavelength = 1550e-9;      // m
    double path_loss_exp = 2.0;
    int rician_shape = 2;                 // m1, integer >= 1
    double rician_scale = 0.5;            // m2
    double pointing_shape = 1.00526;      // eta_s
    double pointing_cap = 0.01979;        // A0
    double deviation_std = 0.015;         // rad, Rayleigh scale of the beam deviation
    double oe_coeff = 0.5;                // optical-to-electrical conversion
    double hap_noise = 2e-14;             // W
    double sat_noise = 1.5e-12;           // W
    double rf_bandwidth = 1e9;            // Hz
    double fso_bandwidth = 100e9;         // Hz
    // Calibration offset applied to the FSO electrical SNR, in dB. The
    // default matches the planner to the reference constellation link
    // budget (see README); set to 0 for a strict SI evaluation.
    double fso_snr_cal_db = 62.0;
    FsoDeficitMode fso_deficit_mode = FsoDeficitMode::kDeficitAtCap;

    double hap_sphere_radius() const { return earth_radius + hap_altitude; }
    double rf_wavelength() const;
    /// P_u G_u G_H^r (lambda_RF / 4 pi)^2 — received RF power is
    /// rf_amp * d^-alpha * h^2.
    double rf_amp() const;
    /// Linear SNR calibration factor 10^(fso_snr_cal_db / 10).
    double fso_snr_gain() const;
    /// FSO electrical SNR for fade h at link distance d_s (meters).
    double fso_snr(double h, double d_s) const;

    /// Throws ConfigError naming the violated invariant.
    void validate() const;

    /// FNV-1a hash over the canonical parameter serialization; used to
    /// guard against comparing analytic and simulated results produced
    /// from different configs.
    std::uint64_t hash() const;
};

/// Parses a flat `key = value` document ('#' starts a comment). Unknown
/// keys are errors; absent keys keep their defaults. The accepted keys
/// and units are listed in docs/config-reference (README).
NetworkConfig parse_config(const std::string& text);

/// parse_config over the contents of `path`.
NetworkConfig load_config(const std::string& path);

double db_to_linear(double db);
double linear_to_db(double linear);
double dbw_to_watt(double dbw);
double watt_to_dbw(double watt);

}  // namespace sagin
