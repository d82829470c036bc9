#include "sagin/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

namespace sagin {

namespace {

constexpr double kSpeedOfLight = 299792458.0;  // m/s

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse value '" + value + "'");
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double dbw_to_watt(double dbw) { return std::pow(10.0, dbw / 10.0); }
double watt_to_dbw(double watt) { return 10.0 * std::log10(watt); }

double NetworkConfig::rf_wavelength() const { return kSpeedOfLight / rf_frequency; }

double NetworkConfig::rf_amp() const {
    const double x = rf_wavelength() / (4.0 * std::numbers::pi);
    return user_tx_power * user_gain * hap_rx_gain * x * x;
}

double NetworkConfig::fso_snr_gain() const { return db_to_linear(fso_snr_cal_db); }

double NetworkConfig::fso_snr(double h, double d_s) const {
    const double amp = fso_wavelength * h / (4.0 * std::numbers::pi * d_s);
    return oe_coeff * oe_coeff * hap_tx_power * hap_tx_gain * sat_gain * amp * amp /
           sat_noise * fso_snr_gain();
}

void NetworkConfig::validate() const {
    require(earth_radius > 0, "earth_radius_km must be positive");
    require(hap_altitude > 0, "hap_altitude_km must be positive");
    require(sat_shell_radius > earth_radius + hap_altitude,
            "sat_shell_radius_km must exceed earth_radius_km + hap_altitude_km");
    require(hap_coverage_radius >= 0, "hap_coverage_radius_km must be non-negative");
    require(user_density >= 0, "user_density_per_m2 must be non-negative");
    require(sat_count >= 1, "sat_count must be at least 1");
    require(user_tx_power > 0, "user_tx_power_w must be positive");
    require(user_gain > 0, "user_gain_dbi: linear gain must be positive");
    require(hap_rx_gain > 0, "hap_rx_gain_dbi: linear gain must be positive");
    require(hap_tx_power > 0, "hap_tx_power_dbw: power must be positive");
    require(hap_tx_gain > 0, "hap_tx_gain_dbi: linear gain must be positive");
    require(sat_gain > 0, "sat_gain_dbi: linear gain must be positive");
    require(rf_frequency > 0, "rf_frequency_ghz must be positive");
    require(fso_wavelength > 0, "fso_wavelength_nm must be positive");
    require(path_loss_exp > 0, "path_loss_exponent must be positive");
    require(rician_shape >= 1, "rician_shape_m1 must be an integer >= 1");
    require(rician_scale > 0, "rician_scale_m2 must be positive");
    require(pointing_shape > 0, "pointing_shape_eta must be positive");
    require(pointing_cap > 0, "pointing_cap_a0 must be positive");
    require(deviation_std > 0, "beam_deviation_std_mrad must be positive");
    require(oe_coeff > 0, "oe_conversion must be positive");
    require(hap_noise > 0, "hap_noise_w must be positive");
    require(sat_noise > 0, "sat_noise_w must be positive");
    require(rf_bandwidth > 0, "rf_bandwidth_ghz must be positive");
    require(fso_bandwidth > 0, "fso_bandwidth_ghz must be positive");
}

std::uint64_t NetworkConfig::hash() const {
    std::ostringstream os;
    os.precision(17);
    os << earth_radius << '|' << sat_shell_radius << '|' << hap_altitude << '|'
       << hap_coverage_radius << '|' << user_density << '|' << sat_count << '|'
       << user_tx_power << '|' << user_gain << '|' << hap_rx_gain << '|'
       << hap_tx_power << '|' << hap_tx_gain << '|' << sat_gain << '|'
       << rf_frequency << '|' << fso_wavelength << '|' << path_loss_exp << '|'
       << rician_shape << '|' << rician_scale << '|' << pointing_shape << '|'
       << pointing_cap << '|' << deviation_std << '|' << oe_coeff << '|'
       << hap_noise << '|' << sat_noise << '|' << rf_bandwidth << '|'
       << fso_bandwidth << '|' << fso_snr_cal_db << '|'
       << (fso_deficit_mode == FsoDeficitMode::kDeficitAtCap ? "cap" : "zero");
    const std::string s = os.str();
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

NetworkConfig parse_config(const std::string& text) {
    NetworkConfig cfg;
    bool have_power_dbw = false, have_power_w = false;
    bool have_shell = false, have_altitude = false;
    double sat_altitude_km = 0.0;

    using Setter = std::function<void(NetworkConfig&, double)>;
    static const std::map<std::string, Setter> setters = {
        {"earth_radius_km", [](NetworkConfig& c, double v) { c.earth_radius = v * 1e3; }},
        {"sat_shell_radius_km", [](NetworkConfig& c, double v) { c.sat_shell_radius = v * 1e3; }},
        {"hap_altitude_km", [](NetworkConfig& c, double v) { c.hap_altitude = v * 1e3; }},
        {"hap_coverage_radius_km", [](NetworkConfig& c, double v) { c.hap_coverage_radius = v * 1e3; }},
        {"user_density_per_m2", [](NetworkConfig& c, double v) { c.user_density = v; }},
        {"user_tx_power_w", [](NetworkConfig& c, double v) { c.user_tx_power = v; }},
        {"user_gain_dbi", [](NetworkConfig& c, double v) { c.user_gain = db_to_linear(v); }},
        {"hap_rx_gain_dbi", [](NetworkConfig& c, double v) { c.hap_rx_gain = db_to_linear(v); }},
        {"hap_tx_gain_dbi", [](NetworkConfig& c, double v) { c.hap_tx_gain = db_to_linear(v); }},
        {"sat_gain_dbi", [](NetworkConfig& c, double v) { c.sat_gain = db_to_linear(v); }},
        {"rf_frequency_ghz", [](NetworkConfig& c, double v) { c.rf_frequency = v * 1e9; }},
        {"fso_wavelength_nm", [](NetworkConfig& c, double v) { c.fso_wavelength = v * 1e-9; }},
        {"path_loss_exponent", [](NetworkConfig& c, double v) { c.path_loss_exp = v; }},
        {"rician_scale_m2", [](NetworkConfig& c, double v) { c.rician_scale = v; }},
        {"pointing_shape_eta", [](NetworkConfig& c, double v) { c.pointing_shape = v; }},
        {"pointing_cap_a0", [](NetworkConfig& c, double v) { c.pointing_cap = v; }},
        {"beam_deviation_std_mrad", [](NetworkConfig& c, double v) { c.deviation_std = v * 1e-3; }},
        {"oe_conversion", [](NetworkConfig& c, double v) { c.oe_coeff = v; }},
        {"hap_noise_w", [](NetworkConfig& c, double v) { c.hap_noise = v; }},
        {"sat_noise_w", [](NetworkConfig& c, double v) { c.sat_noise = v; }},
        {"rf_bandwidth_ghz", [](NetworkConfig& c, double v) { c.rf_bandwidth = v * 1e9; }},
        {"fso_bandwidth_ghz", [](NetworkConfig& c, double v) { c.fso_bandwidth = v * 1e9; }},
        {"fso_snr_cal_db", [](NetworkConfig& c, double v) { c.fso_snr_cal_db = v; }},
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.erase(hash_pos);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (auto it = setters.find(key); it != setters.end()) {
            it->second(cfg, parse_number(key, value));
        } else if (key == "sat_count") {
            const double v = parse_number(key, value);
            if (v != std::floor(v)) throw ConfigError("sat_count must be an integer");
            cfg.sat_count = static_cast<int>(v);
        } else if (key == "rician_shape_m1") {
            const double v = parse_number(key, value);
            if (v != std::floor(v)) throw ConfigError("rician_shape_m1 must be an integer");
            cfg.rician_shape = static_cast<int>(v);
        } else if (key == "hap_tx_power_dbw") {
            cfg.hap_tx_power = dbw_to_watt(parse_number(key, value));
            have_power_dbw = true;
        } else if (key == "hap_tx_power_w") {
            cfg.hap_tx_power = parse_number(key, value);
            have_power_w = true;
        } else if (key == "sat_altitude_km") {
            sat_altitude_km = parse_number(key, value);
            have_altitude = true;
        } else if (key == "fso_deficit_mode") {
            if (value == "cap") {
                cfg.fso_deficit_mode = FsoDeficitMode::kDeficitAtCap;
            } else if (value == "zero") {
                cfg.fso_deficit_mode = FsoDeficitMode::kDeficitAtZero;
            } else {
                throw ConfigError("fso_deficit_mode must be 'cap' or 'zero'");
            }
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
        if (key == "sat_shell_radius_km") have_shell = true;
    }

    if (have_power_dbw && have_power_w) {
        throw ConfigError("give either hap_tx_power_dbw or hap_tx_power_w, not both");
    }
    if (have_shell && have_altitude) {
        throw ConfigError("give either sat_shell_radius_km or sat_altitude_km, not both");
    }
    if (have_altitude) {
        cfg.sat_shell_radius = cfg.earth_radius + sat_altitude_km * 1e3;
    }
    cfg.validate();
    return cfg;
}

NetworkConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config(buf.str());
}

}  // namespace sagin
