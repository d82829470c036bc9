#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sagin/analytic.hpp"
#include "sagin/config.hpp"
#include "sagin/monte_carlo.hpp"

namespace sagin {

enum class TargetKind { kAbdrRatio, kBrep };

/// Outcome of a minimum-power search. `feasible == false` marks targets
/// that cannot be met below the power cap (or sit above the BREP
/// ceiling); infeasible results carry the reason instead of a power.
struct PowerPlanResult {
    TargetKind kind = TargetKind::kBrep;
    double target = 0.0;
    bool feasible = false;
    double power_w = 0.0;
    double power_dbw = 0.0;
    double achieved = 0.0;       // metric value at power_w
    int iterations = 0;
    double bracket_low_w = 0.0;
    double bracket_high_w = 0.0;
    std::string note;
};

/// Smallest HAP power with abdr(P) >= ratio * aadr. Bisection on log
/// power inside [-20, 60] dBW (high end expanded geometrically when
/// needed), to 1e-4 relative power.
PowerPlanResult min_power_for_abdr_ratio(const NetworkConfig& cfg, double ratio);

/// Smallest HAP power with brep(P) >= target, same bisection contract.
/// Targets at or above the deficit-and-blockage ceiling are infeasible.
PowerPlanResult min_power_for_brep(const NetworkConfig& cfg, double target);

struct SweepAxis {
    std::string name;  // sat_altitude | sat_count | hap_tx_power | user_density
    std::vector<double> values;
};

struct SweepRequest {
    enum class Kind { kAadr, kAbdr, kBrep, kPlanAbdrRatio, kPlanBrep };
    Kind kind = Kind::kAbdr;
    double target = 0.0;  // used by the plan kinds
};

struct SweepCell {
    bool feasible = false;
    double value = 0.0;  // metric value, or planned power in dBW
};

struct SweepGrid {
    SweepAxis axis1, axis2;
    std::vector<std::vector<SweepCell>> cells;  // [axis1 index][axis2 index]
};

/// Evaluates the request on the cartesian grid; cells are independent and
/// run in parallel. Per-cell infeasibility is recorded, never propagated.
SweepGrid sweep(const NetworkConfig& cfg, const SweepAxis& axis1, const SweepAxis& axis2,
                const SweepRequest& request);

/// Grid CSV: header row carries axis2 values, one row per axis1 value;
/// power cells in dBW with 2 decimals, infeasible cells marked.
void write_grid_csv(const SweepGrid& grid, const std::string& path);

struct MetricCheck {
    std::string name;
    double analytic = 0.0;
    double simulated = 0.0;
    double gap = 0.0;        // relative or absolute, per `relative`
    double tolerance = 0.0;
    bool relative = false;
    bool pass = false;
};

struct ValidationReport {
    double aadr_analytic = 0.0, abdr_analytic = 0.0, brep_analytic = 0.0;
    MetricsEstimate simulated;
    std::vector<MetricCheck> checks;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
    long rounds = 0;
    bool all_pass = false;
};

/// Side-by-side analytic vs Monte Carlo comparison at the acceptance
/// tolerances (AADR 1.5% linearized / 5% exact, ABDR 1%, BREP 0.03 abs).
ValidationReport validate(const NetworkConfig& cfg, long rounds, std::uint64_t seed);

/// Builds the report from precomputed halves. Throws std::invalid_argument
/// when the analytic and simulated config hashes disagree.
ValidationReport make_validation_report(const AnalyticMetrics& analytic,
                                        std::uint64_t analytic_config_hash,
                                        const MetricsEstimate& simulated);

std::string to_json(const ValidationReport& report);
ValidationReport validation_report_from_json(const std::string& text);

}  // namespace sagin
