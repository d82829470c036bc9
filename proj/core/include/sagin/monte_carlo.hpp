#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sagin/config.hpp"
#include "sagin/geometry.hpp"
#include "sagin/random.hpp"

namespace sagin {

/// One topology-plus-fading snapshot. Rates in bit/s, interference in W.
struct RoundOutcome {
    long user_count = 0;
    double interference = 0.0;
    double access_rate_exact = 0.0;   // B_RF * sum log2(1 + gamma_i)
    double access_rate_linear = 0.0;  // (B_RF / ln 2) * sum gamma_i
    double backhaul_rate = 0.0;       // 0 when blocked
    bool blocked = false;
    bool exceeded = false;            // backhaul > exact access sum (strict)
};

/// Sample means with 95% normal-approximation half-widths.
struct MetricsEstimate {
    double aadr_exact_mean = 0.0;
    double aadr_exact_half = 0.0;
    double aadr_linear_mean = 0.0;
    double aadr_linear_half = 0.0;
    double abdr_mean = 0.0;
    double abdr_half = 0.0;
    double brep_hat = 0.0;
    double brep_half = 0.0;
    double blockage_freq = 0.0;
    long rounds = 0;
    std::uint64_t seed = 0;
    std::uint64_t config_hash = 0;
};

/// Generates one round: PPP users with fades, nearest BPP satellite with
/// its FSO fade, per-user SINRs, both access-rate variants, backhaul rate
/// (zero when the satellite is below the horizon), and the exceedance
/// indicator.
RoundOutcome run_round(RandomStream& stream, const NetworkConfig& cfg,
                       const DerivedGeometry& geom);

/// Runs `rounds` independent rounds on `workers` threads (0 = hardware
/// concurrency). Each round draws its own substream from the master seed,
/// and the reduction is done in round order, so the result is bit-identical
/// for any worker count.
MetricsEstimate estimate_metrics(const NetworkConfig& cfg, long rounds,
                                 std::uint64_t master_seed, int workers = 0);

/// Round outcomes in round order; the building block behind
/// estimate_metrics and trace export.
std::vector<RoundOutcome> run_rounds(const NetworkConfig& cfg, long rounds,
                                     std::uint64_t master_seed, int workers = 0);

MetricsEstimate summarize(std::span<const RoundOutcome> outcomes,
                          const NetworkConfig& cfg, std::uint64_t master_seed);

/// CSV trace, one row per round:
/// round_index,user_count,interference_w,access_rate_bps_exact,
/// access_rate_bps_linear,backhaul_rate_bps,blocked,exceeded
void export_trace(std::span<const RoundOutcome> outcomes, const std::string& path);

/// Reads a trace written by export_trace.
std::vector<RoundOutcome> load_trace(const std::string& path);

}  // namespace sagin
