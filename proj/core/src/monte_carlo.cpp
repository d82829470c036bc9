#include "sagin/monte_carlo.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sagin/sampling.hpp"

namespace sagin {

RoundOutcome run_round(RandomStream& stream, const NetworkConfig& cfg,
                       const DerivedGeometry& geom) {
    RoundOutcome out;

    const auto users = sample_users(stream, cfg, geom);
    out.user_count = static_cast<long>(users.size());

    std::vector<double> rx(users.size());
    const double amp = cfg.rf_amp();
    double total = 0.0;
    for (std::size_t i = 0; i < users.size(); ++i) {
        rx[i] = amp * std::pow(users[i].distance, -cfg.path_loss_exp) * users[i].rf_fade_pow;
        total += rx[i];
    }
    out.interference = total;

    double sum_log = 0.0, sum_lin = 0.0;
    for (double rho : rx) {
        const double sinr = rho / (cfg.hap_noise + total - rho);
        sum_log += std::log2(1.0 + sinr);
        sum_lin += sinr;
    }
    out.access_rate_exact = cfg.rf_bandwidth * sum_log;
    out.access_rate_linear = cfg.rf_bandwidth / std::numbers::ln2 * sum_lin;

    const SatelliteRealization sat = sample_nearest_satellite(stream, cfg);
    out.blocked = !sat.visible;
    if (sat.visible) {
        const double snr = cfg.fso_snr(sat.fso_fade, sat.distance);
        out.backhaul_rate = cfg.fso_bandwidth * std::log2(1.0 + snr);
    }
    out.exceeded = out.backhaul_rate > out.access_rate_exact;
    return out;
}

std::vector<RoundOutcome> run_rounds(const NetworkConfig& cfg, long rounds,
                                     std::uint64_t master_seed, int workers) {
    cfg.validate();
    const DerivedGeometry geom = derive_geometry(cfg);
    std::vector<RoundOutcome> outcomes(rounds);

    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }
    workers = static_cast<int>(std::min<long>(workers, std::max<long>(rounds, 1)));

    auto worker = [&](int w) {
        for (long r = w; r < rounds; r += workers) {
            RandomStream stream = RandomStream::for_round(master_seed, static_cast<std::uint64_t>(r));
            outcomes[static_cast<std::size_t>(r)] = run_round(stream, cfg, geom);
        }
    };
    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    return outcomes;
}

namespace {

struct MeanVar {
    double mean = 0.0;
    double half = 0.0;  // 1.96 * stderr
};

template <class Get>
MeanVar mean_ci(std::span<const RoundOutcome> outcomes, Get&& get) {
    const double n = static_cast<double>(outcomes.size());
    double mean = 0.0;
    for (const auto& o : outcomes) mean += get(o);
    mean /= n;
    double ss = 0.0;
    for (const auto& o : outcomes) {
        const double d = get(o) - mean;
        ss += d * d;
    }
    const double var = outcomes.size() > 1 ? ss / (n - 1.0) : 0.0;
    return {mean, 1.96 * std::sqrt(var / n)};
}

}  // namespace

MetricsEstimate summarize(std::span<const RoundOutcome> outcomes,
                          const NetworkConfig& cfg, std::uint64_t master_seed) {
    MetricsEstimate est;
    est.rounds = static_cast<long>(outcomes.size());
    est.seed = master_seed;
    est.config_hash = cfg.hash();
    if (outcomes.empty()) return est;

    const auto exact = mean_ci(outcomes, [](const RoundOutcome& o) { return o.access_rate_exact; });
    const auto linear = mean_ci(outcomes, [](const RoundOutcome& o) { return o.access_rate_linear; });
    const auto backhaul = mean_ci(outcomes, [](const RoundOutcome& o) { return o.backhaul_rate; });
    const auto exceeded = mean_ci(outcomes, [](const RoundOutcome& o) { return o.exceeded ? 1.0 : 0.0; });
    est.aadr_exact_mean = exact.mean;
    est.aadr_exact_half = exact.half;
    est.aadr_linear_mean = linear.mean;
    est.aadr_linear_half = linear.half;
    est.abdr_mean = backhaul.mean;
    est.abdr_half = backhaul.half;
    est.brep_hat = exceeded.mean;
    est.brep_half = exceeded.half;
    double blocked = 0.0;
    for (const auto& o : outcomes) blocked += o.blocked ? 1.0 : 0.0;
    est.blockage_freq = blocked / static_cast<double>(outcomes.size());
    return est;
}

MetricsEstimate estimate_metrics(const NetworkConfig& cfg, long rounds,
                                 std::uint64_t master_seed, int workers) {
    if (rounds < 1) throw std::invalid_argument("estimate_metrics: rounds must be >= 1");
    const auto outcomes = run_rounds(cfg, rounds, master_seed, workers);
    return summarize(outcomes, cfg, master_seed);
}

void export_trace(std::span<const RoundOutcome> outcomes, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("export_trace: cannot open '" + path + "'");
    f << "round_index,user_count,interference_w,access_rate_bps_exact,"
         "access_rate_bps_linear,backhaul_rate_bps,blocked,exceeded\n";
    f.precision(17);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        f << i << ',' << o.user_count << ',' << o.interference << ','
          << o.access_rate_exact << ',' << o.access_rate_linear << ','
          << o.backhaul_rate << ',' << (o.blocked ? 1 : 0) << ','
          << (o.exceeded ? 1 : 0) << '\n';
    }
    if (!f) throw std::runtime_error("export_trace: write failed for '" + path + "'");
}

std::vector<RoundOutcome> load_trace(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("load_trace: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("load_trace: empty file");
    std::vector<RoundOutcome> outcomes;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        RoundOutcome o;
        auto next = [&]() {
            if (!std::getline(row, field, ',')) {
                throw std::runtime_error("load_trace: short row '" + line + "'");
            }
            return field;
        };
        next();  // round index
        o.user_count = std::stol(next());
        o.interference = std::stod(next());
        o.access_rate_exact = std::stod(next());
        o.access_rate_linear = std::stod(next());
        o.backhaul_rate = std::stod(next());
        o.blocked = std::stoi(next()) != 0;
        o.exceeded = std::stoi(next()) != 0;
        outcomes.push_back(o);
    }
    return outcomes;
}

}  // namespace sagin
