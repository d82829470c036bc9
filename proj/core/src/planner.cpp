#include "sagin/planner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "sagin/distributions.hpp"

namespace sagin {

namespace {

constexpr double kBracketLowDbw = -20.0;
constexpr double kBracketHighDbw = 60.0;
constexpr double kHardCapDbw = 100.0;
constexpr double kRelPowerTol = 1e-4;

/// Monotone bisection on log power. `metric(P)` must be nondecreasing.
PowerPlanResult solve_min_power(TargetKind kind, double target,
                                const std::function<double(double)>& metric) {
    PowerPlanResult res;
    res.kind = kind;
    res.target = target;

    double lo = dbw_to_watt(kBracketLowDbw);
    double hi = dbw_to_watt(kBracketHighDbw);
    int iters = 0;

    if (metric(lo) >= target) {  // already met at the bracket's low end
        res.feasible = true;
        res.power_w = lo;
        res.power_dbw = watt_to_dbw(lo);
        res.achieved = metric(lo);
        res.bracket_low_w = lo;
        res.bracket_high_w = hi;
        res.note = "target met at bracket low end";
        return res;
    }
    while (metric(hi) < target) {
        hi *= 10.0;
        ++iters;
        if (watt_to_dbw(hi) > kHardCapDbw) {
            res.feasible = false;
            res.bracket_low_w = lo;
            res.bracket_high_w = hi;
            res.iterations = iters;
            res.note = "target not reached below the power cap";
            return res;
        }
    }
    res.bracket_low_w = lo;
    res.bracket_high_w = hi;

    while (hi / lo > 1.0 + kRelPowerTol) {
        const double mid = std::sqrt(lo * hi);
        ++iters;
        if (metric(mid) >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    res.feasible = true;
    res.power_w = hi;
    res.power_dbw = watt_to_dbw(hi);
    res.achieved = metric(hi);
    res.iterations = iters;
    return res;
}

NetworkConfig with_power(NetworkConfig cfg, double power_w) {
    cfg.hap_tx_power = power_w;
    return cfg;
}

void apply_axis(NetworkConfig& cfg, const std::string& name, double value) {
    if (name == "sat_altitude") {
        cfg.sat_shell_radius = cfg.earth_radius + value * 1e3;  // value in km
    } else if (name == "sat_count") {
        cfg.sat_count = static_cast<int>(value);
    } else if (name == "hap_tx_power") {
        cfg.hap_tx_power = dbw_to_watt(value);  // value in dBW
    } else if (name == "user_density") {
        cfg.user_density = value;
    } else {
        throw std::invalid_argument("sweep: unknown axis '" + name +
                                    "' (use sat_altitude, sat_count, hap_tx_power, user_density)");
    }
}

}  // namespace

PowerPlanResult min_power_for_abdr_ratio(const NetworkConfig& cfg, double ratio) {
    if (!(ratio > 0.0)) throw std::invalid_argument("abdr ratio target must be positive");
    const double access = aadr(cfg);
    if (!std::isfinite(access) || access <= 0.0) {
        throw std::runtime_error("AADR must be finite and positive for a ratio target");
    }
    const double target_rate = ratio * access;
    auto metric = [&cfg](double p) { return abdr(with_power(cfg, p)); };
    PowerPlanResult res = solve_min_power(TargetKind::kAbdrRatio, target_rate, metric);
    res.target = ratio;
    if (res.feasible) res.achieved /= access;  // report the achieved rate ratio
    return res;
}

PowerPlanResult min_power_for_brep(const NetworkConfig& cfg, double target) {
    if (!(target > 0.0 && target < 1.0)) {
        throw std::invalid_argument("brep target must lie in (0, 1)");
    }
    const BrepCurve curve(cfg);
    if (target >= curve.feasibility_ceiling()) {
        PowerPlanResult res;
        res.kind = TargetKind::kBrep;
        res.target = target;
        res.feasible = false;
        res.note = "target exceeds the BREP ceiling (pointing deficit + blockage)";
        return res;
    }
    return solve_min_power(TargetKind::kBrep, target,
                           [&curve](double p) { return curve.at_power(p); });
}

namespace {

SweepCell evaluate_cell(const NetworkConfig& cfg, const SweepRequest& request) {
    SweepCell cell;
    switch (request.kind) {
        case SweepRequest::Kind::kAadr:
            cell.value = aadr(cfg);
            cell.feasible = true;
            break;
        case SweepRequest::Kind::kAbdr:
            cell.value = abdr(cfg);
            cell.feasible = true;
            break;
        case SweepRequest::Kind::kBrep:
            cell.value = brep(cfg);
            cell.feasible = true;
            break;
        case SweepRequest::Kind::kPlanAbdrRatio: {
            const PowerPlanResult plan = min_power_for_abdr_ratio(cfg, request.target);
            cell.feasible = plan.feasible;
            cell.value = plan.feasible ? plan.power_dbw : 0.0;
            break;
        }
        case SweepRequest::Kind::kPlanBrep: {
            const PowerPlanResult plan = min_power_for_brep(cfg, request.target);
            cell.feasible = plan.feasible;
            cell.value = plan.feasible ? plan.power_dbw : 0.0;
            break;
        }
    }
    return cell;
}

}  // namespace

SweepGrid sweep(const NetworkConfig& cfg, const SweepAxis& axis1, const SweepAxis& axis2,
                const SweepRequest& request) {
    if (axis1.values.empty() || axis2.values.empty()) {
        throw std::invalid_argument("sweep: axes must be non-empty");
    }
    // Validate axis names and every cell config before any evaluation.
    for (double v1 : axis1.values) {
        for (double v2 : axis2.values) {
            NetworkConfig c = cfg;
            apply_axis(c, axis1.name, v1);
            apply_axis(c, axis2.name, v2);
            c.validate();
        }
    }

    SweepGrid grid;
    grid.axis1 = axis1;
    grid.axis2 = axis2;
    grid.cells.assign(axis1.values.size(), std::vector<SweepCell>(axis2.values.size()));

    const std::size_t total = axis1.values.size() * axis2.values.size();
    unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(hw, total));

    auto run_range = [&](std::size_t w) {
        for (std::size_t flat = w; flat < total; flat += workers) {
            const std::size_t i = flat / axis2.values.size();
            const std::size_t j = flat % axis2.values.size();
            NetworkConfig c = cfg;
            apply_axis(c, axis1.name, axis1.values[i]);
            apply_axis(c, axis2.name, axis2.values[j]);
            grid.cells[i][j] = evaluate_cell(c, request);
        }
    };
    if (workers == 1) {
        run_range(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_range, w);
        for (auto& t : pool) t.join();
    }
    return grid;
}

void write_grid_csv(const SweepGrid& grid, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_grid_csv: cannot open '" + path + "'");
    f << grid.axis1.name << '\\' << grid.axis2.name;
    for (double v : grid.axis2.values) f << ',' << v;
    f << '\n';
    for (std::size_t i = 0; i < grid.axis1.values.size(); ++i) {
        f << grid.axis1.values[i];
        for (const SweepCell& cell : grid.cells[i]) {
            if (cell.feasible) {
                f << ',' << std::fixed << std::setprecision(2) << cell.value
                  << std::defaultfloat;
            } else {
                f << ",infeasible";
            }
        }
        f << '\n';
    }
}

ValidationReport make_validation_report(const AnalyticMetrics& analytic,
                                        std::uint64_t analytic_config_hash,
                                        const MetricsEstimate& simulated) {
    if (analytic_config_hash != simulated.config_hash) {
        throw std::invalid_argument(
            "validation: analytic and simulated results come from different configs");
    }
    ValidationReport report;
    report.aadr_analytic = analytic.aadr;
    report.abdr_analytic = analytic.abdr;
    report.brep_analytic = analytic.brep;
    report.simulated = simulated;
    report.config_hash = analytic_config_hash;
    report.seed = simulated.seed;
    report.rounds = simulated.rounds;

    auto rel_check = [](const std::string& name, double ana, double sim, double tol) {
        MetricCheck c;
        c.name = name;
        c.analytic = ana;
        c.simulated = sim;
        c.relative = true;
        c.tolerance = tol;
        c.gap = sim != 0.0 ? std::abs(ana - sim) / std::abs(sim) : std::abs(ana - sim);
        c.pass = c.gap <= tol;
        return c;
    };
    auto abs_check = [](const std::string& name, double ana, double sim, double tol) {
        MetricCheck c;
        c.name = name;
        c.analytic = ana;
        c.simulated = sim;
        c.relative = false;
        c.tolerance = tol;
        c.gap = std::abs(ana - sim);
        c.pass = c.gap <= tol;
        return c;
    };
    report.checks.push_back(
        rel_check("aadr_vs_linearized_mc", analytic.aadr, simulated.aadr_linear_mean, 0.015));
    report.checks.push_back(
        rel_check("aadr_vs_exact_mc", analytic.aadr, simulated.aadr_exact_mean, 0.05));
    report.checks.push_back(rel_check("abdr", analytic.abdr, simulated.abdr_mean, 0.01));
    report.checks.push_back(abs_check("brep", analytic.brep, simulated.brep_hat, 0.03));
    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const MetricCheck& c) { return c.pass; });
    return report;
}

ValidationReport validate(const NetworkConfig& cfg, long rounds, std::uint64_t seed) {
    if (rounds < 1000) {
        throw std::invalid_argument("validate: need at least 1000 rounds");
    }
    const AnalyticMetrics analytic = analytic_metrics(cfg);
    const MetricsEstimate simulated = estimate_metrics(cfg, rounds, seed);
    return make_validation_report(analytic, cfg.hash(), simulated);
}

std::string to_json(const ValidationReport& report) {
    nlohmann::json j;
    j["analytic"] = {{"aadr_bps", report.aadr_analytic},
                     {"abdr_bps", report.abdr_analytic},
                     {"brep", report.brep_analytic}};
    j["simulated"] = {{"aadr_exact_mean", report.simulated.aadr_exact_mean},
                      {"aadr_exact_half", report.simulated.aadr_exact_half},
                      {"aadr_linear_mean", report.simulated.aadr_linear_mean},
                      {"aadr_linear_half", report.simulated.aadr_linear_half},
                      {"abdr_mean", report.simulated.abdr_mean},
                      {"abdr_half", report.simulated.abdr_half},
                      {"brep_hat", report.simulated.brep_hat},
                      {"brep_half", report.simulated.brep_half},
                      {"blockage_freq", report.simulated.blockage_freq}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"analytic", c.analytic},
                               {"simulated", c.simulated},
                               {"gap", c.gap},
                               {"tolerance", c.tolerance},
                               {"relative", c.relative},
                               {"pass", c.pass}});
    }
    j["config_hash"] = report.config_hash;
    j["seed"] = report.seed;
    j["rounds"] = report.rounds;
    j["all_pass"] = report.all_pass;
    return j.dump(2);
}

ValidationReport validation_report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ValidationReport report;
    report.aadr_analytic = j.at("analytic").at("aadr_bps").get<double>();
    report.abdr_analytic = j.at("analytic").at("abdr_bps").get<double>();
    report.brep_analytic = j.at("analytic").at("brep").get<double>();
    const auto& s = j.at("simulated");
    report.simulated.aadr_exact_mean = s.at("aadr_exact_mean").get<double>();
    report.simulated.aadr_exact_half = s.at("aadr_exact_half").get<double>();
    report.simulated.aadr_linear_mean = s.at("aadr_linear_mean").get<double>();
    report.simulated.aadr_linear_half = s.at("aadr_linear_half").get<double>();
    report.simulated.abdr_mean = s.at("abdr_mean").get<double>();
    report.simulated.abdr_half = s.at("abdr_half").get<double>();
    report.simulated.brep_hat = s.at("brep_hat").get<double>();
    report.simulated.brep_half = s.at("brep_half").get<double>();
    report.simulated.blockage_freq = s.at("blockage_freq").get<double>();
    for (const auto& jc : j.at("checks")) {
        MetricCheck c;
        c.name = jc.at("name").get<std::string>();
        c.analytic = jc.at("analytic").get<double>();
        c.simulated = jc.at("simulated").get<double>();
        c.gap = jc.at("gap").get<double>();
        c.tolerance = jc.at("tolerance").get<double>();
        c.relative = jc.at("relative").get<bool>();
        c.pass = jc.at("pass").get<bool>();
        report.checks.push_back(c);
    }
    report.config_hash = j.at("config_hash").get<std::uint64_t>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.rounds = j.at("rounds").get<long>();
    report.all_pass = j.at("all_pass").get<bool>();
    report.simulated.config_hash = report.config_hash;
    report.simulated.seed = report.seed;
    report.simulated.rounds = report.rounds;
    return report;
}

}  // namespace sagin
