// saginplan: analytic metrics, Monte Carlo validation, and minimum-power
// planning for satellite-HAP-ground relay uplinks.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sagin/analytic.hpp"
#include "sagin/config.hpp"
#include "sagin/distributions.hpp"
#include "sagin/monte_carlo.hpp"
#include "sagin/planner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitValidation = 4;

// Rounds-per-run guard: a full Table-1 density means ~2e5 users per round,
// which is a deliberate (slow) choice the caller must opt into.
constexpr double kFullScaleUserGate = 1e4;

sagin::NetworkConfig load(const std::string& config_path) {
    if (config_path.empty()) return sagin::NetworkConfig{};
    return sagin::load_config(config_path);
}

std::vector<double> parse_axis_values(const std::string& spec) {
    std::vector<double> values;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            values.push_back(std::stod(item));
            continue;
        }
        // start:stop:count expands to a linear grid
        const auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos) throw CLI::ValidationError("axis", "range needs start:stop:count");
        const double start = std::stod(item.substr(0, c1));
        const double stop = std::stod(item.substr(c1 + 1, c2 - c1 - 1));
        const int count = std::stoi(item.substr(c2 + 1));
        if (count < 2) throw CLI::ValidationError("axis", "range count must be >= 2");
        for (int i = 0; i < count; ++i) {
            values.push_back(start + (stop - start) * i / (count - 1));
        }
    }
    return values;
}

sagin::SweepAxis parse_axis(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
        throw CLI::ValidationError("axis", "expected name=v1,v2,... got '" + spec + "'");
    }
    sagin::SweepAxis axis;
    axis.name = spec.substr(0, eq);
    axis.values = parse_axis_values(spec.substr(eq + 1));
    return axis;
}

void print_analytic(const sagin::AnalyticMetrics& m, const sagin::NetworkConfig& cfg,
                    const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["aadr_bps"] = m.aadr;
        j["aadr_gbps"] = m.aadr / 1e9;
        j["abdr_bps"] = m.abdr;
        j["abdr_gbps"] = m.abdr / 1e9;
        j["brep"] = m.brep;
        j["blockage_prob"] = m.blockage_prob;
        j["diagnostics"] = {{"brep_series_terms", m.diagnostics.brep_series_terms},
                            {"brep_series_truncation", m.diagnostics.brep_series_truncation},
                            {"brep_clamp_overshoot", m.diagnostics.clamped_brep_overshoot}};
        j["config_hash"] = cfg.hash();
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "metric,value\n"
                  << "aadr_gbps," << m.aadr / 1e9 << "\n"
                  << "abdr_gbps," << m.abdr / 1e9 << "\n"
                  << "brep," << m.brep << "\n"
                  << "blockage_prob," << m.blockage_prob << "\n";
    } else {
        std::printf("AADR               %12.6f Gbit/s\n", m.aadr / 1e9);
        std::printf("ABDR               %12.6f Gbit/s\n", m.abdr / 1e9);
        std::printf("BREP               %12.6f\n", m.brep);
        std::printf("Blockage prob      %12.3e\n", m.blockage_prob);
        std::printf("BREP series terms  %d (first omitted term %.3e)\n",
                    m.diagnostics.brep_series_terms, m.diagnostics.brep_series_truncation);
    }
}

nlohmann::json estimate_json(const sagin::MetricsEstimate& est) {
    return {{"aadr_exact_mean_bps", est.aadr_exact_mean},
            {"aadr_exact_half_bps", est.aadr_exact_half},
            {"aadr_linear_mean_bps", est.aadr_linear_mean},
            {"aadr_linear_half_bps", est.aadr_linear_half},
            {"abdr_mean_bps", est.abdr_mean},
            {"abdr_half_bps", est.abdr_half},
            {"brep_hat", est.brep_hat},
            {"brep_half", est.brep_half},
            {"blockage_freq", est.blockage_freq},
            {"rounds", est.rounds},
            {"seed", est.seed},
            {"config_hash", est.config_hash}};
}

void print_estimate(const sagin::MetricsEstimate& est, const std::string& format) {
    if (format == "json") {
        std::cout << estimate_json(est).dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "metric,mean,ci95_half\n"
                  << "aadr_exact_gbps," << est.aadr_exact_mean / 1e9 << ','
                  << est.aadr_exact_half / 1e9 << "\n"
                  << "aadr_linear_gbps," << est.aadr_linear_mean / 1e9 << ','
                  << est.aadr_linear_half / 1e9 << "\n"
                  << "abdr_gbps," << est.abdr_mean / 1e9 << ',' << est.abdr_half / 1e9 << "\n"
                  << "brep," << est.brep_hat << ',' << est.brep_half << "\n";
        return;
    }
    std::printf("rounds %ld  seed %llu\n", est.rounds,
                static_cast<unsigned long long>(est.seed));
    std::printf("AADR (exact)   %12.6f +- %.6f Gbit/s\n", est.aadr_exact_mean / 1e9,
                est.aadr_exact_half / 1e9);
    std::printf("AADR (linear)  %12.6f +- %.6f Gbit/s\n", est.aadr_linear_mean / 1e9,
                est.aadr_linear_half / 1e9);
    std::printf("ABDR           %12.6f +- %.6f Gbit/s\n", est.abdr_mean / 1e9,
                est.abdr_half / 1e9);
    std::printf("BREP           %12.6f +- %.6f\n", est.brep_hat, est.brep_half);
    std::printf("blockage freq  %12.3e\n", est.blockage_freq);
}

void print_plan(const sagin::PowerPlanResult& plan, const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["target_kind"] = plan.kind == sagin::TargetKind::kBrep ? "brep" : "abdr-ratio";
        j["target"] = plan.target;
        j["feasible"] = plan.feasible;
        if (plan.feasible) {
            j["min_power_w"] = plan.power_w;
            j["min_power_dbw"] = plan.power_dbw;
            j["achieved"] = plan.achieved;
        }
        j["iterations"] = plan.iterations;
        j["bracket_low_w"] = plan.bracket_low_w;
        j["bracket_high_w"] = plan.bracket_high_w;
        if (!plan.note.empty()) j["note"] = plan.note;
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (!plan.feasible) {
        std::printf("infeasible: %s\n", plan.note.c_str());
        return;
    }
    std::printf("min power      %10.4f dBW  (%.6g W)\n", plan.power_dbw, plan.power_w);
    std::printf("achieved       %10.6g (target %.6g)\n", plan.achieved, plan.target);
    std::printf("iterations     %d, bracket [%.3g, %.3g] W\n", plan.iterations,
                plan.bracket_low_w, plan.bracket_high_w);
}

void print_report(const sagin::ValidationReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << sagin::to_json(report) << "\n";
        return;
    }
    std::printf("%-24s %14s %14s %10s %10s  %s\n", "check", "analytic", "simulated", "gap",
                "tolerance", "verdict");
    for (const auto& c : report.checks) {
        std::printf("%-24s %14.6g %14.6g %9.4f%s %9.4g%s  %s\n", c.name.c_str(), c.analytic,
                    c.simulated, c.relative ? c.gap * 100 : c.gap, c.relative ? "%" : " ",
                    c.relative ? c.tolerance * 100 : c.tolerance, c.relative ? "%" : " ",
                    c.pass ? "pass" : "FAIL");
    }
    std::printf("overall: %s\n", report.all_pass ? "pass" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relay-uplink performance toolkit: analytic metrics, Monte Carlo "
                 "validation, and HAP power planning"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format = "text";
    app.add_option("--config", config_path, "Config file (flat key = value lines)")
        ->expected(1);
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* cmd_analytic = app.add_subcommand("analytic", "Closed-form metrics for a config");

    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo metric estimates");
    long rounds = 10000;
    std::uint64_t seed = 42;
    int workers = 0;
    bool full_scale = false;
    std::string trace_path;
    cmd_sim->add_option("--rounds", rounds, "Monte Carlo rounds")->required();
    cmd_sim->add_option("--seed", seed, "Master seed")->required();
    cmd_sim->add_option("--workers", workers, "Worker threads (0 = all cores)");
    cmd_sim->add_flag("--full-scale", full_scale,
                      "Allow very dense configs (>1e4 users per round)");
    cmd_sim->add_option("--trace", trace_path, "Write a per-round CSV trace");

    auto* cmd_val = app.add_subcommand("validate", "Analytic vs Monte Carlo comparison");
    long val_rounds = 10000;
    std::uint64_t val_seed = 42;
    cmd_val->add_option("--rounds", val_rounds, "Monte Carlo rounds")->required();
    cmd_val->add_option("--seed", val_seed, "Master seed")->required();

    auto* cmd_plan = app.add_subcommand("plan-power", "Minimum HAP power for a target");
    std::string target_kind;
    double target_value = 0.0;
    cmd_plan->add_option("--target-kind", target_kind, "abdr-ratio or brep")
        ->required()
        ->check(CLI::IsMember({"abdr-ratio", "brep"}));
    cmd_plan->add_option("--target", target_value, "Target value")->required();

    auto* cmd_sweep = app.add_subcommand("sweep", "Metric or plan grid over two axes");
    std::string axis1_spec, axis2_spec, metric_name, sweep_target_kind, output_path;
    double sweep_target = 0.0;
    cmd_sweep->add_option("--axis1", axis1_spec, "name=v1,v2,... or name=start:stop:count")
        ->required();
    cmd_sweep->add_option("--axis2", axis2_spec, "second axis, same syntax")->required();
    cmd_sweep->add_option("--metric", metric_name, "aadr, abdr or brep");
    cmd_sweep->add_option("--target-kind", sweep_target_kind, "abdr-ratio or brep")
        ->check(CLI::IsMember({"abdr-ratio", "brep"}));
    cmd_sweep->add_option("--target", sweep_target, "Plan target value");
    cmd_sweep->add_option("--output", output_path, "Grid CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    }

    try {
        const sagin::NetworkConfig cfg = load(config_path);

        if (cmd_analytic->parsed()) {
            print_analytic(sagin::analytic_metrics(cfg), cfg, format);
            return kExitOk;
        }

        if (cmd_sim->parsed()) {
            const sagin::DerivedGeometry geom = sagin::derive_geometry(cfg);
            if (geom.mean_user_count > kFullScaleUserGate && !full_scale) {
                std::cerr << "config averages " << geom.mean_user_count
                          << " users per round; pass --full-scale to run at this density\n";
                return kExitConfig;
            }
            const auto outcomes = sagin::run_rounds(cfg, rounds, seed, workers);
            if (!trace_path.empty()) sagin::export_trace(outcomes, trace_path);
            print_estimate(sagin::summarize(outcomes, cfg, seed), format);
            return kExitOk;
        }

        if (cmd_val->parsed()) {
            const sagin::ValidationReport report = sagin::validate(cfg, val_rounds, val_seed);
            print_report(report, format);
            return report.all_pass ? kExitOk : kExitValidation;
        }

        if (cmd_plan->parsed()) {
            const sagin::PowerPlanResult plan =
                target_kind == "brep" ? sagin::min_power_for_brep(cfg, target_value)
                                      : sagin::min_power_for_abdr_ratio(cfg, target_value);
            print_plan(plan, format);
            return plan.feasible ? kExitOk : kExitInfeasible;
        }

        if (cmd_sweep->parsed()) {
            sagin::SweepRequest request;
            if (!metric_name.empty() && !sweep_target_kind.empty()) {
                std::cerr << "give either --metric or --target-kind, not both\n";
                return kExitConfig;
            }
            if (!metric_name.empty()) {
                if (metric_name == "aadr") request.kind = sagin::SweepRequest::Kind::kAadr;
                else if (metric_name == "abdr") request.kind = sagin::SweepRequest::Kind::kAbdr;
                else if (metric_name == "brep") request.kind = sagin::SweepRequest::Kind::kBrep;
                else {
                    std::cerr << "unknown metric '" << metric_name << "'\n";
                    return kExitConfig;
                }
            } else if (!sweep_target_kind.empty()) {
                request.kind = sweep_target_kind == "brep"
                                   ? sagin::SweepRequest::Kind::kPlanBrep
                                   : sagin::SweepRequest::Kind::kPlanAbdrRatio;
                request.target = sweep_target;
            } else {
                std::cerr << "sweep needs --metric or --target-kind/--target\n";
                return kExitConfig;
            }
            const sagin::SweepGrid grid =
                sagin::sweep(cfg, parse_axis(axis1_spec), parse_axis(axis2_spec), request);
            sagin::write_grid_csv(grid, output_path);
            std::size_t infeasible = 0;
            for (const auto& row : grid.cells)
                for (const auto& cell : row)
                    if (!cell.feasible) ++infeasible;
            std::printf("wrote %zux%zu grid to %s (%zu infeasible cells)\n",
                        grid.axis1.values.size(), grid.axis2.values.size(),
                        output_path.c_str(), infeasible);
            return infeasible == 0 ? kExitOk : kExitInfeasible;
        }
    } catch (const sagin::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
