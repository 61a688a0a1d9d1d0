// Command-line front end: run a single trajectory, sweep the
// (k_mid, k_noise, epsilon, topology) grid, verify the tau1 closed
// form, or re-render a heatmap from a snapshots file.
//
// Exit codes: 0 success, 1 usage error, 2 runtime/IO error,
// 3 verification failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acca/harness.hpp"
#include "acca/io.hpp"
#include "acca/observables.hpp"
#include "acca/stats.hpp"

namespace {

using namespace acca;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitVerification = 3;

// Files created by the current command, removed again if it fails.
class OutputFiles {
  public:
    void write(const std::string& path, const std::string& content) {
        io::write_file(path, content);
        created_.push_back(path);
    }
    void discard_all() {
        for (const std::string& path : created_) std::remove(path.c_str());
    }

  private:
    std::vector<std::string> created_;
};

// Round angles through the emitted precision so that rasters rendered
// here and rasters re-rendered from a written csv are byte-identical.
double emitted_precision(double v) { return std::stod(io::format_number(v)); }

io::SnapshotTable to_table(const TimeSeries& ts,
                           const std::vector<long long>& only_times) {
    io::SnapshotTable table;
    for (const auto& [t, config] : ts.snapshots) {
        if (!only_times.empty() &&
            std::find(only_times.begin(), only_times.end(), t) == only_times.end()) {
            continue;
        }
        if (table.n == 0) table.n = config.size();
        std::vector<double> angles;
        angles.reserve(static_cast<size_t>(config.size()));
        for (Angle a : config.angles()) angles.push_back(emitted_precision(a.radians()));
        table.rows.emplace_back(t, std::move(angles));
    }
    return table;
}

struct RunOptions {
    SimulationParams params;
    std::string out_dir = ".";
    bool heatmap = false;
    std::vector<long long> snapshot_times;
    std::optional<double> stop_r;
    std::string init = "uniform";
    std::string topology = "ring";
    double winding_alpha = 0.0;
};

void add_common_sim_options(CLI::App* cmd, RunOptions& opt) {
    cmd->add_option("--n", opt.params.n, "number of sites")->capture_default_str();
    cmd->add_option("--topology", opt.topology, "path or ring")
        ->check(CLI::IsMember({"path", "ring"}))
        ->capture_default_str();
    cmd->add_option("--epsilon", opt.params.epsilon, "noise strength in [0,1]")
        ->capture_default_str();
    cmd->add_option("--k-mid", opt.params.k_mid, "midpoint updates per step")
        ->capture_default_str();
    cmd->add_option("--k-noise", opt.params.k_noise, "noise kicks per step")
        ->capture_default_str();
    cmd->add_option("--steps", opt.params.steps, "elementary steps")
        ->capture_default_str();
    cmd->add_option("--record-stride", opt.params.record_stride,
                    "steps between records (0: one sweep, n steps)")
        ->capture_default_str();
    cmd->add_option("--seed", opt.params.seed, "rng seed")->capture_default_str();
}

SimulationParams finish_params(RunOptions& opt) {
    opt.params.boundary =
        opt.topology == "ring" ? BoundaryKind::Ring : BoundaryKind::Path;
    opt.params.initializer = opt.init == "uniform" ? InitializerKind::UniformRandom
                                                   : InitializerKind::WindingLattice;
    opt.params.winding_alpha = Angle::wrap(opt.winding_alpha);
    opt.params.stop_when_r_above = opt.stop_r;
    opt.params.snapshot_times = opt.snapshot_times;
    opt.params.snapshot_every_record = opt.heatmap;
    return opt.params;
}

int command_run(RunOptions& opt) {
    const SimulationParams params = finish_params(opt);
    params.validate();

    const TimeSeries ts = run_simulation(params);

    std::filesystem::create_directories(opt.out_dir);
    OutputFiles out;
    try {
        std::ostringstream series;
        io::write_series_csv(series, ts);
        out.write(opt.out_dir + "/series.csv", series.str());

        if (!opt.snapshot_times.empty()) {
            TimeSeries filtered;
            for (const auto& snap : ts.snapshots) {
                if (std::find(opt.snapshot_times.begin(), opt.snapshot_times.end(),
                              snap.first) != opt.snapshot_times.end()) {
                    filtered.snapshots.push_back(snap);
                }
            }
            std::ostringstream snaps;
            io::write_snapshots_csv(snaps, filtered, params.n);
            out.write(opt.out_dir + "/snapshots.csv", snaps.str());
        }

        if (opt.heatmap) {
            std::vector<long long> record_times;
            record_times.reserve(ts.records.size());
            for (const auto& rec : ts.records) record_times.push_back(rec.t);
            out.write(opt.out_dir + "/heatmap.svg",
                      io::angle_heatmap_svg(to_table(ts, record_times)));
        }
    } catch (...) {
        out.discard_all();
        throw;
    }

    const ObservableRecord& last = ts.records.back();
    std::cout << "records: " << ts.records.size() << "\n";
    std::cout << "final: t=" << last.t << " R=" << io::format_number(last.r)
              << " Y=" << io::format_number(last.y)
              << " tau1=" << io::format_number(last.tau1);
    if (last.winding) std::cout << " W=" << *last.winding;
    std::cout << "\n";
    return kExitOk;
}

struct SweepOptions {
    RunOptions base;
    std::vector<std::string> topologies{"path", "ring"};
    std::vector<double> epsilons{0.002, 0.02};
    std::vector<int> k_mids{1, 10, 20, 40};
    std::vector<int> k_noises{0, 1, 10, 20, 40};
    int replicates = 8;
    double late_fraction = 0.2;
    int threads = 0;
    std::string out = "sweep.csv";
    bool heatmaps = false;
};

int command_sweep(SweepOptions& opt) {
    SweepGrid grid;
    for (const std::string& t : opt.topologies) {
        grid.boundaries.push_back(t == "ring" ? BoundaryKind::Ring
                                              : BoundaryKind::Path);
    }
    grid.epsilons = opt.epsilons;
    grid.k_mids = opt.k_mids;
    grid.k_noises = opt.k_noises;

    const SimulationParams base = finish_params(opt.base);

    const SweepResult result =
        sweep(grid, opt.replicates, base, opt.late_fraction, opt.threads);

    OutputFiles out;
    try {
        std::ostringstream os;
        io::write_sweep_csv(os, result);
        out.write(opt.out, os.str());

        if (opt.heatmaps) {
            const std::string stem = opt.out.ends_with(".csv")
                                         ? opt.out.substr(0, opt.out.size() - 4)
                                         : opt.out;
            for (BoundaryKind b : grid.boundaries) {
                for (double eps : grid.epsilons) {
                    for (const std::string metric : {"R", "absY", "absTau1"}) {
                        const std::string path = stem + "_" + metric + "_" +
                                                 to_string(b) + "_eps" +
                                                 io::format_number(eps) + ".svg";
                        out.write(path, io::sweep_heatmap_svg(result, b, eps, metric));
                    }
                }
            }
        }

        if (io::sweep_has_errors(result)) {
            std::ostringstream errs;
            io::write_sweep_errors(errs, result);
            out.write(opt.out + ".errors", errs.str());
            std::cerr << "sweep: some cells failed, see " << opt.out << ".errors\n";
            return kExitRuntime;
        }
    } catch (...) {
        out.discard_all();
        throw;
    }
    std::cout << "wrote " << opt.out << " (" << result.cells.size() << " cells)\n";
    return kExitOk;
}

struct VerifyOptions {
    int max_w = 5;
    long long samples = 100000;
    std::uint64_t seed = 1;
};

int command_verify_tau(const VerifyOptions& opt) {
    if (opt.max_w < 1) throw std::invalid_argument("verify-tau: max-w must be >= 1");
    if (opt.samples < 1000) {
        throw std::invalid_argument("verify-tau: samples must be >= 1000");
    }
    bool all_ok = true;
    const double tol = 4.0 / std::sqrt(static_cast<double>(opt.samples));

    std::printf("%4s  %12s  %12s  %10s  %10s  %s\n", "W", "theory", "estimate",
                "|error|", "tol", "result");
    std::uint64_t stream = 0;
    for (int w = -opt.max_w; w <= opt.max_w; ++w) {
        if (w == 0) continue;
        Rng rng(derive_seed(opt.seed, stream++));
        const double theory = tau1_theory(w);
        const double estimate =
            tau1_pair_estimate(w, Angle::wrap(0.0), opt.samples, rng);
        const double err = std::abs(estimate - theory);
        const bool ok = err <= tol;
        all_ok = all_ok && ok;
        std::printf("%4d  %12.6f  %12.6f  %10.6f  %10.6f  %s\n", w, theory,
                    estimate, err, tol, ok ? "pass" : "FAIL");
    }

    // Identities behind the closed form, on fresh substreams.
    const std::size_t n_apx = 1000000;
    {
        Rng rng(derive_seed(opt.seed, 1000));
        std::vector<double> wrapped;
        wrapped.reserve(n_apx);
        double abs_sum = 0.0;
        for (std::size_t i = 0; i < n_apx; ++i) {
            const double t1 = -kPi + kTwoPi * rng.next_unit();
            const double t2 = -kPi + kTwoPi * rng.next_unit();
            const double d = wrap_pi(t2 - t1);
            wrapped.push_back(d);
            abs_sum += std::abs(d);
        }
        const double ks = stats::ks_statistic_uniform(std::move(wrapped), -kPi, kPi);
        const double ks_crit = stats::ks_critical_one_sample(0.01, n_apx);
        const bool ks_ok = ks < ks_crit;
        all_ok = all_ok && ks_ok;
        std::printf("wrapped-uniform KS: D=%.6f < %.6f  %s\n", ks, ks_crit,
                    ks_ok ? "pass" : "FAIL");

        const double mean_abs = abs_sum / static_cast<double>(n_apx);
        const bool mean_ok = std::abs(mean_abs - kPi / 2) < 0.005;
        all_ok = all_ok && mean_ok;
        std::printf("mean |wrapped difference|: %.6f (pi/2 +- 0.005)  %s\n",
                    mean_abs, mean_ok ? "pass" : "FAIL");
    }
    {
        int violations = 0;
        int tested = 0;
        for (int i = 0; i < 100000; ++i) {
            const double x = -50.0 + 100.0 * (i + 0.5) / 100000.0;
            const double nearest = std::round(x / kPi) * kPi;
            if (std::abs(x - nearest) < 1e-9) continue;
            ++tested;
            if ((wrap_pi(x) > 0) != (std::sin(x) > 0)) ++violations;
        }
        const bool ok = violations == 0 && tested > 99000;
        all_ok = all_ok && ok;
        std::printf("sign(wrap) = sign(sin) on %d grid points: %d violations  %s\n",
                    tested, violations, ok ? "pass" : "FAIL");
    }
    {
        bool ok = true;
        for (int w = 1; w <= 50; ++w) {
            const std::int64_t expected = (w % 2 == 0) ? -w : w;
            ok = ok && alternating_odd_sum(w) == expected;
        }
        all_ok = all_ok && ok;
        std::printf("alternating odd sum up to w = 50: %s\n", ok ? "pass" : "FAIL");
    }

    return all_ok ? kExitOk : kExitVerification;
}

struct RenderOptions {
    std::string snapshots;
    std::string out = "heatmap.svg";
};

int command_render(const RenderOptions& opt) {
    std::ifstream is(opt.snapshots);
    if (!is) throw std::runtime_error("cannot read " + opt.snapshots);
    const io::SnapshotTable table = io::read_snapshots_csv(is);
    OutputFiles out;
    out.write(opt.out, io::angle_heatmap_svg(table));
    std::cout << "wrote " << opt.out << " (" << table.rows.size() << " x "
              << table.n << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circular opinion dynamics: midpoint averaging with bi-modal "
                 "noise and parallel updates on paths and rings"};
    app.require_subcommand(1);

    RunOptions run_opt;
    run_opt.params.steps = 1000000;
    CLI::App* run_cmd = app.add_subcommand("run", "simulate one trajectory");
    run_cmd->set_config("--config", "", "key = value configuration file");
    run_cmd->allow_config_extras(false);
    add_common_sim_options(run_cmd, run_opt);
    run_cmd->add_option("--init", run_opt.init, "uniform or winding")
        ->check(CLI::IsMember({"uniform", "winding"}))
        ->capture_default_str();
    run_cmd->add_option("--winding-w", run_opt.params.winding_w,
                        "winding number of the lattice initializer")
        ->capture_default_str();
    run_cmd->add_option("--winding-alpha", run_opt.winding_alpha,
                        "phase offset of the lattice initializer")
        ->capture_default_str();
    run_cmd->add_option("--stop-r", run_opt.stop_r,
                        "stop once a record has R above this value");
    run_cmd->add_option("--out-dir", run_opt.out_dir, "output directory")
        ->capture_default_str();
    run_cmd->add_flag("--heatmap", run_opt.heatmap,
                      "write heatmap.svg (site-by-time raster)");
    run_cmd->add_option("--snapshots-at", run_opt.snapshot_times,
                        "write snapshots.csv at these step indices")
        ->delimiter(',');

    SweepOptions sweep_opt;
    sweep_opt.base.params.steps = 1000000;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "late-time averages over a parameter grid");
    sweep_cmd->set_config("--config", "", "key = value configuration file");
    sweep_cmd->allow_config_extras(false);
    add_common_sim_options(sweep_cmd, sweep_opt.base);
    sweep_cmd->add_option("--topologies", sweep_opt.topologies, "grid topologies")
        ->delimiter(',')
        ->check(CLI::IsMember({"path", "ring"}))
        ->capture_default_str();
    sweep_cmd->add_option("--epsilons", sweep_opt.epsilons, "grid noise strengths")
        ->delimiter(',')
        ->capture_default_str();
    sweep_cmd->add_option("--k-mids", sweep_opt.k_mids, "grid k_mid values")
        ->delimiter(',')
        ->capture_default_str();
    sweep_cmd->add_option("--k-noises", sweep_opt.k_noises, "grid k_noise values")
        ->delimiter(',')
        ->capture_default_str();
    sweep_cmd->add_option("--replicates", sweep_opt.replicates, "runs per cell")
        ->capture_default_str();
    sweep_cmd->add_option("--late-fraction", sweep_opt.late_fraction,
                          "final fraction of records to average")
        ->capture_default_str();
    sweep_cmd->add_option("--threads", sweep_opt.threads,
                          "worker threads (0: hardware)")
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep_opt.out, "output csv path")
        ->capture_default_str();
    sweep_cmd->add_flag("--heatmaps", sweep_opt.heatmaps,
                        "write per-metric svg heatmaps next to the csv");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify-tau", "check the winding closed form and its identities");
    verify_cmd->add_option("--max-w", verify_opt.max_w,
                           "check W in [-max..-1, 1..max]")
        ->capture_default_str();
    verify_cmd->add_option("--samples", verify_opt.samples, "Monte Carlo pairs per W")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_opt.seed, "rng seed")
        ->capture_default_str();

    RenderOptions render_opt;
    CLI::App* render_cmd =
        app.add_subcommand("render", "re-render a heatmap from snapshots.csv");
    render_cmd->add_option("--snapshots", render_opt.snapshots, "input snapshots csv")
        ->required();
    render_cmd->add_option("--out", render_opt.out, "output svg path")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed()) return command_run(run_opt);
        if (sweep_cmd->parsed()) return command_sweep(sweep_opt);
        if (verify_cmd->parsed()) return command_verify_tau(verify_opt);
        if (render_cmd->parsed()) return command_render(render_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
