#include "acca/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

namespace acca {

void SimulationParams::validate() const {
    const Topology topo = topology();  // throws on a bad (boundary, n)
    step_params().validate(topo);
    if (steps < 0) {
        throw std::invalid_argument("SimulationParams: steps must be >= 0");
    }
    if (record_stride < 0) {
        throw std::invalid_argument("SimulationParams: record_stride must be >= 1");
    }
    if (stop_when_r_above && !(*stop_when_r_above > 0.0)) {
        throw std::invalid_argument("SimulationParams: stop threshold must be positive");
    }
    for (long long t : snapshot_times) {
        if (t < 0 || t > steps) {
            throw std::invalid_argument("SimulationParams: snapshot time outside [0, steps]");
        }
    }
}

namespace {

Configuration initial_configuration(const SimulationParams& p, Rng& rng) {
    switch (p.initializer) {
        case InitializerKind::UniformRandom:
            return random_configuration(p.n, rng);
        case InitializerKind::WindingLattice:
            return ideal_winding_lattice(p.n, p.winding_w, p.winding_alpha).config;
    }
    throw std::invalid_argument("SimulationParams: unknown initializer");
}

ObservableRecord observe(long long t, const Configuration& c, const Topology& topo) {
    ObservableRecord rec;
    rec.t = t;
    const KuramotoOrder k = kuramoto(c);
    rec.r = k.r;
    if (k.psi) rec.psi = k.psi->radians();
    rec.y = y_projection(c);
    rec.tau1 = tau1_config(c);
    if (topo.kind() == BoundaryKind::Ring) {
        rec.winding = winding_number_rounded(c, topo);
    }
    return rec;
}

}  // namespace

TimeSeries run_simulation(const SimulationParams& params) {
    params.validate();

    const Topology topo = params.topology();
    const long long stride = params.effective_stride();

    std::vector<long long> snap_times = params.snapshot_times;
    std::sort(snap_times.begin(), snap_times.end());
    snap_times.erase(std::unique(snap_times.begin(), snap_times.end()),
                     snap_times.end());

    Rng rng(params.seed);
    Configuration c = initial_configuration(params, rng);
    ParallelStepper stepper(topo, params.step_params());

    TimeSeries ts;
    ts.records.reserve(static_cast<size_t>(params.steps / stride) + 1);

    auto wants_snapshot = [&](long long t, bool recorded) {
        if (params.snapshot_every_record && recorded) return true;
        return std::binary_search(snap_times.begin(), snap_times.end(), t);
    };
    auto record_at = [&](long long t) -> const ObservableRecord& {
        ts.records.push_back(observe(t, c, topo));
        return ts.records.back();
    };

    const ObservableRecord& first = record_at(0);
    bool stopped = params.stop_when_r_above && first.r > *params.stop_when_r_above;
    if (wants_snapshot(0, true)) ts.snapshots.emplace_back(0, c);

    for (long long t = 1; t <= params.steps && !stopped; ++t) {
        stepper.step(c, rng);
        const bool recorded = t % stride == 0;
        if (recorded) {
            const ObservableRecord& rec = record_at(t);
            if (params.stop_when_r_above && rec.r > *params.stop_when_r_above) {
                stopped = true;
            }
        }
        if (wants_snapshot(t, recorded)) ts.snapshots.emplace_back(t, c);
    }
    return ts;
}

LateTimeSummary late_time_average(const TimeSeries& ts, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("late_time_average: fraction outside (0, 1]");
    }
    const std::size_t count = ts.records.size();
    const std::size_t window =
        std::min(count, static_cast<std::size_t>(std::ceil(fraction * count)));
    if (window < 2) {
        throw std::invalid_argument("late_time_average: window has fewer than 2 records");
    }
    LateTimeSummary out;
    out.window = window;
    for (std::size_t i = count - window; i < count; ++i) {
        out.mean_r += ts.records[i].r;
        out.mean_abs_y += std::abs(ts.records[i].y);
        out.mean_abs_tau1 += std::abs(ts.records[i].tau1);
    }
    out.mean_r /= static_cast<double>(window);
    out.mean_abs_y /= static_cast<double>(window);
    out.mean_abs_tau1 /= static_cast<double>(window);
    return out;
}

std::vector<double> moving_average(std::span<const double> xs, int window) {
    if (window < 1) {
        throw std::invalid_argument("moving_average: window must be >= 1");
    }
    std::vector<double> out(xs.size());
    double running = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        running += xs[i];
        if (i >= static_cast<std::size_t>(window)) {
            running -= xs[i - window];
            out[i] = running / window;
        } else {
            out[i] = running / static_cast<double>(i + 1);
        }
    }
    return out;
}

int count_plateau_flips(std::span<const double> y, int smooth_window, double band) {
    const std::vector<double> smooth = moving_average(y, smooth_window);
    int flips = 0;
    int state = 0;  // -1, 0 (no plateau yet), +1
    for (double v : smooth) {
        if (v > band) {
            if (state == -1) ++flips;
            state = 1;
        } else if (v < -band) {
            if (state == 1) ++flips;
            state = -1;
        }
    }
    return flips;
}

std::uint64_t cell_seed(std::uint64_t base_seed, const SweepCell& cell, int replicate) {
    // Hash of the cell contents, not its grid position: extending a
    // grid never perturbs the streams of cells that were already in it.
    return derive_seed(base_seed, cell.boundary == BoundaryKind::Ring ? 1u : 0u,
                       std::bit_cast<std::uint64_t>(cell.epsilon),
                       static_cast<std::uint64_t>(cell.k_mid),
                       static_cast<std::uint64_t>(cell.k_noise),
                       static_cast<std::uint64_t>(replicate));
}

namespace {

struct ReplicateSlot {
    bool ok = false;
    LateTimeSummary summary;
    std::string error;
};

SweepCellStats aggregate_cell(const SweepCell& cell,
                              std::span<const ReplicateSlot> slots) {
    SweepCellStats stats;
    stats.cell = cell;
    std::vector<const LateTimeSummary*> good;
    for (const auto& s : slots) {
        if (s.ok) {
            good.push_back(&s.summary);
        } else if (!stats.error) {
            stats.error = s.error;
        }
    }
    stats.replicates = static_cast<int>(good.size());
    if (good.empty()) return stats;

    auto mean_of = [&](auto field) {
        double sum = 0.0;
        for (const auto* s : good) sum += s->*field;
        return sum / static_cast<double>(good.size());
    };
    stats.mean_r = mean_of(&LateTimeSummary::mean_r);
    stats.mean_abs_y = mean_of(&LateTimeSummary::mean_abs_y);
    stats.mean_abs_tau1 = mean_of(&LateTimeSummary::mean_abs_tau1);

    if (good.size() >= 2) {
        auto se_of = [&](auto field, double mean) {
            double ss = 0.0;
            for (const auto* s : good) {
                const double d = s->*field - mean;
                ss += d * d;
            }
            const auto m = static_cast<double>(good.size());
            return std::sqrt(ss / (m - 1.0) / m);
        };
        stats.se_r = se_of(&LateTimeSummary::mean_r, stats.mean_r);
        stats.se_abs_y = se_of(&LateTimeSummary::mean_abs_y, stats.mean_abs_y);
        stats.se_abs_tau1 = se_of(&LateTimeSummary::mean_abs_tau1, stats.mean_abs_tau1);
    }
    return stats;
}

}  // namespace

SweepResult sweep(const SweepGrid& grid, int replicates,
                  const SimulationParams& base, double late_fraction,
                  int threads) {
    if (grid.empty()) {
        throw std::invalid_argument("sweep: empty grid");
    }
    if (replicates < 1) {
        throw std::invalid_argument("sweep: replicates must be >= 1");
    }

    std::vector<SweepCell> cells;
    for (BoundaryKind b : grid.boundaries) {
        for (double eps : grid.epsilons) {
            for (int km : grid.k_mids) {
                for (int kn : grid.k_noises) {
                    cells.push_back(SweepCell{b, eps, km, kn});
                }
            }
        }
    }

    std::vector<std::vector<ReplicateSlot>> slots(
        cells.size(), std::vector<ReplicateSlot>(static_cast<size_t>(replicates)));

    auto run_one = [&](std::size_t cell_idx, int rep) {
        const SweepCell& cell = cells[cell_idx];
        ReplicateSlot& slot = slots[cell_idx][static_cast<size_t>(rep)];
        try {
            SimulationParams p = base;
            p.boundary = cell.boundary;
            p.epsilon = cell.epsilon;
            p.k_mid = cell.k_mid;
            p.k_noise = cell.k_noise;
            p.seed = cell_seed(base.seed, cell, rep);
            const TimeSeries ts = run_simulation(p);
            slot.summary = late_time_average(ts, late_fraction);
            slot.ok = true;
        } catch (const std::exception& e) {
            slot.error = e.what();
        }
    };

    const std::size_t jobs = cells.size() * static_cast<size_t>(replicates);
    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(jobs)));

    if (workers == 1) {
        for (std::size_t j = 0; j < jobs; ++j) {
            run_one(j / replicates, static_cast<int>(j % replicates));
        }
    } else {
        // Per-job result slots make aggregation independent of the
        // scheduling, so worker count never changes the output.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t j = next.fetch_add(1); j < jobs; j = next.fetch_add(1)) {
                    run_one(j / replicates, static_cast<int>(j % replicates));
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    SweepResult result;
    result.cells.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        result.cells.push_back(aggregate_cell(cells[i], slots[i]));
    }
    return result;
}

}  // namespace acca
