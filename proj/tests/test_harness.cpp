#include <doctest.h>

#include <cmath>
#include <vector>

#include "acca/harness.hpp"

using namespace acca;

namespace {

SimulationParams small_ring_params() {
    SimulationParams p;
    p.n = 20;
    p.boundary = BoundaryKind::Ring;
    p.epsilon = 0.01;
    p.k_mid = 2;
    p.k_noise = 2;
    p.steps = 400;
    p.record_stride = 20;
    p.seed = 0x5eed0501;
    p.initializer = InitializerKind::UniformRandom;
    return p;
}

TimeSeries synthetic_series(const std::vector<double>& r, const std::vector<double>& y,
                            const std::vector<double>& tau1) {
    TimeSeries ts;
    for (std::size_t i = 0; i < r.size(); ++i) {
        ObservableRecord rec;
        rec.t = static_cast<long long>(i);
        rec.r = r[i];
        rec.y = y[i];
        rec.tau1 = tau1[i];
        ts.records.push_back(rec);
    }
    return ts;
}

}  // namespace

TEST_CASE("run_simulation record layout") {
    SimulationParams p = small_ring_params();
    const TimeSeries ts = run_simulation(p);

    CHECK(ts.records.size() == 400 / 20 + 1);
    CHECK(ts.records.front().t == 0);
    CHECK(ts.records.back().t == 400);
    for (std::size_t i = 1; i < ts.records.size(); ++i) {
        CHECK(ts.records[i].t > ts.records[i - 1].t);
    }
    for (const auto& rec : ts.records) {
        CHECK(rec.winding.has_value());  // ring run
    }
}

TEST_CASE("steps 0 produces the single initial record") {
    SimulationParams p = small_ring_params();
    p.steps = 0;
    const TimeSeries ts = run_simulation(p);
    CHECK(ts.records.size() == 1);
    CHECK(ts.records.front().t == 0);
}

TEST_CASE("path runs never emit a winding value") {
    SimulationParams p = small_ring_params();
    p.boundary = BoundaryKind::Path;
    const TimeSeries ts = run_simulation(p);
    for (const auto& rec : ts.records) CHECK_FALSE(rec.winding.has_value());
}

TEST_CASE("records recompute exactly from stored snapshots") {
    SimulationParams p = small_ring_params();
    p.snapshot_every_record = true;
    const TimeSeries ts = run_simulation(p);
    REQUIRE(ts.snapshots.size() == ts.records.size());
    const Topology topo = p.topology();
    for (std::size_t i = 0; i < ts.records.size(); ++i) {
        const auto& [t, config] = ts.snapshots[i];
        const auto& rec = ts.records[i];
        CHECK(t == rec.t);
        CHECK(kuramoto(config).r == rec.r);
        CHECK(y_projection(config) == rec.y);
        CHECK(tau1_config(config) == rec.tau1);
        CHECK(winding_number_rounded(config, topo) == *rec.winding);
    }
}

TEST_CASE("snapshots at explicit times") {
    SimulationParams p = small_ring_params();
    p.snapshot_times = {0, 60, 400};
    const TimeSeries ts = run_simulation(p);
    REQUIRE(ts.snapshots.size() == 3);
    CHECK(ts.snapshots[0].first == 0);
    CHECK(ts.snapshots[1].first == 60);
    CHECK(ts.snapshots[2].first == 400);
}

TEST_CASE("winding lattice initializer pins the initial record") {
    SimulationParams p = small_ring_params();
    p.n = 100;
    p.epsilon = 0.0;
    p.k_mid = 1;
    p.k_noise = 0;
    p.steps = 100;
    p.record_stride = 50;
    p.initializer = InitializerKind::WindingLattice;
    p.winding_w = 2;
    const TimeSeries ts = run_simulation(p);
    CHECK(*ts.records.front().winding == 2);
    CHECK(ts.records.front().r < 1e-9);  // full turns cancel
}

TEST_CASE("stop condition truncates the series") {
    SimulationParams p;
    p.n = 8;
    p.boundary = BoundaryKind::Path;
    p.epsilon = 0.0;
    p.k_mid = 1;
    p.k_noise = 0;
    p.steps = 200000;
    p.record_stride = 8;
    p.seed = 0x5eed0502;
    p.stop_when_r_above = 0.999;
    const TimeSeries ts = run_simulation(p);
    CHECK(ts.records.size() < 200000 / 8 + 1);
    CHECK(ts.records.back().r > 0.999);
}

TEST_CASE("invalid simulation parameters are rejected before stepping") {
    SimulationParams p = small_ring_params();
    p.k_mid = 11;
    CHECK_THROWS_AS(run_simulation(p), std::invalid_argument);
    p = small_ring_params();
    p.steps = -1;
    CHECK_THROWS_AS(run_simulation(p), std::invalid_argument);
    p = small_ring_params();
    p.snapshot_times = {500};
    CHECK_THROWS_AS(run_simulation(p), std::invalid_argument);
    p = small_ring_params();
    p.epsilon = 1.2;
    CHECK_THROWS_AS(run_simulation(p), std::invalid_argument);
}

TEST_CASE("late time average windows") {
    const std::vector<double> r(10, 0.7);
    std::vector<double> y(10, 1.0);
    for (int i = 5; i < 10; ++i) y[static_cast<size_t>(i)] = -1.0;
    const std::vector<double> tau(10, -0.5);
    const TimeSeries ts = synthetic_series(r, y, tau);

    const LateTimeSummary s = late_time_average(ts, 0.2);
    CHECK(s.window == 2);
    CHECK(s.mean_r == doctest::Approx(0.7));
    CHECK(s.mean_abs_y == doctest::Approx(1.0));  // abs before averaging
    CHECK(s.mean_abs_tau1 == doctest::Approx(0.5));

    const LateTimeSummary full = late_time_average(ts, 1.0);
    CHECK(full.window == 10);
    CHECK(full.mean_abs_y == doctest::Approx(1.0));

    CHECK_THROWS_AS(late_time_average(ts, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(late_time_average(ts, 1.5), std::invalid_argument);
    const TimeSeries tiny = synthetic_series({0.1}, {0.0}, {0.0});
    CHECK_THROWS_AS(late_time_average(tiny, 1.0), std::invalid_argument);
}

TEST_CASE("moving average uses a growing prefix window") {
    const std::vector<double> xs{2.0, 4.0, 6.0, 8.0};
    const auto smooth = moving_average(xs, 2);
    CHECK(smooth[0] == doctest::Approx(2.0));
    CHECK(smooth[1] == doctest::Approx(3.0));
    CHECK(smooth[2] == doctest::Approx(5.0));
    CHECK(smooth[3] == doctest::Approx(7.0));
}

TEST_CASE("plateau flip counting with hysteresis") {
    std::vector<double> quiet(300, 0.1);
    CHECK(count_plateau_flips(quiet, 10, 0.5) == 0);

    std::vector<double> one_flip;
    for (int i = 0; i < 200; ++i) one_flip.push_back(0.9);
    for (int i = 0; i < 200; ++i) one_flip.push_back(-0.9);
    CHECK(count_plateau_flips(one_flip, 10, 0.5) == 1);

    std::vector<double> below_band;
    for (int i = 0; i < 200; ++i) below_band.push_back(0.4);
    for (int i = 0; i < 200; ++i) below_band.push_back(-0.4);
    CHECK(count_plateau_flips(below_band, 10, 0.5) == 0);

    std::vector<double> two_flips;
    for (int i = 0; i < 200; ++i) two_flips.push_back(-0.8);
    for (int i = 0; i < 200; ++i) two_flips.push_back(0.8);
    for (int i = 0; i < 200; ++i) two_flips.push_back(-0.8);
    CHECK(count_plateau_flips(two_flips, 10, 0.5) == 2);
}

TEST_CASE("sweep is deterministic and independent of worker count") {
    SweepGrid grid;
    grid.boundaries = {BoundaryKind::Path, BoundaryKind::Ring};
    grid.epsilons = {0.01};
    grid.k_mids = {1, 3};
    grid.k_noises = {0, 2};

    SimulationParams base = small_ring_params();
    base.steps = 300;
    base.record_stride = 10;
    base.seed = 0x5eed0503;

    const SweepResult a = sweep(grid, 3, base, 0.2, 1);
    const SweepResult b = sweep(grid, 3, base, 0.2, 2);
    REQUIRE(a.cells.size() == 8);
    REQUIRE(b.cells.size() == 8);
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].mean_r == b.cells[i].mean_r);
        CHECK(a.cells[i].mean_abs_y == b.cells[i].mean_abs_y);
        CHECK(a.cells[i].mean_abs_tau1 == b.cells[i].mean_abs_tau1);
        CHECK(a.cells[i].replicates == 3);
        CHECK(a.cells[i].se_r.has_value());
    }
}

TEST_CASE("adding cells never perturbs existing cells") {
    SweepGrid small;
    small.boundaries = {BoundaryKind::Ring};
    small.epsilons = {0.02};
    small.k_mids = {2};
    small.k_noises = {1};

    SweepGrid larger = small;
    larger.k_mids = {1, 2};
    larger.k_noises = {0, 1};

    SimulationParams base = small_ring_params();
    base.steps = 200;
    base.seed = 0x5eed0504;

    const SweepResult a = sweep(small, 2, base);
    const SweepResult b = sweep(larger, 2, base);
    const auto* match = [&]() -> const SweepCellStats* {
        for (const auto& s : b.cells) {
            if (s.cell.k_mid == 2 && s.cell.k_noise == 1) return &s;
        }
        return nullptr;
    }();
    REQUIRE(match != nullptr);
    CHECK(a.cells[0].mean_r == match->mean_r);
    CHECK(a.cells[0].mean_abs_y == match->mean_abs_y);
    CHECK(a.cells[0].mean_abs_tau1 == match->mean_abs_tau1);
}

TEST_CASE("sweep records per-cell failures and keeps going") {
    SweepGrid grid;
    grid.boundaries = {BoundaryKind::Ring};
    grid.epsilons = {0.01};
    grid.k_mids = {1, 15};  // 15 exceeds the max matching size of n = 20
    grid.k_noises = {1};

    SimulationParams base = small_ring_params();
    base.steps = 100;
    const SweepResult result = sweep(grid, 2, base);
    REQUIRE(result.cells.size() == 2);
    CHECK_FALSE(result.cells[0].error.has_value());
    CHECK(result.cells[1].error.has_value());
    CHECK(result.cells[1].replicates == 0);
}

TEST_CASE("sweep argument validation") {
    SimulationParams base = small_ring_params();
    CHECK_THROWS_AS(sweep(SweepGrid{}, 2, base), std::invalid_argument);
    SweepGrid grid;
    grid.boundaries = {BoundaryKind::Ring};
    grid.epsilons = {0.01};
    grid.k_mids = {1};
    grid.k_noises = {1};
    CHECK_THROWS_AS(sweep(grid, 0, base), std::invalid_argument);
}

TEST_CASE("single-replicate sweeps have no standard errors") {
    SweepGrid grid;
    grid.boundaries = {BoundaryKind::Path};
    grid.epsilons = {0.0};
    grid.k_mids = {1};
    grid.k_noises = {0};
    SimulationParams base = small_ring_params();
    base.steps = 100;
    const SweepResult result = sweep(grid, 1, base);
    REQUIRE(result.cells.size() == 1);
    CHECK(result.cells[0].replicates == 1);
    CHECK_FALSE(result.cells[0].se_r.has_value());
}
