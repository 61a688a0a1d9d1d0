#ifndef ACCA_HARNESS_HPP
#define ACCA_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acca/dynamics.hpp"
#include "acca/observables.hpp"

namespace acca {

enum class InitializerKind { UniformRandom, WindingLattice };

// Everything one trajectory needs. A run is a pure function of this
// struct: the seed feeds a private Rng, the initializer consumes the
// first draws (n of them for UniformRandom, none for WindingLattice),
// and every later draw follows the steppers' fixed order.
struct SimulationParams {
    int n = 100;
    BoundaryKind boundary = BoundaryKind::Ring;
    double epsilon = 0.0;
    int k_mid = 1;
    int k_noise = 1;
    long long steps = 0;
    long long record_stride = 0;  // 0 means the default of one sweep (n steps)
    std::uint64_t seed = 0;
    InitializerKind initializer = InitializerKind::UniformRandom;
    int winding_w = 2;
    Angle winding_alpha;

    // Stop early once a record has r above this value (consensus runs).
    std::optional<double> stop_when_r_above;

    // Configuration snapshots: at these step indices, and/or at every
    // recorded step (the space-time raster needs the latter).
    std::vector<long long> snapshot_times;
    bool snapshot_every_record = false;

    Topology topology() const { return Topology(boundary, n); }
    StepParams step_params() const { return StepParams{epsilon, k_mid, k_noise}; }
    long long effective_stride() const {
        return record_stride > 0 ? record_stride : n;
    }

    void validate() const;
};

struct ObservableRecord {
    long long t = 0;
    double r = 0.0;
    std::optional<double> psi;  // absent when r is numerically zero
    double y = 0.0;
    double tau1 = 0.0;
    std::optional<int> winding;  // absent on the path
};

struct TimeSeries {
    std::vector<ObservableRecord> records;
    std::vector<std::pair<long long, Configuration>> snapshots;
};

// Initializes per the params, applies `steps` parallel steps, and
// records the observables every record_stride steps, t = 0 included.
// Without an early stop, the record count is steps / stride + 1.
TimeSeries run_simulation(const SimulationParams& params);

struct LateTimeSummary {
    double mean_r = 0.0;
    double mean_abs_y = 0.0;
    double mean_abs_tau1 = 0.0;
    std::size_t window = 0;  // number of records averaged
};

// Means of R, |Y|, |tau1| over the final `fraction` of the records.
// The window must contain at least 2 records.
LateTimeSummary late_time_average(const TimeSeries& ts, double fraction = 0.2);

// Trailing moving average with a growing prefix window.
std::vector<double> moving_average(std::span<const double> xs, int window);

// Number of transitions of the smoothed series between the two
// hysteresis plateaus y > band and y < -band. A flip is counted only
// when a plateau of the opposite sign had been reached before.
int count_plateau_flips(std::span<const double> y, int smooth_window = 50,
                        double band = 0.5);

struct SweepGrid {
    std::vector<BoundaryKind> boundaries;
    std::vector<double> epsilons;
    std::vector<int> k_mids;
    std::vector<int> k_noises;

    bool empty() const {
        return boundaries.empty() || epsilons.empty() || k_mids.empty() ||
               k_noises.empty();
    }
};

struct SweepCell {
    BoundaryKind boundary = BoundaryKind::Path;
    double epsilon = 0.0;
    int k_mid = 1;
    int k_noise = 0;
};

struct SweepCellStats {
    SweepCell cell;
    int replicates = 0;
    double mean_r = 0.0;
    double mean_abs_y = 0.0;
    double mean_abs_tau1 = 0.0;
    // Standard errors over replicates; absent with fewer than 2.
    std::optional<double> se_r;
    std::optional<double> se_abs_y;
    std::optional<double> se_abs_tau1;
    // Set when the cell is invalid or a replicate failed; the other
    // cells still run.
    std::optional<std::string> error;
};

struct SweepResult {
    std::vector<SweepCellStats> cells;
};

// One run per (cell, replicate), each with a seed derived by stable
// mixing of the base seed, the cell parameters, and the replicate
// index, so results do not depend on the grid layout, the execution
// order, or the worker count. threads == 0 uses the hardware count.
SweepResult sweep(const SweepGrid& grid, int replicates,
                  const SimulationParams& base, double late_fraction = 0.2,
                  int threads = 0);

std::uint64_t cell_seed(std::uint64_t base_seed, const SweepCell& cell,
                        int replicate);

}  // namespace acca

#endif  // ACCA_HARNESS_HPP
