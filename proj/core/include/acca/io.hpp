#ifndef ACCA_IO_HPP
#define ACCA_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "acca/harness.hpp"

namespace acca::io {

// All numeric CSV fields are written with 12 significant digits.
std::string format_number(double v);

// series.csv: header t,R,psi,Y,tau1,W; one row per record. psi is
// empty while the order parameter is undefined; W is empty on the path.
void write_series_csv(std::ostream& os, const TimeSeries& ts);
std::vector<ObservableRecord> read_series_csv(std::istream& is);

// snapshots.csv: header t,theta_1,...,theta_N (sites are labelled from
// 1 in file headers); one row per stored configuration.
struct SnapshotTable {
    int n = 0;
    std::vector<std::pair<long long, std::vector<double>>> rows;
};

void write_snapshots_csv(std::ostream& os, const TimeSeries& ts, int n);
SnapshotTable read_snapshots_csv(std::istream& is);

// sweep.csv: header topology,epsilon,k_mid,k_noise,mean_R,se_R,
// mean_absY,se_absY,mean_absTau1,se_absTau1,replicates. Failed cells
// are skipped here and listed in the .errors sidecar instead.
void write_sweep_csv(std::ostream& os, const SweepResult& result);
void write_sweep_errors(std::ostream& os, const SweepResult& result);
bool sweep_has_errors(const SweepResult& result);

// Cyclic colour coding of angles: hue = (theta + pi) / (2 pi) is a
// bijection [-pi, pi) -> [0, 1), so the colour wheel closes seamlessly
// at the +-pi cut.
double angle_to_hue(double theta);
double hue_to_angle(double hue);

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
};

Rgb hue_to_rgb(double hue);         // full-saturation colour wheel
Rgb scalar_to_rgb(double v);        // sequential map for values in [0, 1]
std::string rgb_hex(Rgb c);

// Space-time raster: one column per site (n columns), one row per
// stored configuration, earliest at the top. Angles are coloured by
// the cyclic hue wheel.
std::string angle_heatmap_svg(const SnapshotTable& table);

// One panel per metric for a fixed (topology, epsilon) slice: cells
// indexed by (k_mid, k_noise) with both axes increasing away from the
// bottom-left origin.
std::string sweep_heatmap_svg(const SweepResult& result, BoundaryKind boundary,
                              double epsilon, const std::string& metric);

// Writes content to path; on any failure removes the partial file and
// throws std::runtime_error.
void write_file(const std::string& path, const std::string& content);

}  // namespace acca::io

#endif  // ACCA_IO_HPP
