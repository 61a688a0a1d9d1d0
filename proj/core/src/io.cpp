#include "acca/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace acca::io {

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("csv: bad ") + what + " field: '" + s + "'");
    }
}

long long parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("csv: bad ") + what + " field: '" + s + "'");
    }
}

}  // namespace

void write_series_csv(std::ostream& os, const TimeSeries& ts) {
    os << "t,R,psi,Y,tau1,W\n";
    for (const ObservableRecord& rec : ts.records) {
        os << rec.t << ',' << format_number(rec.r) << ',';
        if (rec.psi) os << format_number(*rec.psi);
        os << ',' << format_number(rec.y) << ',' << format_number(rec.tau1) << ',';
        if (rec.winding) os << *rec.winding;
        os << '\n';
    }
}

std::vector<ObservableRecord> read_series_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || split_csv_line(line) !=
        std::vector<std::string>{"t", "R", "psi", "Y", "tau1", "W"}) {
        throw std::runtime_error("series csv: bad header");
    }
    std::vector<ObservableRecord> records;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 6) throw std::runtime_error("series csv: bad row");
        ObservableRecord rec;
        rec.t = parse_int(f[0], "t");
        rec.r = parse_double(f[1], "R");
        if (!f[2].empty()) rec.psi = parse_double(f[2], "psi");
        rec.y = parse_double(f[3], "Y");
        rec.tau1 = parse_double(f[4], "tau1");
        if (!f[5].empty()) rec.winding = static_cast<int>(parse_int(f[5], "W"));
        records.push_back(rec);
    }
    return records;
}

void write_snapshots_csv(std::ostream& os, const TimeSeries& ts, int n) {
    os << 't';
    for (int i = 1; i <= n; ++i) os << ",theta_" << i;
    os << '\n';
    for (const auto& [t, config] : ts.snapshots) {
        os << t;
        for (Angle a : config.angles()) os << ',' << format_number(a.radians());
        os << '\n';
    }
}

SnapshotTable read_snapshots_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw std::runtime_error("snapshots csv: empty file");
    }
    const auto header = split_csv_line(line);
    if (header.size() < 3 || header[0] != "t") {
        throw std::runtime_error("snapshots csv: bad header");
    }
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i] != "theta_" + std::to_string(i)) {
            throw std::runtime_error("snapshots csv: bad header");
        }
    }
    SnapshotTable table;
    table.n = static_cast<int>(header.size()) - 1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != header.size()) {
            throw std::runtime_error("snapshots csv: bad row");
        }
        std::vector<double> angles;
        angles.reserve(static_cast<size_t>(table.n));
        for (std::size_t i = 1; i < f.size(); ++i) {
            angles.push_back(parse_double(f[i], "theta"));
        }
        table.rows.emplace_back(parse_int(f[0], "t"), std::move(angles));
    }
    return table;
}

namespace {

void write_sweep_row(std::ostream& os, const SweepCellStats& s) {
    auto opt = [](const std::optional<double>& v) {
        return v ? format_number(*v) : std::string();
    };
    os << to_string(s.cell.boundary) << ',' << format_number(s.cell.epsilon) << ','
       << s.cell.k_mid << ',' << s.cell.k_noise << ',' << format_number(s.mean_r)
       << ',' << opt(s.se_r) << ',' << format_number(s.mean_abs_y) << ','
       << opt(s.se_abs_y) << ',' << format_number(s.mean_abs_tau1) << ','
       << opt(s.se_abs_tau1) << ',' << s.replicates << '\n';
}

}  // namespace

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
    os << "topology,epsilon,k_mid,k_noise,mean_R,se_R,mean_absY,se_absY,"
          "mean_absTau1,se_absTau1,replicates\n";
    for (const SweepCellStats& s : result.cells) {
        if (s.error) continue;
        write_sweep_row(os, s);
    }
}

void write_sweep_errors(std::ostream& os, const SweepResult& result) {
    for (const SweepCellStats& s : result.cells) {
        if (!s.error) continue;
        os << to_string(s.cell.boundary) << ',' << format_number(s.cell.epsilon)
           << ',' << s.cell.k_mid << ',' << s.cell.k_noise << ": " << *s.error
           << '\n';
    }
}

bool sweep_has_errors(const SweepResult& result) {
    for (const SweepCellStats& s : result.cells) {
        if (s.error) return true;
    }
    return false;
}

double angle_to_hue(double theta) { return (theta + kPi) / kTwoPi; }

double hue_to_angle(double hue) { return hue * kTwoPi - kPi; }

Rgb hue_to_rgb(double hue) {
    hue -= std::floor(hue);
    const double h6 = hue * 6.0;
    const double x = 1.0 - std::abs(std::fmod(h6, 2.0) - 1.0);
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
    switch (static_cast<int>(h6)) {
        case 0: r = 1.0; g = x; break;
        case 1: r = x; g = 1.0; break;
        case 2: g = 1.0; b = x; break;
        case 3: g = x; b = 1.0; break;
        case 4: r = x; b = 1.0; break;
        default: r = 1.0; b = x; break;
    }
    auto byte = [](double v) {
        return static_cast<std::uint8_t>(std::lround(v * 255.0));
    };
    return Rgb{byte(r), byte(g), byte(b)};
}

Rgb scalar_to_rgb(double v) {
    // Compact viridis-like ramp, dark blue to yellow.
    static constexpr double stops[5][3] = {
        {0.267, 0.005, 0.329},
        {0.229, 0.322, 0.546},
        {0.128, 0.567, 0.551},
        {0.369, 0.789, 0.383},
        {0.993, 0.906, 0.144},
    };
    v = std::clamp(v, 0.0, 1.0);
    const double pos = v * 4.0;
    const int lo = std::min(3, static_cast<int>(pos));
    const double f = pos - lo;
    auto byte = [&](int c) {
        const double mixed = stops[lo][c] * (1.0 - f) + stops[lo + 1][c] * f;
        return static_cast<std::uint8_t>(std::lround(mixed * 255.0));
    };
    return Rgb{byte(0), byte(1), byte(2)};
}

std::string rgb_hex(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

std::string angle_heatmap_svg(const SnapshotTable& table) {
    if (table.n < 1 || table.rows.empty()) {
        throw std::invalid_argument("angle_heatmap_svg: empty raster");
    }
    const std::size_t rows = table.rows.size();
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << table.n
       << "\" height=\"" << rows << "\" viewBox=\"0 0 " << table.n << ' ' << rows
       << "\" shape-rendering=\"crispEdges\">\n";
    for (std::size_t row = 0; row < rows; ++row) {
        const auto& angles = table.rows[row].second;
        for (int site = 0; site < table.n; ++site) {
            const Rgb c = hue_to_rgb(angle_to_hue(angles[static_cast<size_t>(site)]));
            os << "<rect x=\"" << site << "\" y=\"" << row
               << "\" width=\"1\" height=\"1\" fill=\"" << rgb_hex(c) << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string sweep_heatmap_svg(const SweepResult& result, BoundaryKind boundary,
                              double epsilon, const std::string& metric) {
    std::vector<int> k_mids;
    std::vector<int> k_noises;
    auto remember = [](std::vector<int>& xs, int v) {
        for (int x : xs) {
            if (x == v) return;
        }
        xs.push_back(v);
    };
    auto value_of = [&](const SweepCellStats& s) {
        if (metric == "R") return s.mean_r;
        if (metric == "absY") return s.mean_abs_y;
        if (metric == "absTau1") return s.mean_abs_tau1;
        throw std::invalid_argument("sweep_heatmap_svg: unknown metric " + metric);
    };
    std::vector<const SweepCellStats*> slice;
    for (const SweepCellStats& s : result.cells) {
        if (s.cell.boundary != boundary || s.cell.epsilon != epsilon || s.error) {
            continue;
        }
        slice.push_back(&s);
        remember(k_mids, s.cell.k_mid);
        remember(k_noises, s.cell.k_noise);
    }
    if (slice.empty()) {
        throw std::invalid_argument("sweep_heatmap_svg: no cells in slice");
    }
    std::sort(k_mids.begin(), k_mids.end());
    std::sort(k_noises.begin(), k_noises.end());

    const int cell = 48;
    const int margin = 56;
    const int width = margin + cell * static_cast<int>(k_mids.size()) + 12;
    const int height = margin / 2 + cell * static_cast<int>(k_noises.size()) + margin;

    auto x_of = [&](int km) {
        const auto it = std::find(k_mids.begin(), k_mids.end(), km);
        return margin + cell * static_cast<int>(it - k_mids.begin());
    };
    // k_noise grows upward from the bottom-left origin.
    auto y_of = [&](int kn) {
        const auto it = std::find(k_noises.begin(), k_noises.end(), kn);
        const int iy = static_cast<int>(it - k_noises.begin());
        return margin / 2 + cell * (static_cast<int>(k_noises.size()) - 1 - iy);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    os << "<text x=\"" << margin << "\" y=\"16\" font-size=\"13\">" << metric
       << ", " << to_string(boundary) << ", epsilon=" << format_number(epsilon)
       << "</text>\n";
    for (const SweepCellStats* s : slice) {
        const Rgb c = scalar_to_rgb(value_of(*s));
        os << "<rect x=\"" << x_of(s->cell.k_mid) << "\" y=\"" << y_of(s->cell.k_noise)
           << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
           << rgb_hex(c) << "\"><title>" << format_number(value_of(*s))
           << "</title></rect>\n";
    }
    const int axis_y = margin / 2 + cell * static_cast<int>(k_noises.size());
    for (int km : k_mids) {
        os << "<text x=\"" << x_of(km) + cell / 2 << "\" y=\"" << axis_y + 16
           << "\" font-size=\"11\" text-anchor=\"middle\">" << km << "</text>\n";
    }
    for (int kn : k_noises) {
        os << "<text x=\"" << margin - 8 << "\" y=\"" << y_of(kn) + cell / 2 + 4
           << "\" font-size=\"11\" text-anchor=\"end\">" << kn << "</text>\n";
    }
    os << "<text x=\"" << margin << "\" y=\"" << axis_y + 34
       << "\" font-size=\"12\">k_mid (right), k_noise (up)</text>\n";
    os << "</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (os) {
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        os.flush();
    }
    if (!os) {
        os.close();
        std::remove(path.c_str());
        throw std::runtime_error("cannot write " + path);
    }
}

}  // namespace acca::io
