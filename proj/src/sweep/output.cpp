// Copyright 2026 The lzs-lattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lzs/sweep/output.hpp"

#include <cfenv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "lzs/error.hpp"

namespace lzs::sweep {

namespace {

std::string g12(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void check_shape(const HeatmapResult& r) {
    if (r.x.values.empty() || r.y.values.empty()) throw ConfigError("output: empty axis");
    if (r.values.size() != r.nx() * r.ny()) throw ConfigError("output: value matrix does not match the axes");
}

}  // namespace

void write_csv(const HeatmapResult& r, const std::string& path) {
    check_shape(r);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_csv: cannot open " + path);
    for (const auto& [k, v] : r.metadata) out << "# " << k << '=' << v << '\n';
    out << "# columns=" << r.x.name << ',' << r.y.name << ",value\n";
    for (std::size_t iy = 0; iy < r.ny(); ++iy)
        for (std::size_t ix = 0; ix < r.nx(); ++ix)
            out << g12(r.x.values[ix]) << ',' << g12(r.y.values[iy]) << ',' << g12(r.at(ix, iy)) << '\n';
    if (!out) throw Error("write_csv: write failed for " + path);
}

HeatmapResult read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("read_csv: cannot open " + path);
    HeatmapResult r;
    std::vector<double> xs, ys, vs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (line.size() < 2 || eq == std::string::npos) continue;
            const std::string key = line.substr(2, eq - 2);
            const std::string value = line.substr(eq + 1);
            if (key == "columns") {
                const auto c1 = value.find(',');
                const auto c2 = value.find(',', c1 + 1);
                r.x.name = value.substr(0, c1);
                r.y.name = value.substr(c1 + 1, c2 - c1 - 1);
            } else {
                r.metadata.emplace_back(key, value);
            }
            continue;
        }
        std::istringstream row(line);
        std::string a, b, c;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c))
            throw Error("read_csv: malformed row in " + path + ": " + line);
        xs.push_back(std::stod(a));
        ys.push_back(std::stod(b));
        vs.push_back(c == "nan" ? std::nan("") : std::stod(c));
    }
    // Rows are x-fastest; the x axis is the run until y changes.
    std::size_t nx = 0;
    while (nx < ys.size() && ys[nx] == ys.front()) ++nx;
    if (nx == 0 || vs.size() % nx != 0) throw Error("read_csv: inconsistent grid in " + path);
    r.x.values.assign(xs.begin(), xs.begin() + static_cast<long>(nx));
    for (std::size_t i = 0; i < ys.size(); i += nx) r.y.values.push_back(ys[i]);
    r.values = vs;
    for (double v : vs)
        if (std::isnan(v)) ++r.missing;
    return r;
}

std::vector<std::uint8_t> heatmap_levels(const HeatmapResult& r, Scale scale, double log_floor) {
    check_shape(r);
    if (scale == Scale::Log && !(log_floor > 0.0 && log_floor < 1.0))
        throw ConfigError("heatmap: log floor must lie in (0, 1)");
    std::fesetround(FE_TONEAREST);
    std::vector<std::uint8_t> out;
    out.reserve(r.values.size());
    const double decades = -std::log10(log_floor);
    for (std::size_t row = 0; row < r.ny(); ++row) {
        const std::size_t iy = r.ny() - 1 - row;
        for (std::size_t ix = 0; ix < r.nx(); ++ix) {
            const double v = r.at(ix, iy);
            if (!std::isfinite(v)) {
                out.push_back(0);
                continue;
            }
            double u = std::clamp(v, 0.0, 1.0);
            if (scale == Scale::Log) u = (std::log10(std::max(u, log_floor)) + decades) / decades;
            out.push_back(static_cast<std::uint8_t>(std::nearbyint(255.0 * u)));
        }
    }
    return out;
}

std::array<std::uint8_t, 3> rainbow(std::uint8_t level) {
    // Hue sweeps 240 deg (blue) -> 0 deg (red) at full saturation and value.
    const double h = 240.0 * (1.0 - level / 255.0) / 60.0;
    const int sector = std::min(static_cast<int>(h), 3);
    const double f = h - sector;
    const auto byte = [](double v) { return static_cast<std::uint8_t>(std::lround(255.0 * v)); };
    switch (sector) {
        case 0: return {255, byte(f), 0};
        case 1: return {byte(1.0 - f), 255, 0};
        case 2: return {0, 255, byte(f)};
        default: return {0, byte(1.0 - f), 255};
    }
}

std::size_t write_heatmap(const HeatmapResult& r, const std::string& path, Scale scale, Palette palette,
                          double log_floor) {
    const auto levels = heatmap_levels(r, scale, log_floor);
    std::size_t non_finite = 0;
    for (double v : r.values)
        if (!std::isfinite(v)) ++non_finite;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_heatmap: cannot open " + path);
    out << (palette == Palette::Gray ? "P5" : "P6") << '\n';
    out << "# " << (scale == Scale::Linear ? "linear: level = nearbyint(255 v)"
                                            : "log: level = nearbyint(255 (log10 max(v, floor) - log10 floor) / -log10 floor), floor = " + g12(log_floor))
        << '\n';
    out << "# rows: top = max " << r.y.name << ", columns: left = min " << r.x.name << '\n';
    out << r.nx() << ' ' << r.ny() << "\n255\n";
    for (std::uint8_t level : levels) {
        if (palette == Palette::Gray) {
            out.put(static_cast<char>(level));
        } else {
            const auto rgb = rainbow(level);
            out.write(reinterpret_cast<const char*>(rgb.data()), 3);
        }
    }
    if (!out) throw Error("write_heatmap: write failed for " + path);
    return non_finite;
}

}  // namespace lzs::sweep
