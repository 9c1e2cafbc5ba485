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

#include "lzs/sweep/figure.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "lzs/error.hpp"
#include "lzs/sweep/output.hpp"
#include "lzs/sweep/presets.hpp"
#include "lzs/version.hpp"

namespace lzs::sweep {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

// Band parameters and resonance table at a representative cell.
void describe_reference(std::ostringstream& rep, const SweepConfig& cfg) {
    double rx = 0.5 * (cfg.x.min + cfg.x.max);
    double ry = cfg.y ? 0.5 * (cfg.y->min + cfg.y->max) : 0.0;
    if (cfg.report_point) std::tie(rx, ry) = *cfg.report_point;
    try {
        const CellModel c = resolve_cell(cfg, rx, ry);
        lattice::BandParameters b = c.bands;
        if (c.from_lattice) {
            b = lattice::extract_params(c.spec, cfg.lattice);
            rep << "reference lattice: V1=" << c.spec.V1 << " V2=" << c.spec.V2 << " phi=" << c.spec.phi << '\n';
        }
        rep << std::setprecision(8) << "reference bands: Delta=" << b.Delta << " Ja=" << b.Ja << " Jb=" << b.Jb
            << " J=" << b.J() << " C0=" << b.C0 << '\n';
        rep << "m,Delta/m,F_m,1/F_m,residual,iterations\n";
        for (const auto& r : spectral::resonance_table(b, cfg.m_max))
            rep << r.m << ',' << r.F_m_uncorrected << ',' << r.F_m << ',' << 1.0 / r.F_m << ',' << r.residual << ','
                << r.iterations << '\n';
    } catch (const std::exception& e) {
        rep << "reference cell unavailable: " << e.what() << '\n';
    }
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : embedded_presets()) names.push_back(k);
    return names;
}

SweepConfig preset_config(const std::string& name) {
    const auto& presets = embedded_presets();
    const auto it = presets.find(name);
    if (it == presets.end()) throw ConfigError("unknown preset '" + name + "'");
    return parse_config(it->second);
}

FigureArtifacts run_config(const SweepConfig& cfg, const FigureOptions& opts) {
    std::filesystem::create_directories(opts.out_dir);
    const Engine engine = opts.engine.value_or(cfg.engine);
    const Scale scale = opts.scale.value_or(cfg.scale);
    const Palette palette = opts.palette.value_or(cfg.palette);

    SweepConfig run_cfg = cfg;
    run_cfg.engine = engine;
    FigureArtifacts art;
    std::ostringstream rep;
    rep << "sweep: " << cfg.name << "\nmode: " << to_string(cfg.mode) << "\nengine: " << to_string(engine)
        << "\ncode_version: " << kVersion << "\ntimestamp: " << utc_timestamp() << '\n';

    const auto t0 = std::chrono::steady_clock::now();
    art.results = run_sweep(run_cfg, opts.workers);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto& r : art.results) {
        const std::string tag = r.meta("engine") == "numeric" ? "_numeric" : "";
        const auto base = (std::filesystem::path(opts.out_dir) / (cfg.name + tag)).string();
        write_csv(r, base + ".csv");
        const std::string image = base + (palette == Palette::Gray ? ".pgm" : ".ppm");
        const std::size_t dark = write_heatmap(r, image, scale, palette);
        art.files.push_back(base + ".csv");
        art.files.push_back(image);
        rep << r.meta("engine") << ": " << r.nx() << "x" << r.ny() << " cells, missing=" << r.missing
            << ", non-finite pixels=" << dark << '\n';
        for (const auto& d : r.diagnostics) rep << "  " << d << '\n';
    }
    rep << "runtime_seconds: " << std::fixed << std::setprecision(2) << seconds << std::defaultfloat << '\n';
    describe_reference(rep, cfg);
    rep << "config:\n";
    for (const auto& [k, v] : cfg.provenance) rep << "  " << k << " = " << v << '\n';

    art.report = rep.str();
    const auto report_path = (std::filesystem::path(opts.out_dir) / (cfg.name + "_report.txt")).string();
    std::ofstream out(report_path);
    if (!out) throw Error("run_figure: cannot write " + report_path);
    out << art.report;
    art.files.push_back(report_path);
    return art;
}

FigureArtifacts run_figure(const std::string& preset, const FigureOptions& opts) {
    return run_config(preset_config(preset), opts);
}

}  // namespace lzs::sweep
