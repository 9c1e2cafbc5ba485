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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "lzs/error.hpp"
#include "lzs/sweep/config.hpp"
#include "lzs/sweep/figure.hpp"
#include "lzs/sweep/output.hpp"
#include "lzs/sweep/sweep.hpp"

using namespace lzs::sweep;
namespace fs = std::filesystem;

namespace {

const char* kGrid = R"(
[sweep]
name = small
mode = lzs-grid
[axis.x]
name = Delta
min = 0.5
max = 5
points = 23
[axis.y]
name = J
min = -2
max = 0
points = 9
[fixed]
C0 = -0.15
F = 1
)";

fs::path temp_dir(const std::string& tag) {
    const auto d = fs::temp_directory_path() / ("lzs_test_" + tag);
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

HeatmapResult manual(std::size_t nx, std::size_t ny, std::vector<double> values) {
    HeatmapResult r;
    r.x.name = "x";
    r.y.name = "y";
    for (std::size_t i = 0; i < nx; ++i) r.x.values.push_back(0.5 * i);
    for (std::size_t j = 0; j < ny; ++j) r.y.values.push_back(-1.0 + j);
    r.values = std::move(values);
    return r;
}

}  // namespace

TEST_CASE("axis values") {
    AxisSpec a{"phi", 0.0, 1.0, 4, false};
    const auto v = a.values();
    REQUIRE(v.size() == 4);
    CHECK(v[1] == 0.25);
    CHECK(v[3] == 0.75);
    a.endpoint = true;
    CHECK(a.values().back() == 1.0);
    a.points = 1;
    CHECK_THROWS_AS(a.validate(), lzs::ConfigError);
}

TEST_CASE("config parsing and validation") {
    const auto cfg = parse_config(kGrid);
    CHECK(cfg.name == "small");
    CHECK(cfg.mode == Mode::LzsGrid);
    CHECK(cfg.x.points == 23);
    CHECK(cfg.fixed.at("C0") == -0.15);
    CHECK(!cfg.provenance.empty());

    CHECK_THROWS_AS(parse_config(std::string(kGrid) + "inv_F = 1\n"), lzs::ConfigError);
    CHECK_THROWS_AS(parse_config(std::string(kGrid) + "bogus = 1\n"), lzs::ConfigError);
    CHECK_THROWS_AS(parse_config(std::string(kGrid) + "[output]\nscale = cubic\n"), lzs::ConfigError);

    std::string empty = kGrid;
    empty.replace(empty.find("points = 23"), 11, "points = 0");
    CHECK_THROWS_AS(parse_config(empty), lzs::ConfigError);

    std::string dup = kGrid;
    dup.replace(dup.find("name = J"), 8, "name = Delta");
    CHECK_THROWS_AS(parse_config(dup), lzs::ConfigError);
}

TEST_CASE("every preset parses") {
    for (const auto& name : preset_names()) {
        const auto cfg = preset_config(name);
        CHECK(cfg.name == name);
        CHECK_NOTHROW(cfg.validate());
    }
    CHECK_THROWS_AS(preset_config("fig9"), lzs::ConfigError);
    CHECK(preset_config("fig4").fixed.at("V1") == 2.0);
}

TEST_CASE("CSV shape and round trip") {
    const auto dir = temp_dir("csv");
    auto r = manual(2, 2, {0.1, 0.2, 1.0 / 3.0, std::nan("")});
    r.metadata = {{"name", "t"}, {"mode", "lzs-grid"}};
    write_csv(r, (dir / "a.csv").string());
    const auto text = slurp(dir / "a.csv");
    std::istringstream in(text);
    std::string line;
    int rows = 0, comments = 0;
    while (std::getline(in, line)) (line.rfind("#", 0) == 0 ? comments : rows)++;
    CHECK(rows == 4);
    CHECK(comments >= 2);

    const auto back = read_csv((dir / "a.csv").string());
    REQUIRE(back.values.size() == 4);
    CHECK(back.nx() == 2);
    CHECK(back.ny() == 2);
    CHECK(back.at(1, 0) == 0.2);
    CHECK(std::isnan(back.at(1, 1)));
    write_csv(back, (dir / "b.csv").string());
    const auto again = read_csv((dir / "b.csv").string());
    for (std::size_t i = 0; i < 3; ++i) CHECK(again.values[i] == back.values[i]);

    HeatmapResult none;
    CHECK_THROWS_AS(write_csv(none, (dir / "c.csv").string()), lzs::ConfigError);
}

TEST_CASE("heatmap pixel mapping") {
    const auto half = heatmap_levels(manual(3, 2, std::vector<double>(6, 0.5)), Scale::Linear);
    for (auto v : half) CHECK((v == 127 || v == 128));
    const auto ends = heatmap_levels(manual(2, 1, {0.0, 1.0}), Scale::Linear);
    CHECK(ends[0] == 0);
    CHECK(ends[1] == 255);
    // Row 0 of the image is the largest y.
    const auto rows = heatmap_levels(manual(1, 2, {0.0, 1.0}), Scale::Linear);
    CHECK(rows[0] == 255);
    CHECK(rows[1] == 0);
    const auto logs = heatmap_levels(manual(3, 1, {1e-7, 1e-3, 1.0}), Scale::Log);
    CHECK(logs[0] == 0);
    CHECK(logs[1] == 128);
    CHECK(logs[2] == 255);

    const auto dir = temp_dir("pgm");
    const auto bad = manual(2, 1, {std::nan(""), 0.5});
    CHECK(write_heatmap(bad, (dir / "a.pgm").string(), Scale::Linear) == 1);
    const auto img = slurp(dir / "a.pgm");
    CHECK(img.rfind("P5", 0) == 0);
    CHECK(static_cast<unsigned char>(img[img.size() - 2]) == 0);
    write_heatmap(bad, (dir / "a.ppm").string(), Scale::Linear, Palette::Rainbow);
    CHECK(slurp(dir / "a.ppm").rfind("P6", 0) == 0);
}

TEST_CASE("sweeps are deterministic and independent of the worker count") {
    const auto cfg = parse_config(kGrid);
    const auto serial = run_sweep(cfg, Engine::Analytic, 1);
    const auto again = run_sweep(cfg, Engine::Analytic, 1);
    const auto parallel = run_sweep(cfg, Engine::Analytic, 4);
    REQUIRE(serial.values.size() == 23 * 9);
    CHECK(serial.missing == 0);
    for (std::size_t i = 0; i < serial.values.size(); ++i) {
        CHECK(serial.values[i] == again.values[i]);
        CHECK(serial.values[i] == parallel.values[i]);
        CHECK(serial.values[i] >= 0.0);
        CHECK(serial.values[i] <= 1.0);
    }
}

TEST_CASE("uncoupled one-dimensional sweep is identically zero") {
    const auto cfg = parse_config(R"(
[sweep]
mode = force-curve
[axis.x]
name = inv_F
min = 0.3
max = 1.1
points = 17
[fixed]
Delta = 4.39
J = -0.682
C0 = 0
)");
    const auto r = run_sweep(cfg, Engine::Analytic, 2);
    CHECK(r.ny() == 1);
    for (double v : r.values) CHECK(v == 0.0);
}

TEST_CASE("band memo computes each lattice once") {
    lzs::lattice::LatticeOptions o;
    o.cutoff = 21;
    o.nq = 32;
    o.points_per_cell = 32;
    BandMemo memo(o, 3);
    const auto& e = memo.get(lzs::lattice::LatticeSpec::single(4.0));
    const auto& f = memo.get(lzs::lattice::LatticeSpec::single(4.0 + 1e-13));
    CHECK(&e == &f);
    CHECK(memo.size() == 1);
    CHECK(e.resonances.size() == 3);
}

TEST_CASE("depth-force cut equals the force curve") {
    const auto curve = parse_config(R"(
[sweep]
mode = force-curve
[axis.x]
name = inv_F
min = 0.3
max = 1.1
points = 9
[fixed]
V0 = 4
)");
    const auto map = parse_config(R"(
[sweep]
mode = depth-force
[axis.x]
name = V0
min = 3
max = 5
points = 5
[axis.y]
name = inv_F
min = 0.3
max = 1.1
points = 9
)");
    const auto a = run_sweep(curve, Engine::Analytic, 1);
    const auto b = run_sweep(map, Engine::Analytic, 3);
    REQUIRE(b.x.values[2] == 4.0);
    for (std::size_t i = 0; i < 9; ++i) CHECK(a.at(i, 0) == b.at(2, i));
}

TEST_CASE("force curve peaks at the resonances") {
    auto cfg = preset_config("fig2");
    cfg.engine = Engine::Analytic;
    const auto r = run_sweep(cfg, Engine::Analytic, 2);
    BandMemo memo(cfg.lattice, cfg.m_max);
    const auto& e = memo.get(lzs::lattice::LatticeSpec::single(4.0));
    for (int m = 2; m <= 4; ++m) {
        const double target = 1.0 / e.resonances[m - 1].F_m;
        std::size_t best = 0;
        for (std::size_t i = 0; i < r.nx(); ++i)
            if (std::abs(r.x.values[i] - target) < 0.01 && r.at(i, 0) > r.at(best, 0)) best = i;
        double cell = 1.0;
        for (std::size_t i = 1; i < r.nx(); ++i)
            if (std::abs(r.x.values[i] - target) < 0.02) cell = std::min(cell, r.x.values[i] - r.x.values[i - 1]);
        CHECK(std::abs(r.x.values[best] - target) <= cell);
    }
}

TEST_CASE("run_config writes the artifacts") {
    const auto dir = temp_dir("fig");
    FigureOptions opts;
    opts.out_dir = dir.string();
    auto cfg = parse_config(kGrid);
    const auto art = run_config(cfg, opts);
    CHECK(fs::exists(dir / "small.csv"));
    CHECK(fs::exists(dir / "small.pgm"));
    CHECK(fs::exists(dir / "small_report.txt"));
    CHECK(art.results.size() == 1);
    CHECK(slurp(dir / "small_report.txt").find("missing") != std::string::npos);
}
