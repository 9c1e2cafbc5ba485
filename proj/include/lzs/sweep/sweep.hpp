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

#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lzs/sweep/config.hpp"

namespace lzs::sweep {

struct Axis {
    std::string name;
    std::vector<double> values;
};

/// Value matrix over an x (columns) by y (rows) grid; a 1-D sweep has a single row.
struct HeatmapResult {
    Axis x;
    Axis y;
    std::vector<double> values;  // row-major: values[iy * nx + ix]; NaN marks a missing cell
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> diagnostics;
    std::size_t missing = 0;

    std::size_t nx() const { return x.values.size(); }
    std::size_t ny() const { return y.values.size(); }
    double at(std::size_t ix, std::size_t iy) const { return values[iy * nx() + ix]; }
    std::string meta(const std::string& key) const;
};

/// Parameters of one grid cell after resolving fixed and swept names.
struct CellModel {
    bool from_lattice = false;
    lattice::LatticeSpec spec;
    lattice::BandParameters bands;  // filled directly unless from_lattice
    double F = 0.0;
};

CellModel resolve_cell(const SweepConfig& cfg, double x, double y);

/// Insert-once memo of band parameters and resonance tables per lattice, keyed on (V1, V2, phi)
/// rounded to 1e-10. Safe for concurrent lookups; each lattice is computed exactly once.
class BandMemo {
public:
    struct Entry {
        lattice::BandParameters bands;
        std::vector<spectral::ResonanceSolution> resonances;
    };

    BandMemo(lattice::LatticeOptions options, int m_max);
    ~BandMemo();
    BandMemo(const BandMemo&) = delete;
    BandMemo& operator=(const BandMemo&) = delete;

    /// Rethrows the original failure for a lattice whose extraction failed.
    const Entry& get(const lattice::LatticeSpec& spec);
    std::size_t size() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Force points of the x axis, including the refinement around each resonance.
std::vector<double> sweep_x_values(const SweepConfig& cfg, Engine engine, BandMemo& memo);

/// One engine (Analytic or Numeric) over the whole grid with `workers` threads.
/// Per-cell failures become NaN cells listed in `diagnostics`.
HeatmapResult run_sweep(const SweepConfig& cfg, Engine engine, int workers = 1);

/// cfg.engine, expanded: Both yields {analytic, numeric}.
std::vector<HeatmapResult> run_sweep(const SweepConfig& cfg, int workers = 1);

}  // namespace lzs::sweep
