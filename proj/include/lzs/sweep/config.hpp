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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lzs/lattice/lattice.hpp"
#include "lzs/spectral/spectral.hpp"

namespace lzs::sweep {

enum class Mode { LzsGrid, ForceCurve, DepthForce, SuperlatticePhase };
enum class Engine { Analytic, Numeric, Both };
enum class Scale { Linear, Log };
enum class Palette { Gray, Rainbow };

Mode parse_mode(const std::string& s);
Engine parse_engine(const std::string& s);
Scale parse_scale(const std::string& s);
Palette parse_palette(const std::string& s);
std::string to_string(Mode m);
std::string to_string(Engine e);

/// Sweepable/fixed parameter names.
inline const std::vector<std::string>& parameter_names() {
    static const std::vector<std::string> names = {"Delta", "J", "C0", "F", "inv_F",
                                                   "V0", "V1", "V2", "V2_ratio", "phi"};
    return names;
}

struct AxisSpec {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    bool endpoint = true;  // false: max excluded, step (max - min)/points

    /// value_i = min + ((max - min) * i) / (points - 1)   (endpoint)
    ///         = min + ((max - min) * i) / points         (no endpoint)
    std::vector<double> values() const;
    void validate() const;
};

/// Extra resolution of a force axis around each resonance 1/F_m.
struct RefineSpec {
    int factor = 1;
    double window = 0.0;  // relative half-width in 1/F
};

struct NumericSpec {
    double tol = 1e-9;
    int nk = 1;
    double horizon_periods = 0.0;  // 0: automatic
    int points = 0;                // > 0: numeric engine on its own uniform x axis of this size
};

struct SweepConfig {
    std::string name = "sweep";
    Mode mode = Mode::LzsGrid;
    Engine engine = Engine::Analytic;
    AxisSpec x;
    std::optional<AxisSpec> y;
    std::map<std::string, double> fixed;
    lattice::LatticeOptions lattice;
    int m_max = 6;
    spectral::LorentzianWidth width = spectral::LorentzianWidth::AtResonance;
    RefineSpec refine;
    NumericSpec numeric;
    Scale scale = Scale::Linear;
    Palette palette = Palette::Gray;
    std::optional<std::pair<double, double>> report_point;
    /// Every section.key=value line of the source, in file order.
    std::vector<std::pair<std::string, std::string>> provenance;

    /// Throws ConfigError on inconsistent settings.
    void validate() const;
};

SweepConfig parse_config(const std::string& text);
SweepConfig load_config(const std::string& path);

}  // namespace lzs::sweep
