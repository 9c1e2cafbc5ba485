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

#include <optional>
#include <string>
#include <vector>

#include "lzs/sweep/config.hpp"
#include "lzs/sweep/sweep.hpp"

namespace lzs::sweep {

/// Names of the compiled-in presets.
std::vector<std::string> preset_names();

/// Parsed preset; throws ConfigError for an unknown name.
SweepConfig preset_config(const std::string& name);

struct FigureOptions {
    std::string out_dir = ".";
    int workers = 1;
    std::optional<Engine> engine;
    std::optional<Scale> scale;
    std::optional<Palette> palette;
};

struct FigureArtifacts {
    std::vector<std::string> files;
    std::vector<HeatmapResult> results;
    std::string report;
};

/// Runs a sweep config and writes <name>[_numeric].csv, a heatmap per engine and <name>_report.txt.
FigureArtifacts run_config(const SweepConfig& cfg, const FigureOptions& opts);

/// run_config on a compiled-in preset (fig1, fig2, fig3a, fig3b, fig4).
FigureArtifacts run_figure(const std::string& preset, const FigureOptions& opts);

}  // namespace lzs::sweep
