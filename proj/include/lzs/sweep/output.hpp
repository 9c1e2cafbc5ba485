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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lzs/sweep/config.hpp"
#include "lzs/sweep/sweep.hpp"

namespace lzs::sweep {

/// "# key=value" metadata, a "# columns=" line, then "x,y,value" rows (x fastest) at 12 significant digits.
void write_csv(const HeatmapResult& result, const std::string& path);
HeatmapResult read_csv(const std::string& path);

/// One byte per cell, row 0 = largest y. Linear: nearest-even rounding of 255 v.
/// Log: 255 (log10 max(v, floor) - log10 floor) / (-log10 floor). Non-finite cells map to 0.
std::vector<std::uint8_t> heatmap_levels(const HeatmapResult& result, Scale scale, double log_floor = 1e-6);

/// RGB of a level in the fixed 256-entry rainbow table.
std::array<std::uint8_t, 3> rainbow(std::uint8_t level);

/// Binary P5 (gray) or P6 (rainbow). Returns the number of non-finite cells drawn as 0.
std::size_t write_heatmap(const HeatmapResult& result, const std::string& path, Scale scale,
                          Palette palette = Palette::Gray, double log_floor = 1e-6);

}  // namespace lzs::sweep
