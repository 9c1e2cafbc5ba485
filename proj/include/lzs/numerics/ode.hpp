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

#include <functional>
#include <vector>

#include "lzs/numerics/types.hpp"

namespace lzs::numerics {

/// Linear generator M(t) of dy/dt = M(t) y.
using Generator = std::function<Matrix2(double)>;

struct Trajectory {
    std::vector<double> times;
    std::vector<ComplexVector2> states;
};

/// Adaptive Dormand-Prince 5(4) with dense output, evaluated at the given sorted sample
/// times (the first sample is the initial time). Throws IntegrationError on step failure.
Trajectory integrate_ode_at(const Generator& m, const ComplexVector2& y0,
                            const std::vector<double>& times, double tol);

/// Uniform samples every sample_dt on [t0, t1]; t1 is always the last sample.
Trajectory integrate_ode(const Generator& m, const ComplexVector2& y0, double t0, double t1,
                         double tol, double sample_dt);

}  // namespace lzs::numerics
