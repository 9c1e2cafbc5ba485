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

#include <cmath>
#include <functional>

#include "lzs/numerics/types.hpp"

namespace lzs::numerics {

struct QuadratureOptions {
    double tol = 1e-10;
    unsigned max_depth = 20;
};

/// Adaptive 15-point Gauss-Kronrod. Throws AccuracyError when the error estimate
/// stays above tol * max(1, integral of |f|) at the refinement limit.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

/// Complex integrand, real and imaginary parts integrated separately.
cplx integrate_complex(const std::function<cplx(double)>& f, double a, double b,
                       const QuadratureOptions& opts = {});

}  // namespace lzs::numerics
