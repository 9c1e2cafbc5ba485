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

#include <vector>

namespace lzs::numerics {

/// J_n(x) for integer n. Throws DomainError for non-finite x or |n| > 1e6.
double bessel_j(int n, double x);

/// All orders -n_max..n_max in one pass; element i holds J_{i - n_max}(x).
std::vector<double> bessel_j_range(int n_max, double x);

}  // namespace lzs::numerics
