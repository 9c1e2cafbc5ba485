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

#include "lzs/numerics/roots.hpp"

#include <cmath>
#include <cstdint>

#include <boost/math/tools/toms748_solve.hpp>

#include "lzs/error.hpp"

namespace lzs::numerics {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     int max_iterations) {
    if (!(lo < hi)) throw RootFindingError("find_root: empty bracket", lo, hi);
    const double flo = f(lo);
    const double fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi))
        throw RootFindingError("find_root: non-finite function value at bracket end", lo, hi);
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if ((flo > 0.0) == (fhi > 0.0))
        throw RootFindingError("find_root: no sign change in bracket", lo, hi);

    std::uintmax_t iters = static_cast<std::uintmax_t>(max_iterations);
    const auto bracket = boost::math::tools::toms748_solve(
        f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), iters);
    if (iters >= static_cast<std::uintmax_t>(max_iterations))
        throw RootFindingError("find_root: iteration budget exhausted", bracket.first, bracket.second);

    const double ra = f(bracket.first);
    const double rb = f(bracket.second);
    RootResult r;
    r.iterations = static_cast<int>(iters);
    if (std::abs(ra) <= std::abs(rb)) {
        r.root = bracket.first;
        r.residual = std::abs(ra);
    } else {
        r.root = bracket.second;
        r.residual = std::abs(rb);
    }
    return r;
}

}  // namespace lzs::numerics
