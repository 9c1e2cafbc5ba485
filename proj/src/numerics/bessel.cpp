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

#include "lzs/numerics/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <boost/math/special_functions/bessel.hpp>

#include "lzs/error.hpp"

namespace lzs::numerics {

namespace {

constexpr int kMaxOrder = 1000000;

void check_argument(int n, double x) {
    if (!std::isfinite(x)) throw DomainError("bessel_j: non-finite argument");
    if (std::abs(n) > kMaxOrder) throw DomainError("bessel_j: |n| exceeds 1e6: " + std::to_string(n));
}

// J_n(x) for n >= 0, x >= 0.
double bessel_j_nonneg(int n, double x) {
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    return boost::math::cyl_bessel_j(n, x);
}

}  // namespace

double bessel_j(int n, double x) {
    check_argument(n, x);
    const int an = std::abs(n);
    double v = bessel_j_nonneg(an, std::abs(x));
    // J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x)
    const bool odd = (an & 1) != 0;
    if (odd && ((n < 0) != (x < 0.0))) v = -v;
    return v;
}

std::vector<double> bessel_j_range(int n_max, double x) {
    check_argument(n_max, x);
    if (n_max < 0) throw ContractViolation("bessel_j_range: negative n_max");
    std::vector<double> out(static_cast<std::size_t>(2 * n_max + 1), 0.0);
    const auto at = [&](int n) -> double& { return out[static_cast<std::size_t>(n + n_max)]; };
    const double ax = std::abs(x);
    if (ax == 0.0) {
        at(0) = 1.0;
        return out;
    }

    // Downward recurrence J_{n-1} = (2n/x) J_n - J_{n+1} is stable for J; seeded exactly at the top.
    // Below n ~ x it is only neutrally stable, so those orders are evaluated directly.
    const int direct_below = static_cast<int>(std::ceil(ax)) + 2;
    double upper = bessel_j_nonneg(n_max + 1, ax);
    double current = bessel_j_nonneg(n_max, ax);
    at(n_max) = current;
    for (int n = n_max; n > 0; --n) {
        if (n - 1 < direct_below) {
            at(n - 1) = bessel_j_nonneg(n - 1, ax);
            continue;
        }
        const double lower = (2.0 * n / ax) * current - upper;
        upper = current;
        current = lower;
        at(n - 1) = current;
    }
    for (int n = 1; n <= n_max; ++n) {
        const bool odd = (n & 1) != 0;
        double v = at(n);
        if (odd && x < 0.0) v = -v;
        at(n) = v;
        at(-n) = odd ? -v : v;
    }
    return out;
}

}  // namespace lzs::numerics
