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

#include "lzs/numerics/quadrature.hpp"

#include <algorithm>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lzs/error.hpp"

namespace lzs::numerics {

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
    if (!(opts.tol > 0.0)) throw ContractViolation("integrate: tol must be positive");
    if (a == b) return 0.0;
    double error = 0.0;
    double l1 = 0.0;
    const double result = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, opts.max_depth, opts.tol, &error, &l1);
    if (!std::isfinite(result)) throw DomainError("integrate: non-finite integrand");
    if (error > opts.tol * std::max(1.0, l1))
        throw AccuracyError("integrate: tolerance not reached", result, error);
    return result;
}

cplx integrate_complex(const std::function<cplx(double)>& f, double a, double b,
                       const QuadratureOptions& opts) {
    const double re = integrate([&](double x) { return f(x).real(); }, a, b, opts);
    const double im = integrate([&](double x) { return f(x).imag(); }, a, b, opts);
    return {re, im};
}

}  // namespace lzs::numerics
