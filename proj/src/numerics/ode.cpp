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

#include "lzs/numerics/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "lzs/error.hpp"

namespace lzs::numerics {

namespace {

namespace odeint = boost::numeric::odeint;

// (Re a, Im a, Re b, Im b)
using RealState = std::array<double, 4>;

RealState pack(const ComplexVector2& v) { return {v.a.real(), v.a.imag(), v.b.real(), v.b.imag()}; }
ComplexVector2 unpack(const RealState& s) { return {{s[0], s[1]}, {s[2], s[3]}}; }

}  // namespace

Trajectory integrate_ode_at(const Generator& m, const ComplexVector2& y0,
                            const std::vector<double>& times, double tol) {
    if (!(tol > 0.0 && tol <= 1e-3)) throw ContractViolation("integrate_ode: tol must lie in (0, 1e-3]");
    if (times.size() < 2) throw ContractViolation("integrate_ode: need at least two sample times");
    if (!std::is_sorted(times.begin(), times.end()) || !(times.back() > times.front()))
        throw ContractViolation("integrate_ode: sample times must increase");

    const auto rhs = [&m](const RealState& s, RealState& ds, double t) {
        const Matrix2 g = m(t);
        const ComplexVector2 d = g.apply(unpack(s));
        ds = pack(d);
    };

    Trajectory out;
    out.times.reserve(times.size());
    out.states.reserve(times.size());
    const auto observer = [&out](const RealState& s, double t) {
        out.times.push_back(t);
        out.states.push_back(unpack(s));
    };

    RealState state = pack(y0);
    const double span = times.back() - times.front();
    const double dt0 = std::min(span, 1e-2);
    // The local error per step is held at a fraction of tol so the accumulated drift over long spans stays within budget.
    const double step_tol = 0.01 * tol;
    auto stepper = odeint::make_dense_output(step_tol, step_tol, odeint::runge_kutta_dopri5<RealState>());
    try {
        odeint::integrate_times(stepper, rhs, state, times.begin(), times.end(), dt0, observer,
                                odeint::max_step_checker(100000));
    } catch (const std::exception& e) {
        const double last = out.times.empty() ? times.front() : out.times.back();
        throw IntegrationError(std::string("integrate_ode: step failure: ") + e.what(), last);
    }
    if (out.times.size() != times.size())
        throw IntegrationError("integrate_ode: incomplete trajectory",
                               out.times.empty() ? times.front() : out.times.back());
    for (std::size_t i = 0; i < out.states.size(); ++i)
        if (!std::isfinite(out.states[i].norm2()))
            throw IntegrationError("integrate_ode: non-finite state", i == 0 ? times.front() : out.times[i - 1]);
    return out;
}

Trajectory integrate_ode(const Generator& m, const ComplexVector2& y0, double t0, double t1,
                         double tol, double sample_dt) {
    if (!(t1 > t0)) throw ContractViolation("integrate_ode: t1 must exceed t0");
    if (!(sample_dt > 0.0)) throw ContractViolation("integrate_ode: sample_dt must be positive");
    const auto n = static_cast<std::size_t>(std::floor((t1 - t0) / sample_dt + 1e-9));
    std::vector<double> times;
    times.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) times.push_back(t0 + static_cast<double>(i) * sample_dt);
    if (t1 - times.back() > 1e-12 * std::max(1.0, std::abs(t1))) times.push_back(t1);
    else times.back() = t1;
    if (times.size() < 2) times = {t0, t1};
    return integrate_ode_at(m, y0, times, tol);
}

}  // namespace lzs::numerics
