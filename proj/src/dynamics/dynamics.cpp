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

#include "lzs/dynamics/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "lzs/numerics/bessel.hpp"

namespace lzs::dynamics {

using numerics::ComplexVector2;
using numerics::cplx;
using numerics::kI;
using numerics::kPi;
using numerics::Matrix2;

namespace {

constexpr double kMinWindowPeriods = 50.0;
constexpr double kDefaultPeriods = 500.0;
constexpr double kMaxPeriods = 20000.0;
constexpr double kChannelThreshold = 1e-3;

std::vector<double> sample_times(double t0, double t1, double dt) {
    const auto n = static_cast<std::size_t>(std::floor((t1 - t0) / dt + 1e-9));
    std::vector<double> times;
    times.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) times.push_back(t0 + static_cast<double>(i) * dt);
    if (t1 - times.back() > 1e-12 * std::max(1.0, std::abs(t1))) times.push_back(t1);
    else times.back() = t1;
    if (times.size() < 2) times = {t0, t1};
    return times;
}

}  // namespace

std::vector<double> EvolutionConfig::uniform_k_grid(int nk) {
    if (nk < 1) throw ContractViolation("uniform_k_grid: nk must be positive");
    if (nk == 1) return {0.0};
    std::vector<double> k;
    for (int j = 0; j < nk; ++j) k.push_back(2.0 * kPi * j / nk - kPi);
    return k;
}

void EvolutionConfig::validate() const {
    if (!(t_final > 0.0)) throw ContractViolation("EvolutionConfig: t_final must be positive");
    if (!(tol > 0.0 && tol <= 1e-3)) throw ContractViolation("EvolutionConfig: tol must lie in (0, 1e-3]");
    if (sample_dt < 0.0) throw ContractViolation("EvolutionConfig: sample_dt must be non-negative");
    if (k_grid.empty()) throw ContractViolation("EvolutionConfig: empty k grid");
}

numerics::Generator generator(const DrivenTwoBandParameters& p, Gauge gauge) {
    if (gauge == Gauge::Bloch) {
        return [p](double t) { return cplx(0.0, -1.0) * model::hamiltonian_k_matrix(p, t); };
    }
    const double c = p.bands.C0 * p.F;
    return [p, c](double t) {
        const cplx e = std::exp(kI * model::phase_phi(p, t));
        return Matrix2{{0.0, -kI * c * std::conj(e), -kI * c * e, 0.0}};
    };
}

numerics::Trajectory evolve_single(const DrivenTwoBandParameters& p, const std::vector<double>& times,
                                   double tol, Gauge gauge) {
    p.validate();
    try {
        return numerics::integrate_ode_at(generator(p, gauge), ComplexVector2{1.0, 0.0}, times, tol);
    } catch (const IntegrationError& e) {
        throw EvolutionError(e.what(), p.k, e.last_time());
    }
}

std::vector<KTrajectory> evolve_k(const DrivenTwoBandParameters& p, const EvolutionConfig& cfg) {
    p.validate();
    cfg.validate();
    const double dt = cfg.sample_dt > 0.0 ? cfg.sample_dt : p.bloch_period() / 32.0;
    const auto times = sample_times(0.0, cfg.t_final, dt);
    std::vector<KTrajectory> out;
    out.reserve(cfg.k_grid.size());
    for (double k : cfg.k_grid) {
        DrivenTwoBandParameters pk = p;
        pk.k = k;
        out.push_back({k, evolve_single(pk, times, cfg.tol, cfg.gauge)});
    }
    return out;
}

OccupationSeries occupation_series(const DrivenTwoBandParameters& p, const EvolutionConfig& cfg) {
    const auto trajectories = evolve_k(p, cfg);
    OccupationSeries s;
    s.bloch_period = p.bloch_period();
    s.times = trajectories.front().trajectory.times;
    s.values.assign(s.times.size(), 0.0);
    for (const auto& tr : trajectories)
        for (std::size_t i = 0; i < s.times.size(); ++i) s.values[i] += std::norm(tr.trajectory.states[i].b);
    const double inv = 1.0 / static_cast<double>(trajectories.size());
    for (auto& v : s.values) v = std::clamp(v * inv, 0.0, 1.0);
    return s;
}

double long_time_average(const OccupationSeries& series, double t_min) {
    if (series.times.empty() || series.times.size() != series.values.size())
        throw ContractViolation("long_time_average: malformed series");
    if (!(series.bloch_period > 0.0)) throw ContractViolation("long_time_average: unknown Bloch period");
    if (series.times.back() - t_min < kMinWindowPeriods * series.bloch_period)
        throw WindowError("long_time_average: series covers fewer than 50 Bloch periods past t_min");
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        if (series.times[i] < t_min) continue;
        sum += series.values[i];
        ++count;
    }
    return sum / static_cast<double>(count);
}

double averaging_horizon(const BandParameters& bands, double F) {
    if (!(F > 0.0)) throw ContractViolation("averaging_horizon: F must be positive");
    const double tb = 2.0 * kPi / F;
    const double x = bands.J() / F;
    const int n_max = static_cast<int>(std::ceil(std::abs(x))) + 20;
    const auto jn = numerics::bessel_j_range(n_max, x);
    double slowest = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        const double amp = jn[static_cast<std::size_t>(n + n_max)];
        if (std::abs(amp) < kChannelThreshold) continue;
        const double wn = bands.Delta - n * F;
        const double vn = bands.C0 * F * amp;
        const double rabi = std::sqrt(wn * wn + 4.0 * vn * vn);
        if (rabi > 0.0) slowest = std::max(slowest, 2.0 * kPi / rabi);
    }
    const double horizon = std::max(kDefaultPeriods * tb, 20.0 * slowest);
    return std::min(horizon, kMaxPeriods * tb);
}

double numeric_mean_occupation(const BandParameters& bands, double F, const NumericAverageOptions& opts) {
    DrivenTwoBandParameters p{bands, F, 0.0};
    EvolutionConfig cfg;
    cfg.k_grid = EvolutionConfig::uniform_k_grid(opts.nk);
    cfg.tol = opts.tol;
    cfg.t_final = opts.horizon_periods > 0.0 ? opts.horizon_periods * p.bloch_period() : averaging_horizon(bands, F);
    return long_time_average(occupation_series(p, cfg));
}

}  // namespace lzs::dynamics
