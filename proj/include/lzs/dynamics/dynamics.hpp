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

#include <string>
#include <vector>

#include "lzs/error.hpp"
#include "lzs/model/model.hpp"
#include "lzs/numerics/ode.hpp"

namespace lzs::dynamics {

using model::BandParameters;
using model::DrivenTwoBandParameters;

/// Frame in which the two-band Schroedinger equation is integrated. Populations agree.
enum class Gauge {
    Interaction,  // purely off-diagonal, coupling C0 F e^{+-i phi(k,t)}
    Bloch,        // the k-space Hamiltonian directly
};

struct EvolutionConfig {
    std::vector<double> k_grid{0.0};
    double t_final = 0.0;
    double tol = 1e-9;
    double sample_dt = 0.0;  // 0 selects T_B / 32
    Gauge gauge = Gauge::Interaction;

    /// Uniform k points 2 pi j / nk - pi, j = 0..nk-1.
    static std::vector<double> uniform_k_grid(int nk);
    void validate() const;
};

/// Integrator failure at quasimomentum k.
class EvolutionError : public IntegrationError {
public:
    EvolutionError(const std::string& what, double k, double t) : IntegrationError(what, t), k_(k) {}
    double k() const noexcept { return k_; }

private:
    double k_;
};

struct KTrajectory {
    double k = 0.0;
    numerics::Trajectory trajectory;
};

/// Generator dy/dt = M(t) y for the chosen gauge.
numerics::Generator generator(const DrivenTwoBandParameters& p, Gauge gauge);

/// One quasimomentum from the lower band at times.front(), sampled at `times`.
numerics::Trajectory evolve_single(const DrivenTwoBandParameters& p, const std::vector<double>& times,
                                   double tol, Gauge gauge = Gauge::Interaction);

/// Each k of cfg.k_grid evolved from (a, b) = (1, 0) at t = 0; p.k is ignored.
std::vector<KTrajectory> evolve_k(const DrivenTwoBandParameters& p, const EvolutionConfig& cfg);

struct OccupationSeries {
    std::vector<double> times;
    std::vector<double> values;  // in [0, 1]
    double bloch_period = 0.0;
};

/// P_b(t) = mean over k of |b(k,t)|^2.
OccupationSeries occupation_series(const DrivenTwoBandParameters& p, const EvolutionConfig& cfg);

/// Mean of P_b over samples with t >= t_min. Throws WindowError unless the series extends
/// at least 50 Bloch periods past t_min.
double long_time_average(const OccupationSeries& series, double t_min = 0.0);

/// Averaging horizon: max(500 T_B, 20 periods of the slowest two-level channel), at most 20000 T_B.
double averaging_horizon(const BandParameters& bands, double F);

struct NumericAverageOptions {
    double tol = 1e-9;
    int nk = 1;  // 1 -> k = 0 only
    double horizon_periods = 0.0;  // 0 selects averaging_horizon
};

/// Long-time average of the upper-band occupation from the exact dynamics.
double numeric_mean_occupation(const BandParameters& bands, double F, const NumericAverageOptions& opts = {});

}  // namespace lzs::dynamics
