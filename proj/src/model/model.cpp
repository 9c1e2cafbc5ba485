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

#include "lzs/model/model.hpp"

#include <algorithm>
#include <cmath>

#include "lzs/error.hpp"

namespace lzs::model {

using numerics::cplx;
using numerics::kPi;

double DrivenTwoBandParameters::bloch_period() const { return 2.0 * kPi / F; }

void DrivenTwoBandParameters::validate() const {
    if (!(F > 0.0) || !std::isfinite(F)) throw ContractViolation("DrivenTwoBandParameters: F must be positive");
    for (double v : {bands.Delta, bands.Ja, bands.Jb, bands.C0, k})
        if (!std::isfinite(v)) throw ContractViolation("DrivenTwoBandParameters: non-finite field");
}

HermitianMatrix lzs_hamiltonian(const LzsParameters& p, double t) {
    const double bias = p.eps0 + p.A * std::sin(p.omega * t);
    HermitianMatrix h(2);
    h.set(0, 0, -0.5 * bias);
    h.set(1, 1, 0.5 * bias);
    h.set(0, 1, -0.5 * p.DeltaT);
    return h;
}

Matrix2 hamiltonian_k_matrix(const DrivenTwoBandParameters& p, double t) {
    const double c = std::cos(p.k + p.F * t);
    const double off = p.bands.C0 * p.F;
    return {{cplx(-0.5 * p.bands.Delta - p.bands.Ja * c), cplx(off), cplx(off),
             cplx(0.5 * p.bands.Delta - p.bands.Jb * c)}};
}

HermitianMatrix hamiltonian_k(const DrivenTwoBandParameters& p, double t) {
    return HermitianMatrix::from_matrix2(hamiltonian_k_matrix(p, t));
}

LzsMapping map_to_lzs(const BandParameters& bands, double F) {
    if (!(F > 0.0)) throw ContractViolation("map_to_lzs: F must be positive");
    LzsMapping m;
    m.lzs.eps0 = bands.Delta;
    m.lzs.A = bands.J();
    m.lzs.omega = F;
    m.lzs.DeltaT = -2.0 * bands.C0 * F;
    m.shift_amplitude = -0.5 * (bands.Ja + bands.Jb);
    return m;
}

double lzs_time(const DrivenTwoBandParameters& p, double t) { return t + p.k / p.F - kPi / (2.0 * p.F); }

double scalar_shift(const DrivenTwoBandParameters& p, double t) {
    return -0.5 * (p.bands.Ja + p.bands.Jb) * std::cos(p.k + p.F * t);
}

double phase_phi(const DrivenTwoBandParameters& p, double t) {
    return p.bands.Delta * t - (p.bands.J() / p.F) * (std::sin(p.k + p.F * t) - std::sin(p.k));
}

double equivalence_check(const DrivenTwoBandParameters& p, const std::vector<double>& t_grid) {
    p.validate();
    const auto mapping = map_to_lzs(p.bands, p.F);
    double worst = 0.0;
    for (double t : t_grid) {
        const auto direct = hamiltonian_k(p, t);
        const auto mapped = lzs_hamiltonian(mapping.lzs, lzs_time(p, t));
        const double shift = scalar_shift(p, t);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const cplx rebuilt = mapped(i, j) + (i == j ? shift : 0.0);
                worst = std::max(worst, std::abs(direct(i, j) - rebuilt));
            }
    }
    return worst;
}

}  // namespace lzs::model
