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

#include "lzs/lattice/band_parameters.hpp"
#include "lzs/numerics/types.hpp"

namespace lzs::model {

using lattice::BandParameters;
using numerics::HermitianMatrix;
using numerics::Matrix2;

/// Driven two-level parameters: H = -1/2 [[eps0 + A sin(omega t), DeltaT], [DeltaT, -eps0 - A sin(omega t)]].
struct LzsParameters {
    double eps0 = 0.0;
    double A = 0.0;
    double omega = 1.0;
    double DeltaT = 0.0;
};

/// Two-band model at quasimomentum k under a Stark force F > 0.
struct DrivenTwoBandParameters {
    BandParameters bands;
    double F = 1.0;
    double k = 0.0;

    double bloch_period() const;
    /// Throws ContractViolation unless F > 0 and all fields are finite.
    void validate() const;
};

/// Result of rewriting the k-space Hamiltonian in LZS form.
///
/// H_k(t) = lzs_hamiltonian(lzs, lzs_time(t)) + shift(t) * I with
/// shift(t) = shift_amplitude * cos(k + F t) and lzs_time(t) = t + k/F - pi/(2F).
struct LzsMapping {
    LzsParameters lzs;
    double shift_amplitude = 0.0;  // -(Ja + Jb)/2
};

HermitianMatrix lzs_hamiltonian(const LzsParameters& p, double t);

/// [[-Delta/2 - Ja cos(k+Ft), C0 F], [C0 F, Delta/2 - Jb cos(k+Ft)]]
HermitianMatrix hamiltonian_k(const DrivenTwoBandParameters& p, double t);
Matrix2 hamiltonian_k_matrix(const DrivenTwoBandParameters& p, double t);

/// eps0 = Delta, A = J, omega = F, DeltaT = -2 C0 F.
LzsMapping map_to_lzs(const BandParameters& bands, double F);

double lzs_time(const DrivenTwoBandParameters& p, double t);
double scalar_shift(const DrivenTwoBandParameters& p, double t);

/// Interband phase Delta t - (J/F)[sin(k + F t) - sin k].
double phase_phi(const DrivenTwoBandParameters& p, double t);

/// Largest entrywise deviation between hamiltonian_k and the mapped LZS form plus shift.
double equivalence_check(const DrivenTwoBandParameters& p, const std::vector<double>& t_grid);

}  // namespace lzs::model
