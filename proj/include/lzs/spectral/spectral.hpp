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

#include "lzs/error.hpp"
#include "lzs/lattice/band_parameters.hpp"
#include "lzs/numerics/types.hpp"

namespace lzs::spectral {

using lattice::BandParameters;

/// A second-order denominator vanished in the effective two-level model.
class DegenerateDenominatorError : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

struct WannierStarkCoupling {
    int m = 0;
    double V_m = 0.0;  // C0 F J_m(J/F)
};

WannierStarkCoupling ws_coupling(const BandParameters& bands, double F, int m);

/// Degenerate-perturbation-theory Hamiltonian for the pair (l - m, +) and (l, -).
/// n_terms = 0 selects ceil(|J/F|) + 20.
numerics::HermitianMatrix effective_two_level(const BandParameters& bands, double F, int m, int l,
                                              int n_terms = 0);

struct ResonanceSolution {
    int m = 0;
    double F_m = 0.0;
    double F_m_uncorrected = 0.0;  // Delta / m
    int iterations = 0;
    double residual = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

/// Delta - m F + 2 C0^2 F^2 sum_{i != m} J_i^2(J/F) / (Delta - i F).
double stark_residual(const BandParameters& bands, int m, double F);

/// Root of stark_residual in (Delta/(m + 1/2), Delta/(m - 1/2)) intersected with [0.8, 1.2] Delta/m.
ResonanceSolution resonance_position(const BandParameters& bands, int m);

/// Resonances m = 1..m_max.
std::vector<ResonanceSolution> resonance_table(const BandParameters& bands, int m_max = 6);

/// Averaged occupation of the non-resonant two-level system: (1/2) 4 V0^2 / (Delta^2 + 4 V0^2).
double mean_occupation_nonresonant(const BandParameters& bands, double F);

/// (4 V0^2 / (Delta^2 + 4 V0^2)) sin^2(sqrt(Delta^2 + 4 V0^2) t / 2).
double rabi_occupation(const BandParameters& bands, double F, double t);

/// Force at which the Lorentzian amplitude V_m/(F Delta) is evaluated.
enum class LorentzianWidth { AtResonance, Running };

/// Non-resonant term plus one Lorentzian in 1/F per entry of `resonances`.
double mean_occupation_total(const BandParameters& bands, double F,
                             const std::vector<ResonanceSolution>& resonances,
                             LorentzianWidth width = LorentzianWidth::AtResonance);

/// Convenience overload solving resonances 1..m_max first.
double mean_occupation_total(const BandParameters& bands, double F, int m_max = 6);

}  // namespace lzs::spectral
