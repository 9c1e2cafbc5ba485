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

#include "lzs/model/model.hpp"
#include "lzs/numerics/types.hpp"

namespace lzs::magnus {

using model::BandParameters;
using model::DrivenTwoBandParameters;
using numerics::cplx;

struct MagnusConfig {
    int n_terms = 0;              // 0 selects ceil(|J/F|) + 20
    double resonance_eps = 1e-8;  // |omega_n| below this uses the analytic limit

    int terms_for(double bessel_argument) const;
};

/// omega_n = Delta - n F.
struct HarmonicFrequency {
    int n = 0;
    double omega_n = 0.0;
};
HarmonicFrequency harmonic(const BandParameters& bands, double F, int n);

// All functions below take the k = 0 drive and throw ContractViolation for p.k != 0.

/// chi(t) = int_0^t exp(i phi(t')) dt' as a Bessel sum.
cplx chi(const DrivenTwoBandParameters& p, double t, const MagnusConfig& cfg = {});

/// psi(t) = int_0^t dt1 int_0^t1 dt2 sin(phi(t2) - phi(t1)) as a double Bessel sum.
double psi(const DrivenTwoBandParameters& p, double t, const MagnusConfig& cfg = {});

/// sin^2(C0 F |chi(t)|).
double pb_first_order(const DrivenTwoBandParameters& p, double t, const MagnusConfig& cfg = {});

/// Upper-band population of exp(Omega_1 + Omega_2).
double pb_second_order(const DrivenTwoBandParameters& p, double t, const MagnusConfig& cfg = {});

/// Same as pb_second_order for given chi and psi values.
double pb_second_order_from(double coupling, cplx chi_value, double psi_value);

/// exp(-i C0 F [[0, conj(chi)], [chi, 0]]).
numerics::Matrix2 first_order_propagator(const DrivenTwoBandParameters& p, double t, const MagnusConfig& cfg = {});

/// sin^2(C0 F J_m(J/F) t). Requires |Delta - m F| < F/10.
double resonant_envelope(const DrivenTwoBandParameters& p, int m, double t);

}  // namespace lzs::magnus
