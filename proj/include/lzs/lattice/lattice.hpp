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

#include "lzs/numerics/types.hpp"

namespace lzs::lattice {

using numerics::cplx;

/// V(x) = V1 cos(x) + V2 cos(2x + phi) in recoil energies, lattice constant 2*pi.
struct LatticeSpec {
    double V1 = 0.0;
    double V2 = 0.0;
    double phi = 0.0;

    static LatticeSpec single(double V0) { return {V0, 0.0, 0.0}; }
    /// Throws ContractViolation unless V1 >= 0, phi in [0, 2pi) and all fields finite.
    void validate() const;
};

double potential_eval(const LatticeSpec& spec, double x);

/// Global minimum of V on one period, grid search plus parabolic refinement. Result in [0, 2pi).
double well_center(const LatticeSpec& spec);

/// Grid/accuracy knobs for the band and Wannier pipeline.
struct LatticeOptions {
    int cutoff = 31;           // plane waves, odd
    int nq = 64;               // quasimomentum points, even
    int points_per_cell = 512; // x samples per lattice constant
    int cells = 21;            // Wannier integration window, odd
    double localization_threshold = 1e-6;

    void validate() const;
};

/// q_j = j / nq for j = -nq/2 + 1 ... nq/2.
std::vector<double> default_q_grid(int nq);

struct BlochBand {
    int index = 0;  // 0 = a (lowest), 1 = b
    int cutoff = 0;
    std::vector<double> q;
    std::vector<double> energies;
    /// coefficients[iq][i] multiplies e^{i(q+n)x}/sqrt(2pi), n = i - (cutoff-1)/2.
    std::vector<std::vector<cplx>> coefficients;
};

struct BandPair {
    BlochBand a;
    BlochBand b;
};

/// The two lowest bands of H = -4 d^2/dx^2 + V(x) in a plane-wave basis.
BandPair bloch_bands(const LatticeSpec& spec, int cutoff, const std::vector<double>& q_grid);

/// Plane-wave Bloch Hamiltonian at quasimomentum q.
numerics::HermitianMatrix bloch_hamiltonian(const LatticeSpec& spec, int cutoff, double q);

struct WannierFunction {
    int band = 0;
    int site = 0;
    double dx = 0.0;
    std::vector<double> x;
    std::vector<cplx> values;
    double center = 0.0;  // <x> over the window
    double tail = 0.0;    // max |w| in the two outermost cells relative to max |w|
};

/// Wannier function of `band` on site `l`, sampled on `opts.cells` cells around site 0's well.
WannierFunction wannier(const LatticeSpec& spec, int band, int l, const LatticeOptions& opts = {});

/// Both lowest-band Wannier functions on the same site and window, with their global phases
/// fixed so that w_a is real-positive at its peak and the band coupling is real and negative.
struct WannierPair {
    WannierFunction a;
    WannierFunction b;
};
WannierPair wannier_pair(const LatticeSpec& spec, int l, const LatticeOptions& opts = {});

/// Inner product over the shared sample window.
cplx overlap(const WannierFunction& u, const WannierFunction& v);

}  // namespace lzs::lattice
