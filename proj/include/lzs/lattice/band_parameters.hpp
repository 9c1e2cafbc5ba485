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

#include "lzs/lattice/lattice.hpp"

namespace lzs::lattice {

/// Two-band tight-binding data. Band a disperses as e_a - Ja cos(2 pi q), band b likewise.
struct BandParameters {
    double Delta = 0.0;
    double Ja = 0.0;
    double Jb = 0.0;
    double C0 = 0.0;

    /// Effective drive amplitude. Defined as Jb - Ja so that the interband phase reads
    /// Delta t - (J/F)[sin(k+Ft) - sin k] and J < 0 for a plain cosine lattice.
    double J() const { return Jb - Ja; }

    /// Parameters with a prescribed J, split symmetrically (Ja = -J/2, Jb = J/2).
    static BandParameters from_drive(double Delta, double J, double C0) {
        return {Delta, -0.5 * J, 0.5 * J, C0};
    }
};

struct ExtractionReport {
    BandParameters params;
    double Ja_matrix_element = 0.0;  // -2 <w_1|H|w_0> for band a
    double Jb_matrix_element = 0.0;
    double tail_a = 0.0;
    double tail_b = 0.0;
    double tail_integrand = 0.0;
    double imag_a = 0.0;  // max |Im w| / max |w| after phase fixing
    double imag_b = 0.0;
};

/// Delta, Ja, Jb from the band dispersion; C0 from the same-site dipole element of the Wannier pair.
/// Throws AccuracyError when the band-a Wannier function or the C0 integrand is not localized
/// below opts.localization_threshold at the window edge.
BandParameters extract_params(const LatticeSpec& spec, const LatticeOptions& opts = {});

/// extract_params plus the direct-matrix-element hopping cross-check and localization figures.
ExtractionReport extract_params_detailed(const LatticeSpec& spec, const LatticeOptions& opts = {});

}  // namespace lzs::lattice
