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

#include <algorithm>
#include <cmath>
#include <string>

#include "lzs/error.hpp"
#include "lzs/lattice/lattice.hpp"
#include "lzs/numerics/eigh.hpp"

namespace lzs::lattice {

using numerics::kPi;

void LatticeSpec::validate() const {
    if (!std::isfinite(V1) || !std::isfinite(V2) || !std::isfinite(phi))
        throw ContractViolation("LatticeSpec: non-finite field");
    if (V1 < 0.0) throw ContractViolation("LatticeSpec: V1 must be non-negative");
    if (phi < 0.0 || phi >= 2.0 * kPi) throw ContractViolation("LatticeSpec: phi must lie in [0, 2pi)");
}

void LatticeOptions::validate() const {
    if (cutoff < 11 || cutoff % 2 == 0) throw ContractViolation("LatticeOptions: cutoff must be odd and >= 11");
    if (nq < 32 || nq % 2 != 0) throw ContractViolation("LatticeOptions: nq must be even and >= 32");
    if (cells < 11 || cells % 2 == 0 || cells > nq)
        throw ContractViolation("LatticeOptions: cells must be odd, >= 11 and <= nq");
    if (points_per_cell < cutoff)
        throw ContractViolation("LatticeOptions: points_per_cell must be >= cutoff");
    if (!(localization_threshold > 0.0)) throw ContractViolation("LatticeOptions: threshold must be positive");
}

double potential_eval(const LatticeSpec& spec, double x) {
    return spec.V1 * std::cos(x) + spec.V2 * std::cos(2.0 * x + spec.phi);
}

double well_center(const LatticeSpec& spec) {
    constexpr int kGrid = 4096;
    const double h = 2.0 * kPi / kGrid;
    int best = 0;
    double best_v = potential_eval(spec, 0.0);
    for (int i = 1; i < kGrid; ++i) {
        const double v = potential_eval(spec, i * h);
        if (v < best_v) {
            best_v = v;
            best = i;
        }
    }
    const double x0 = best * h;
    const double fm = potential_eval(spec, x0 - h);
    const double f0 = best_v;
    const double fp = potential_eval(spec, x0 + h);
    const double curv = fm - 2.0 * f0 + fp;
    double x = x0;
    if (curv > 0.0) x += 0.5 * h * (fm - fp) / curv;
    x = std::fmod(x, 2.0 * kPi);
    if (x < 0.0) x += 2.0 * kPi;
    return x;
}

std::vector<double> default_q_grid(int nq) {
    if (nq < 2 || nq % 2 != 0) throw ContractViolation("default_q_grid: nq must be even and >= 2");
    std::vector<double> q;
    q.reserve(static_cast<std::size_t>(nq));
    for (int j = -nq / 2 + 1; j <= nq / 2; ++j) q.push_back(static_cast<double>(j) / nq);
    return q;
}

numerics::HermitianMatrix bloch_hamiltonian(const LatticeSpec& spec, int cutoff, double q) {
    if (cutoff < 1 || cutoff % 2 == 0) throw ContractViolation("bloch_hamiltonian: cutoff must be odd");
    const auto n = static_cast<std::size_t>(cutoff);
    const int half = (cutoff - 1) / 2;
    numerics::HermitianMatrix h(n);
    const cplx v2 = 0.5 * spec.V2 * std::exp(cplx(0.0, spec.phi));
    for (std::size_t i = 0; i < n; ++i) {
        const double k = q + static_cast<double>(static_cast<int>(i) - half);
        h.set(i, i, 4.0 * k * k);
        if (i + 1 < n) h.set(i + 1, i, 0.5 * spec.V1);
        // <n|V2 cos(2x+phi)|n-2> = (V2/2) e^{i phi}
        if (i + 2 < n) h.set(i + 2, i, v2);
    }
    return h;
}

BandPair bloch_bands(const LatticeSpec& spec, int cutoff, const std::vector<double>& q_grid) {
    if (cutoff < 11 || cutoff % 2 == 0) throw ContractViolation("bloch_bands: cutoff must be odd and >= 11");
    for (double q : q_grid)
        if (!(q > -0.5 && q <= 0.5)) throw ContractViolation("bloch_bands: q outside (-1/2, 1/2]");

    BandPair out;
    out.a.index = 0;
    out.b.index = 1;
    for (BlochBand* band : {&out.a, &out.b}) {
        band->cutoff = cutoff;
        band->q = q_grid;
        band->energies.resize(q_grid.size());
        band->coefficients.resize(q_grid.size());
    }
    const auto n = static_cast<std::size_t>(cutoff);
    const int half = (cutoff - 1) / 2;

    // Time reversal: E(-q) = E(q) and c_n(-q) = conj(c_{-n}(q)); solve q >= 0 only when the mirror is on the grid.
    std::vector<int> solved_at(q_grid.size(), -1);
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        if (q_grid[i] >= 0.0) continue;
        for (std::size_t j = 0; j < q_grid.size(); ++j)
            if (q_grid[j] == -q_grid[i]) solved_at[i] = static_cast<int>(j);
    }

    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        if (solved_at[i] >= 0) continue;
        const auto es = numerics::eigh(bloch_hamiltonian(spec, cutoff, q_grid[i]));
        for (BlochBand* band : {&out.a, &out.b}) {
            const auto col = static_cast<std::size_t>(band->index);
            band->energies[i] = es.values[col];
            auto& c = band->coefficients[i];
            c.resize(n);
            for (std::size_t r = 0; r < n; ++r) c[r] = es.vector_entry(r, col);
        }
    }
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        if (solved_at[i] < 0) continue;
        const auto src = static_cast<std::size_t>(solved_at[i]);
        for (BlochBand* band : {&out.a, &out.b}) {
            band->energies[i] = band->energies[src];
            auto& c = band->coefficients[i];
            c.resize(n);
            for (int m = -half; m <= half; ++m)
                c[static_cast<std::size_t>(m + half)] = std::conj(band->coefficients[src][static_cast<std::size_t>(half - m)]);
        }
    }
    return out;
}

}  // namespace lzs::lattice
