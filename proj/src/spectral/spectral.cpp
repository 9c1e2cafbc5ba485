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

#include "lzs/spectral/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lzs/numerics/bessel.hpp"
#include "lzs/numerics/roots.hpp"

namespace lzs::spectral {

namespace {

int default_terms(double x) { return static_cast<int>(std::ceil(std::abs(x))) + 20; }

void require_force(double F) {
    if (!(F > 0.0) || !std::isfinite(F)) throw ContractViolation("spectral: F must be positive");
}

}  // namespace

WannierStarkCoupling ws_coupling(const BandParameters& bands, double F, int m) {
    require_force(F);
    return {m, bands.C0 * F * numerics::bessel_j(m, bands.J() / F)};
}

numerics::HermitianMatrix effective_two_level(const BandParameters& bands, double F, int m, int l, int n_terms) {
    require_force(F);
    const double x = bands.J() / F;
    const int n_max = n_terms > 0 ? n_terms : default_terms(x);
    const auto jn = numerics::bessel_j_range(n_max, x);
    const auto v = [&](int j) { return std::abs(j) > n_max ? 0.0 : bands.C0 * F * jn[static_cast<std::size_t>(j + n_max)]; };
    const auto eps_plus = [&](int i) { return i * F + 0.5 * bands.Delta; };
    const auto eps_minus = [&](int i) { return i * F - 0.5 * bands.Delta; };
    const auto ratio = [](double num, double den) {
        if (std::abs(den) < 1e-12) throw DegenerateDenominatorError("effective_two_level: vanishing energy denominator");
        return num / den;
    };

    double upper = eps_plus(l - m);
    double lower = eps_minus(l);
    // V_{l-m-i} and V_{l-i} are non-zero only for |index| <= n_max.
    for (int i = l - m - n_max; i <= l - m + n_max; ++i) {
        if (i == l) continue;
        const double vi = v(l - m - i);
        upper += ratio(vi * vi, eps_plus(l - m) - eps_minus(i));
    }
    for (int i = l - n_max; i <= l + n_max; ++i) {
        if (i == l - m) continue;
        const double vi = v(l - i);
        lower += ratio(vi * vi, eps_minus(l) - eps_plus(i));
    }
    numerics::HermitianMatrix h(2);
    h.set(0, 0, upper);
    h.set(1, 1, lower);
    h.set(0, 1, v(-m));
    return h;
}

double stark_residual(const BandParameters& bands, int m, double F) {
    require_force(F);
    const double x = bands.J() / F;
    const int n_max = std::max(default_terms(x), m + 20);
    const auto jn = numerics::bessel_j_range(n_max, x);
    double sum = 0.0;
    for (int i = -n_max; i <= n_max; ++i) {
        if (i == m) continue;
        const double j = jn[static_cast<std::size_t>(i + n_max)];
        sum += j * j / (bands.Delta - i * F);
    }
    return bands.Delta - m * F + 2.0 * bands.C0 * bands.C0 * F * F * sum;
}

ResonanceSolution resonance_position(const BandParameters& bands, int m) {
    if (m < 1) throw ContractViolation("resonance_position: m must be >= 1");
    if (!(bands.Delta > 0.0)) throw ContractViolation("resonance_position: Delta must be positive");
    ResonanceSolution s;
    s.m = m;
    s.F_m_uncorrected = bands.Delta / m;
    // Poles of the sum sit at F = Delta / i; the half-integer bounds keep them outside the bracket.
    s.bracket_lo = std::max(0.8 * bands.Delta / m, bands.Delta / (m + 0.5));
    s.bracket_hi = m == 1 ? 1.2 * bands.Delta : std::min(1.2 * bands.Delta / m, bands.Delta / (m - 0.5));
    if (bands.C0 == 0.0) {
        s.F_m = s.F_m_uncorrected;
        return s;
    }
    try {
        const auto r = numerics::find_root([&](double F) { return stark_residual(bands, m, F); }, s.bracket_lo,
                                           s.bracket_hi);
        s.F_m = r.root;
        s.iterations = r.iterations;
        s.residual = r.residual;
    } catch (const RootFindingError& e) {
        throw RootFindingError("resonance_position m=" + std::to_string(m) + ": " + e.what(), e.bracket_lo(),
                               e.bracket_hi());
    }
    return s;
}

std::vector<ResonanceSolution> resonance_table(const BandParameters& bands, int m_max) {
    std::vector<ResonanceSolution> table;
    for (int m = 1; m <= m_max; ++m) table.push_back(resonance_position(bands, m));
    return table;
}

double mean_occupation_nonresonant(const BandParameters& bands, double F) {
    const double v0 = ws_coupling(bands, F, 0).V_m;
    const double num = 4.0 * v0 * v0;
    if (num == 0.0) return 0.0;
    return 0.5 * num / (bands.Delta * bands.Delta + num);
}

double rabi_occupation(const BandParameters& bands, double F, double t) {
    const double v0 = ws_coupling(bands, F, 0).V_m;
    const double w2 = bands.Delta * bands.Delta + 4.0 * v0 * v0;
    if (w2 == 0.0) return 0.0;
    const double s = std::sin(0.5 * std::sqrt(w2) * t);
    return 4.0 * v0 * v0 / w2 * s * s;
}

double mean_occupation_total(const BandParameters& bands, double F, const std::vector<ResonanceSolution>& resonances,
                             LorentzianWidth width) {
    double total = mean_occupation_nonresonant(bands, F);
    for (const auto& r : resonances) {
        const double f_amp = width == LorentzianWidth::AtResonance ? r.F_m : F;
        const double a = ws_coupling(bands, f_amp, r.m).V_m / (f_amp * bands.Delta);
        const double g = 4.0 * a * a;
        if (g == 0.0) continue;
        const double d = 1.0 / F - 1.0 / r.F_m;
        total += 0.5 * g / (d * d + g);
    }
    return std::clamp(total, 0.0, 1.0);
}

double mean_occupation_total(const BandParameters& bands, double F, int m_max) {
    return mean_occupation_total(bands, F, resonance_table(bands, m_max));
}

}  // namespace lzs::spectral
