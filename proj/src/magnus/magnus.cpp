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

#include "lzs/magnus/magnus.hpp"

#include <cmath>
#include <vector>

#include "lzs/error.hpp"
#include "lzs/numerics/bessel.hpp"

namespace lzs::magnus {

using numerics::kI;
using numerics::Matrix2;

namespace {

void require_k0(const DrivenTwoBandParameters& p) {
    p.validate();
    if (p.k != 0.0) throw ContractViolation("magnus: analytic formulas are stated at k = 0");
}

// sin(w t) / w and its w-derivative, with their w -> 0 limits.
double sinc_t(double w, double t, double eps) { return std::abs(w) < eps ? t : std::sin(w * t) / w; }

double sinc_t_slope(double w, double t, double eps) {
    if (std::abs(w) < eps) return 0.0;
    return (w * t * std::cos(w * t) - std::sin(w * t)) / (w * w);
}

}  // namespace

int MagnusConfig::terms_for(double bessel_argument) const {
    if (n_terms > 0) return n_terms;
    return static_cast<int>(std::ceil(std::abs(bessel_argument))) + 20;
}

HarmonicFrequency harmonic(const BandParameters& bands, double F, int n) {
    return {n, bands.Delta - n * F};
}

cplx chi(const DrivenTwoBandParameters& p, double t, const MagnusConfig& cfg) {
    require_k0(p);
    const double x = p.bands.J() / p.F;
    const int n_max = cfg.terms_for(x);
    const auto jn = numerics::bessel_j_range(n_max, x);
    cplx sum = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        const double w = harmonic(p.bands, p.F, n).omega_n;
        const double j = jn[static_cast<std::size_t>(n + n_max)];
        if (std::abs(w) < cfg.resonance_eps) sum += j * t;
        else sum += 2.0 * j * std::exp(kI * (0.5 * w * t)) * std::sin(0.5 * w * t) / w;
    }
    return sum;
}

double psi(const DrivenTwoBandParameters& p, double t, const MagnusConfig& cfg) {
    require_k0(p);
    const double x = p.bands.J() / p.F;
    const int n_max = cfg.terms_for(x);
    const auto jn = numerics::bessel_j_range(n_max, x);
    const auto at = [&](int n) { return jn[static_cast<std::size_t>(n + n_max)]; };
    const double eps = cfg.resonance_eps;
    const double F = p.F;

    // sum_m J_m sin(omega_m t)/omega_m does not depend on n.
    double s1 = 0.0;
    for (int m = -n_max; m <= n_max; ++m) s1 += at(m) * sinc_t(harmonic(p.bands, F, m).omega_n, t, eps);

    double total = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        const double wn = harmonic(p.bands, F, n).omega_n;
        if (std::abs(wn) < eps) {
            // The bracket vanishes at omega_n = 0; its slope there is sum_m J_m s'((n - m) F).
            double slope = 0.0;
            for (int m = -n_max; m <= n_max; ++m) slope += at(m) * sinc_t_slope((n - m) * F, t, eps);
            total += at(n) * slope;
            continue;
        }
        double s2 = 0.0;
        for (int m = -n_max; m <= n_max; ++m) s2 += at(m) * sinc_t((m - n) * F, t, eps);
        total += at(n) / wn * (s1 - s2);
    }
    return total;
}

double pb_first_order(const DrivenTwoBandParameters& p, double t, const MagnusConfig& cfg) {
    const double s = std::sin(p.bands.C0 * p.F * std::abs(chi(p, t, cfg)));
    return s * s;
}

double pb_second_order_from(double coupling, cplx chi_value, double psi_value) {
    const double a2 = std::norm(chi_value);
    const double b2 = coupling * coupling * psi_value * psi_value;
    if (a2 + b2 == 0.0) return 0.0;
    const double s = std::sin(coupling * std::sqrt(a2 + b2));
    return a2 / (a2 + b2) * s * s;
}

double pb_second_order(const DrivenTwoBandParameters& p, double t, const MagnusConfig& cfg) {
    return pb_second_order_from(p.bands.C0 * p.F, chi(p, t, cfg), psi(p, t, cfg));
}

Matrix2 first_order_propagator(const DrivenTwoBandParameters& p, double t, const MagnusConfig& cfg) {
    const cplx x = chi(p, t, cfg);
    const double c = p.bands.C0 * p.F;
    const double r = std::abs(x);
    // K = [[0, conj(chi)], [chi, 0]] squares to |chi|^2 I.
    const double cs = std::cos(c * r);
    const cplx f = r > 0.0 ? cplx(0.0, -std::sin(c * r) / r) : cplx(0.0, -c);
    return {{cs, f * std::conj(x), f * x, cs}};
}

double resonant_envelope(const DrivenTwoBandParameters& p, int m, double t) {
    require_k0(p);
    if (!(std::abs(p.bands.Delta - m * p.F) < p.F / 10.0))
        throw ContractViolation("resonant_envelope: drive is not near the requested resonance");
    const double s = std::sin(p.bands.C0 * p.F * numerics::bessel_j(m, p.bands.J() / p.F) * t);
    return s * s;
}

}  // namespace lzs::magnus
