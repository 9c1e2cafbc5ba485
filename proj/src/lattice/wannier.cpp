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
#include <numeric>

#include <unsupported/Eigen/FFT>

#include "lzs/error.hpp"
#include "lzs/lattice/band_parameters.hpp"
#include "lzs/lattice/lattice.hpp"

namespace lzs::lattice {

using numerics::kPi;

namespace {

constexpr double kMinTransportOverlap = 0.1;

// Parallel transport along the q grid with the Berry phase spread uniformly; in 1D this is
// the maximally localized gauge. Requires the grid from default_q_grid.
void parallel_transport(BlochBand& band) {
    auto& c = band.coefficients;
    const std::size_t nq = c.size();
    const std::size_t n = c.front().size();
    const auto dot = [n](const std::vector<cplx>& u, const std::vector<cplx>& v) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::conj(u[i]) * v[i];
        return s;
    };
    for (std::size_t j = 1; j < nq; ++j) {
        const cplx m = dot(c[j - 1], c[j]);
        if (std::abs(m) < kMinTransportOverlap)
            throw GaugeError("wannier: Bloch functions of neighboring q points are nearly orthogonal");
        const cplx phase = std::conj(m) / std::abs(m);
        for (auto& e : c[j]) e *= phase;
    }
    // u_{q+1} has coefficients c_{n+1}(q).
    std::vector<cplx> wrapped(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) wrapped[i] = c[0][i + 1];
    const cplx closing = dot(c[nq - 1], wrapped);
    if (std::abs(closing) < kMinTransportOverlap)
        throw GaugeError("wannier: Brillouin-zone closure overlap vanishes");
    const double theta = std::arg(closing);
    for (std::size_t j = 0; j < nq; ++j) {
        const cplx phase = std::exp(cplx(0.0, theta * static_cast<double>(j) / static_cast<double>(nq)));
        for (auto& e : c[j]) e *= phase;
    }
}

struct Supercell {
    int nq = 0;
    int p = 0;
    std::size_t size() const { return static_cast<std::size_t>(nq) * static_cast<std::size_t>(p); }
};

// w_0(x_s) on the nq-cell supercell, x_s = 2 pi s / p.
std::vector<cplx> synthesize(const BlochBand& band, const Supercell& sc, bool apply_kinetic) {
    const auto big_n = static_cast<long>(sc.size());
    const int half = (band.cutoff - 1) / 2;
    std::vector<cplx> freq(sc.size(), 0.0);
    const double norm = 1.0 / (sc.nq * std::sqrt(2.0 * kPi));
    for (std::size_t iq = 0; iq < band.q.size(); ++iq) {
        const long jq = std::lround(band.q[iq] * sc.nq);
        for (int m = -half; m <= half; ++m) {
            const long k = jq + static_cast<long>(sc.nq) * m;
            cplx a = band.coefficients[iq][static_cast<std::size_t>(m + half)] * norm;
            if (apply_kinetic) {
                const double kk = static_cast<double>(k) / sc.nq;
                a *= 4.0 * kk * kk;
            }
            freq[static_cast<std::size_t>(((k % big_n) + big_n) % big_n)] += a;
        }
    }
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    std::vector<cplx> out;
    fft.inv(out, freq);
    return out;
}

// Circular centroid of |w|^2 in sample units.
double centroid(const std::vector<cplx>& w) {
    const double n = static_cast<double>(w.size());
    cplx acc = 0.0;
    for (std::size_t s = 0; s < w.size(); ++s)
        acc += std::norm(w[s]) * std::exp(cplx(0.0, 2.0 * kPi * static_cast<double>(s) / n));
    double c = std::arg(acc) / (2.0 * kPi) * n;
    if (c < 0.0) c += n;
    return c;
}

long wrap(long s, long n) { return ((s % n) + n) % n; }

struct PairBuild {
    BandPair bands;
    WannierPair pair;
    std::vector<cplx> hw_a;  // H w_a on the window, site 0
    std::vector<cplx> hw_b;
    double tail_integrand = 0.0;
};

WannierFunction window_of(const std::vector<cplx>& cell_values, int band, int l, long start,
                          const LatticeOptions& opts, long shift_samples) {
    const long n = static_cast<long>(cell_values.size());
    const long len = static_cast<long>(opts.cells) * opts.points_per_cell;
    WannierFunction w;
    w.band = band;
    w.site = l;
    w.dx = 2.0 * kPi / opts.points_per_cell;
    w.x.resize(static_cast<std::size_t>(len));
    w.values.resize(static_cast<std::size_t>(len));
    for (long i = 0; i < len; ++i) {
        const long s = start + i;
        w.x[static_cast<std::size_t>(i)] = static_cast<double>(s) * w.dx;
        w.values[static_cast<std::size_t>(i)] =
            cell_values[static_cast<std::size_t>(wrap(s - shift_samples - static_cast<long>(l) * opts.points_per_cell, n))];
    }
    double peak = 0.0, mass = 0.0, first = 0.0;
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        const double a = std::abs(w.values[i]);
        peak = std::max(peak, a);
        mass += a * a;
        first += a * a * w.x[i];
    }
    w.center = mass > 0.0 ? first / mass : 0.0;
    double edge = 0.0;
    const auto p = static_cast<std::size_t>(opts.points_per_cell);
    for (std::size_t i = 0; i < p; ++i) {
        edge = std::max(edge, std::abs(w.values[i]));
        edge = std::max(edge, std::abs(w.values[w.values.size() - 1 - i]));
    }
    w.tail = peak > 0.0 ? edge / peak : 0.0;
    return w;
}

PairBuild build_pair(const LatticeSpec& spec, int l, const LatticeOptions& opts, bool with_hamiltonian) {
    spec.validate();
    opts.validate();
    PairBuild out;
    out.bands = bloch_bands(spec, opts.cutoff, default_q_grid(opts.nq));
    if (spec.V1 == 0.0 && spec.V2 == 0.0) throw GaugeError("wannier: free particle has no gapped lowest band");
    BandPair gauged = out.bands;
    parallel_transport(gauged.a);
    parallel_transport(gauged.b);

    const Supercell sc{opts.nq, opts.points_per_cell};
    auto wa = synthesize(gauged.a, sc, false);
    auto wb = synthesize(gauged.b, sc, false);
    const long n = static_cast<long>(sc.size());
    const long p = opts.points_per_cell;

    // Same-site convention: translate w_b by whole cells onto w_a's cell.
    const double ca = centroid(wa);
    const double cb = centroid(wb);
    double d = ca - cb;
    if (d > 0.5 * n) d -= n;
    if (d < -0.5 * n) d += n;
    const long shift_b = std::lround(d / p) * p;

    // Global phases: w_a real-positive at its peak.
    std::size_t peak = 0;
    for (std::size_t s = 1; s < wa.size(); ++s)
        if (std::abs(wa[s]) > std::abs(wa[peak])) peak = s;
    const cplx pa = std::conj(wa[peak]) / std::abs(wa[peak]);
    for (auto& v : wa) v *= pa;

    const long cell_a = static_cast<long>(std::floor(ca / p));
    const long start = (cell_a - (opts.cells - 1) / 2) * p;
    out.pair.a = window_of(wa, 0, l, start, opts, 0);
    out.pair.b = window_of(wb, 1, l, start, opts, shift_b);

    // Band coupling <w_a|(x - x_c)/2pi|w_b>, made real-negative by the phase of w_b.
    const double xc = well_center(spec);
    cplx c0 = 0.0;
    double integrand_peak = 0.0;
    std::vector<double> integrand(out.pair.a.values.size());
    for (std::size_t i = 0; i < integrand.size(); ++i) {
        const cplx term = std::conj(out.pair.a.values[i]) * ((out.pair.a.x[i] - xc) / (2.0 * kPi)) * out.pair.b.values[i];
        c0 += term;
        integrand[i] = std::abs(term);
        integrand_peak = std::max(integrand_peak, integrand[i]);
    }
    c0 *= out.pair.a.dx;
    double integrand_edge = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(p); ++i)
        integrand_edge = std::max({integrand_edge, integrand[i], integrand[integrand.size() - 1 - i]});
    out.tail_integrand = integrand_peak > 0.0 ? integrand_edge / integrand_peak : 0.0;

    const cplx pb = std::abs(c0) > 0.0 ? -std::conj(c0) / std::abs(c0) : cplx(1.0);
    for (auto& v : wb) v *= pb;
    for (auto& v : out.pair.b.values) v *= pb;

    if (with_hamiltonian) {
        // H w = -4 w'' + V w, kinetic part exact in the plane-wave representation.
        auto ka = synthesize(gauged.a, sc, true);
        auto kb = synthesize(gauged.b, sc, true);
        for (auto& v : ka) v *= pa;
        for (auto& v : kb) v *= pb;
        const auto hw = [&](const std::vector<cplx>& kin, const std::vector<cplx>& w, long shift) {
            std::vector<cplx> r(out.pair.a.values.size());
            for (std::size_t i = 0; i < r.size(); ++i) {
                const long s = wrap(start + static_cast<long>(i) - shift, n);
                const double x = static_cast<double>(start + static_cast<long>(i)) * out.pair.a.dx;
                r[i] = kin[static_cast<std::size_t>(s)] + potential_eval(spec, x) * w[static_cast<std::size_t>(s)];
            }
            return r;
        };
        out.hw_a = hw(ka, wa, 0);
        out.hw_b = hw(kb, wb, shift_b);
    }
    return out;
}

double matrix_element_hopping(const WannierFunction& w0, const std::vector<cplx>& hw0, const LatticeOptions& opts) {
    // -2 <w_1|H|w_0>, w_1(x) = w_0(x - 2pi) on the same window.
    const std::size_t p = static_cast<std::size_t>(opts.points_per_cell);
    cplx acc = 0.0;
    for (std::size_t i = p; i < hw0.size(); ++i) acc += std::conj(w0.values[i - p]) * hw0[i];
    return -2.0 * (acc * w0.dx).real();
}

double imaginary_ratio(const WannierFunction& w) {
    double im = 0.0, peak = 0.0;
    for (const auto& v : w.values) {
        im = std::max(im, std::abs(v.imag()));
        peak = std::max(peak, std::abs(v));
    }
    return peak > 0.0 ? im / peak : 0.0;
}

}  // namespace

cplx overlap(const WannierFunction& u, const WannierFunction& v) {
    if (u.values.size() != v.values.size()) throw ContractViolation("overlap: windows differ");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) acc += std::conj(u.values[i]) * v.values[i];
    return acc * u.dx;
}

WannierPair wannier_pair(const LatticeSpec& spec, int l, const LatticeOptions& opts) {
    return build_pair(spec, l, opts, false).pair;
}

WannierFunction wannier(const LatticeSpec& spec, int band, int l, const LatticeOptions& opts) {
    if (band != 0 && band != 1) throw ContractViolation("wannier: band index must be 0 (a) or 1 (b)");
    auto pair = wannier_pair(spec, l, opts);
    return band == 0 ? pair.a : pair.b;
}

ExtractionReport extract_params_detailed(const LatticeSpec& spec, const LatticeOptions& opts) {
    const auto built = build_pair(spec, 0, opts, true);
    ExtractionReport r;
    const auto& ea = built.bands.a.energies;
    const auto& eb = built.bands.b.energies;
    const double nq = static_cast<double>(ea.size());
    double mean_a = 0.0, mean_b = 0.0, cos_a = 0.0, cos_b = 0.0;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        const double c = std::cos(2.0 * kPi * built.bands.a.q[i]);
        mean_a += ea[i];
        mean_b += eb[i];
        cos_a += ea[i] * c;
        cos_b += eb[i] * c;
    }
    r.params.Delta = (mean_b - mean_a) / nq;
    r.params.Ja = -2.0 * cos_a / nq;
    r.params.Jb = -2.0 * cos_b / nq;

    const auto& wa = built.pair.a;
    const auto& wb = built.pair.b;
    const double xc = well_center(spec);
    double c0 = 0.0;
    for (std::size_t i = 0; i < wa.values.size(); ++i)
        c0 += (std::conj(wa.values[i]) * ((wa.x[i] - xc) / (2.0 * kPi)) * wb.values[i]).real();
    r.params.C0 = c0 * wa.dx;

    r.tail_a = wa.tail;
    r.tail_b = wb.tail;
    r.tail_integrand = built.tail_integrand;
    r.imag_a = imaginary_ratio(wa);
    r.imag_b = imaginary_ratio(wb);
    r.Ja_matrix_element = matrix_element_hopping(wa, built.hw_a, opts);
    r.Jb_matrix_element = matrix_element_hopping(wb, built.hw_b, opts);

    if (r.tail_a > opts.localization_threshold || r.tail_integrand > opts.localization_threshold)
        throw AccuracyError("extract_params: Wannier tails not converged inside the window", r.params.C0,
                            std::max(r.tail_a, r.tail_integrand));
    return r;
}

BandParameters extract_params(const LatticeSpec& spec, const LatticeOptions& opts) {
    return extract_params_detailed(spec, opts).params;
}

}  // namespace lzs::lattice
