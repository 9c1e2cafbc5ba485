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

#include "lzs/sweep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "lzs/dynamics/dynamics.hpp"
#include "lzs/error.hpp"
#include "lzs/version.hpp"

namespace lzs::sweep {

namespace {

std::string format_double(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

}  // namespace

std::string HeatmapResult::meta(const std::string& key) const {
    for (const auto& [k, v] : metadata)
        if (k == key) return v;
    return {};
}

CellModel resolve_cell(const SweepConfig& cfg, double x, double y) {
    std::map<std::string, double> p = cfg.fixed;
    p[cfg.x.name] = x;
    if (cfg.y) p[cfg.y->name] = y;
    const auto get = [&](const char* n) { return p.at(n); };
    const auto has = [&](const char* n) { return p.count(n) > 0; };

    CellModel c;
    c.F = has("F") ? get("F") : 1.0 / get("inv_F");
    if (!(c.F > 0.0) || !std::isfinite(c.F)) throw ConfigError("cell: force must be positive");
    c.from_lattice = has("V0") || has("V1");
    if (c.from_lattice) {
        c.spec.V1 = has("V0") ? get("V0") : get("V1");
        c.spec.V2 = has("V2") ? get("V2") : has("V2_ratio") ? get("V2_ratio") * c.spec.V1 : 0.0;
        c.spec.phi = has("phi") ? get("phi") : 0.0;
    } else {
        c.bands = lattice::BandParameters::from_drive(get("Delta"), get("J"), get("C0"));
    }
    return c;
}

struct BandMemo::Impl {
    struct Slot {
        std::once_flag once;
        Entry entry;
        std::exception_ptr failure;
    };
    lattice::LatticeOptions options;
    int m_max = 0;
    mutable std::mutex mutex;
    std::map<std::tuple<long long, long long, long long>, std::unique_ptr<Slot>> slots;
};

BandMemo::BandMemo(lattice::LatticeOptions options, int m_max) : impl_(std::make_unique<Impl>()) {
    impl_->options = options;
    impl_->m_max = m_max;
}

BandMemo::~BandMemo() = default;

std::size_t BandMemo::size() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->slots.size();
}

const BandMemo::Entry& BandMemo::get(const lattice::LatticeSpec& spec) {
    const auto round = [](double v) { return std::llround(v * 1e10); };
    const auto key = std::make_tuple(round(spec.V1), round(spec.V2), round(spec.phi));
    Impl::Slot* slot = nullptr;
    {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        auto& s = impl_->slots[key];
        if (!s) s = std::make_unique<Impl::Slot>();
        slot = s.get();
    }
    std::call_once(slot->once, [&] {
        try {
            slot->entry.bands = lattice::extract_params(spec, impl_->options);
            slot->entry.resonances = spectral::resonance_table(slot->entry.bands, impl_->m_max);
        } catch (...) {
            slot->failure = std::current_exception();
        }
    });
    if (slot->failure) std::rethrow_exception(slot->failure);
    return slot->entry;
}

std::vector<double> sweep_x_values(const SweepConfig& cfg, Engine engine, BandMemo& memo) {
    if (engine == Engine::Numeric && cfg.numeric.points > 0) {
        AxisSpec a = cfg.x;
        a.points = cfg.numeric.points;
        return a.values();
    }
    std::vector<double> base = cfg.x.values();
    if (cfg.refine.factor <= 1 || cfg.refine.window <= 0.0) return base;

    // Resonances depend on everything but the force; resolve them at any x.
    const CellModel c = resolve_cell(cfg, base.front(), cfg.y ? cfg.y->min : 0.0);
    std::vector<spectral::ResonanceSolution> res;
    if (c.from_lattice) res = memo.get(c.spec).resonances;
    else res = spectral::resonance_table(c.bands, cfg.m_max);

    const bool inverse = cfg.x.name == "inv_F";
    const long fine_n = static_cast<long>(cfg.x.points - 1) * cfg.refine.factor;
    const double span = cfg.x.max - cfg.x.min;
    std::set<double> extra;
    for (const auto& r : res) {
        const double centre = inverse ? 1.0 / r.F_m : r.F_m;
        const double lo = centre * (1.0 - cfg.refine.window);
        const double hi = centre * (1.0 + cfg.refine.window);
        for (long j = 0; j <= fine_n; ++j) {
            if (j % cfg.refine.factor == 0) continue;  // coincides with a base point
            const double v = cfg.x.min + (span * static_cast<double>(j)) / static_cast<double>(fine_n);
            if (v >= lo && v <= hi) extra.insert(v);
        }
    }
    std::vector<double> out = base;
    out.insert(out.end(), extra.begin(), extra.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HeatmapResult run_sweep(const SweepConfig& cfg, Engine engine, int workers) {
    cfg.validate();
    if (engine == Engine::Both) throw ConfigError("run_sweep: pick one engine per result");
    if (workers < 1) throw ConfigError("run_sweep: workers must be positive");

    BandMemo memo(cfg.lattice, cfg.m_max);
    HeatmapResult r;
    r.x.name = cfg.x.name;
    r.x.values = sweep_x_values(cfg, engine, memo);
    if (cfg.y) {
        r.y.name = cfg.y->name;
        r.y.values = cfg.y->values();
    } else {
        r.y.name = "none";
        r.y.values = {0.0};
    }
    const std::size_t nx = r.nx();
    const std::size_t total = nx * r.ny();
    r.values.assign(total, std::numeric_limits<double>::quiet_NaN());
    std::vector<std::string> errors(total);

    dynamics::NumericAverageOptions nopts;
    nopts.tol = cfg.numeric.tol;
    nopts.nk = cfg.numeric.nk;
    nopts.horizon_periods = cfg.numeric.horizon_periods;

    const auto evaluate = [&](std::size_t idx) {
        const double xv = r.x.values[idx % nx];
        const double yv = r.y.values[idx / nx];
        const CellModel c = resolve_cell(cfg, xv, yv);
        lattice::BandParameters bands = c.bands;
        std::vector<spectral::ResonanceSolution> res;
        if (c.from_lattice) {
            const auto& e = memo.get(c.spec);
            bands = e.bands;
            res = e.resonances;
        } else if (engine == Engine::Analytic) {
            res = spectral::resonance_table(bands, cfg.m_max);
        }
        const double v = engine == Engine::Analytic ? spectral::mean_occupation_total(bands, c.F, res, cfg.width)
                                                    : dynamics::numeric_mean_occupation(bands, c.F, nopts);
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) throw DomainError("cell value outside [0, 1]");
        return v;
    };

    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t idx = next++; idx < total; idx = next++) {
            try {
                r.values[idx] = evaluate(idx);
            } catch (const std::exception& e) {
                errors[idx] = e.what();
            }
        }
    };
    const int n_threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), total));
    if (n_threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    for (std::size_t idx = 0; idx < total; ++idx) {
        if (errors[idx].empty()) continue;
        ++r.missing;
        r.diagnostics.push_back("cell ix=" + std::to_string(idx % nx) + " iy=" + std::to_string(idx / nx) + " " +
                                r.x.name + "=" + format_double(r.x.values[idx % nx]) + " " + r.y.name + "=" +
                                format_double(r.y.values[idx / nx]) + ": " + errors[idx]);
    }

    auto& m = r.metadata;
    m.emplace_back("name", cfg.name);
    m.emplace_back("mode", to_string(cfg.mode));
    m.emplace_back("engine", to_string(engine));
    m.emplace_back("code_version", kVersion);
    m.emplace_back("x", r.x.name);
    m.emplace_back("y", r.y.name);
    m.emplace_back("nx", std::to_string(nx));
    m.emplace_back("ny", std::to_string(r.ny()));
    m.emplace_back("missing", std::to_string(r.missing));
    for (const auto& [k, v] : cfg.provenance) m.emplace_back("config." + k, v);
    return r;
}

std::vector<HeatmapResult> run_sweep(const SweepConfig& cfg, int workers) {
    if (cfg.engine == Engine::Both) return {run_sweep(cfg, Engine::Analytic, workers), run_sweep(cfg, Engine::Numeric, workers)};
    return {run_sweep(cfg, cfg.engine, workers)};
}

}  // namespace lzs::sweep
