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

// Command-line front end: band extraction, single evolutions, Magnus comparison,
// resonance tables, config-driven sweeps and the canonical figure presets.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lzs/dynamics/dynamics.hpp"
#include "lzs/error.hpp"
#include "lzs/lattice/band_parameters.hpp"
#include "lzs/magnus/magnus.hpp"
#include "lzs/spectral/spectral.hpp"
#include "lzs/sweep/figure.hpp"
#include "lzs/sweep/output.hpp"
#include "lzs/version.hpp"

namespace {

using namespace lzs;

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct BandSource {
    double V1 = 4.0;
    double V2 = 0.0;
    double phi = 0.0;
    std::optional<double> Delta, Ja, Jb, J, C0;
    lattice::LatticeOptions grid;

    void attach(CLI::App* app) {
        app->add_option("--V1,--V0", V1, "fundamental lattice depth (recoil energies)");
        app->add_option("--V2", V2, "second-harmonic depth");
        app->add_option("--phi", phi, "relative phase in [0, 2pi)");
        app->add_option("--Delta", Delta, "band gap (overrides the lattice)");
        app->add_option("--Ja", Ja, "lower-band hopping");
        app->add_option("--Jb", Jb, "upper-band hopping");
        app->add_option("--J", J, "drive amplitude Jb - Ja (split symmetrically)");
        app->add_option("--C0", C0, "band coupling");
        app->add_option("--cutoff", grid.cutoff, "plane waves (odd)");
        app->add_option("--nq", grid.nq, "quasimomentum points");
        app->add_option("--points-per-cell", grid.points_per_cell, "x samples per lattice constant");
        app->add_option("--cells", grid.cells, "Wannier window in lattice constants");
    }

    lattice::BandParameters resolve() const {
        const bool direct = Delta || Ja || Jb || J || C0;
        if (!direct) return lattice::extract_params({V1, V2, phi}, grid);
        if (!Delta || !C0) throw ConfigError("direct parameters need --Delta and --C0");
        if (J && (Ja || Jb)) throw ConfigError("--J excludes --Ja/--Jb");
        if (J) return lattice::BandParameters::from_drive(*Delta, *J, *C0);
        if (!Ja || !Jb) throw ConfigError("direct parameters need --J or both --Ja and --Jb");
        return {*Delta, *Ja, *Jb, *C0};
    }
};

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw Error("cannot open " + path);
    return file;
}

void print_bands(const lattice::BandParameters& b) {
    std::printf("# Delta=%.10g Ja=%.10g Jb=%.10g J=%.10g C0=%.10g\n", b.Delta, b.Ja, b.Jb, b.J(), b.C0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landau-Zener-Stueckelberg interferometry in tilted optical lattices"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // bands
    BandSource bands_src;
    std::string bands_out, wannier_out;
    auto* bands = app.add_subcommand("bands", "Bloch bands, Wannier functions and two-band parameters");
    bands_src.attach(bands);
    bands->add_option("--out", bands_out, "CSV of q, E_a, E_b");
    bands->add_option("--wannier-out", wannier_out, "CSV of x, w_a, w_b");

    // evolve
    BandSource evolve_src;
    double F = 1.0, k = 0.0, periods = 100.0, tol = 1e-9;
    int nk = 1;
    std::string gauge = "interaction", evolve_out;
    auto* evolve = app.add_subcommand("evolve", "Exact two-band evolution, CSV of t, P_b");
    evolve_src.attach(evolve);
    evolve->add_option("--F", F, "Stark force")->check(CLI::PositiveNumber);
    evolve->add_option("--k", k, "quasimomentum (ignored when --nk > 1)");
    evolve->add_option("--nk", nk, "uniform k points")->check(CLI::PositiveNumber);
    evolve->add_option("--t-final", periods, "duration in Bloch periods")->check(CLI::PositiveNumber);
    evolve->add_option("--tol", tol, "integrator tolerance");
    evolve->add_option("--gauge", gauge, "interaction or bloch")->check(CLI::IsMember({"interaction", "bloch"}));
    evolve->add_option("--out", evolve_out, "output CSV (default stdout)");

    // magnus
    BandSource magnus_src;
    double mF = 1.0, m_periods = 2.0;
    int samples = 200;
    std::string magnus_out;
    auto* magnus = app.add_subcommand("magnus", "First/second-order Magnus against the exact evolution");
    magnus_src.attach(magnus);
    magnus->add_option("--F", mF, "Stark force")->check(CLI::PositiveNumber);
    magnus->add_option("--t-final", m_periods, "duration in Bloch periods")->check(CLI::PositiveNumber);
    magnus->add_option("--samples", samples, "time samples")->check(CLI::PositiveNumber);
    magnus->add_option("--out", magnus_out, "output CSV (default stdout)");

    // resonance
    BandSource res_src;
    int m_max = 6;
    std::string res_out;
    auto* resonance = app.add_subcommand("resonance", "Stark-shifted resonance forces F_m");
    res_src.attach(resonance);
    resonance->add_option("--m-max", m_max, "highest order")->check(CLI::PositiveNumber);
    resonance->add_option("--out", res_out, "output CSV (default stdout)");

    // sweep / figure
    std::string config_path, out_dir = "out", engine, scale, preset;
    int workers = 1;
    auto* sweep = app.add_subcommand("sweep", "Run a sweep config file");
    sweep->add_option("--config", config_path, "INI sweep description")->required();
    auto* figure = app.add_subcommand("figure", "Run a compiled-in figure preset");
    figure->add_option("preset", preset, "fig1, fig2, fig3a, fig3b, fig4 or all")->required();
    for (auto* sub : {sweep, figure}) {
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--engine", engine, "analytic, numeric or both")->check(CLI::IsMember({"analytic", "numeric", "both"}));
        sub->add_option("--scale", scale, "linear or log")->check(CLI::IsMember({"linear", "log"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*bands) {
            const auto report = bands_src.Delta || bands_src.C0 || bands_src.J
                                    ? throw ConfigError("bands works from lattice parameters only")
                                    : lattice::extract_params_detailed({bands_src.V1, bands_src.V2, bands_src.phi}, bands_src.grid);
            print_bands(report.params);
            std::printf("# hopping matrix elements: Ja=%.10g Jb=%.10g\n", report.Ja_matrix_element, report.Jb_matrix_element);
            std::printf("# window tails: w_a=%.3g w_b=%.3g C0 integrand=%.3g\n", report.tail_a, report.tail_b, report.tail_integrand);
            if (!bands_out.empty()) {
                const auto q = lattice::default_q_grid(bands_src.grid.nq);
                const auto bp = lattice::bloch_bands({bands_src.V1, bands_src.V2, bands_src.phi}, bands_src.grid.cutoff, q);
                std::ofstream f;
                auto& os = open_out(bands_out, f);
                os << "q,E_a,E_b\n";
                os.precision(12);
                for (std::size_t i = 0; i < q.size(); ++i) os << q[i] << ',' << bp.a.energies[i] << ',' << bp.b.energies[i] << '\n';
            }
            if (!wannier_out.empty()) {
                const auto pair = lattice::wannier_pair({bands_src.V1, bands_src.V2, bands_src.phi}, 0, bands_src.grid);
                std::ofstream f;
                auto& os = open_out(wannier_out, f);
                os << "x,w_a,w_b\n";
                os.precision(12);
                for (std::size_t i = 0; i < pair.a.x.size(); ++i)
                    os << pair.a.x[i] << ',' << pair.a.values[i].real() << ',' << pair.b.values[i].real() << '\n';
            }
        } else if (*evolve) {
            const auto b = evolve_src.resolve();
            dynamics::DrivenTwoBandParameters p{b, F, 0.0};
            dynamics::EvolutionConfig cfg;
            cfg.k_grid = nk > 1 ? dynamics::EvolutionConfig::uniform_k_grid(nk) : std::vector<double>{k};
            cfg.t_final = periods * p.bloch_period();
            cfg.tol = tol;
            cfg.gauge = gauge == "bloch" ? dynamics::Gauge::Bloch : dynamics::Gauge::Interaction;
            const auto s = dynamics::occupation_series(p, cfg);
            std::ofstream f;
            auto& os = open_out(evolve_out, f);
            os << "t,P_b\n";
            os.precision(12);
            for (std::size_t i = 0; i < s.times.size(); ++i) os << s.times[i] << ',' << s.values[i] << '\n';
        } else if (*magnus) {
            const auto b = magnus_src.resolve();
            dynamics::DrivenTwoBandParameters p{b, mF, 0.0};
            const double t_end = m_periods * p.bloch_period();
            std::vector<double> times;
            for (int i = 0; i <= samples; ++i) times.push_back(t_end * i / samples);
            const auto tr = dynamics::evolve_single(p, times, 1e-10);
            std::ofstream f;
            auto& os = open_out(magnus_out, f);
            os << "t,P_b_order1,P_b_order2,P_b_ode\n";
            os.precision(12);
            for (std::size_t i = 0; i < times.size(); ++i)
                os << times[i] << ',' << magnus::pb_first_order(p, times[i]) << ',' << magnus::pb_second_order(p, times[i])
                   << ',' << std::norm(tr.states[i].b) << '\n';
        } else if (*resonance) {
            const auto b = res_src.resolve();
            print_bands(b);
            std::ofstream f;
            auto& os = open_out(res_out, f);
            os << "m,Delta_over_m,F_m,residual,iterations\n";
            os.precision(12);
            for (const auto& r : spectral::resonance_table(b, m_max))
                os << r.m << ',' << r.F_m_uncorrected << ',' << r.F_m << ',' << r.residual << ',' << r.iterations << '\n';
        } else {
            sweep::FigureOptions fo;
            fo.out_dir = out_dir;
            fo.workers = workers;
            if (!engine.empty()) fo.engine = sweep::parse_engine(engine);
            if (!scale.empty()) fo.scale = sweep::parse_scale(scale);
            std::vector<sweep::FigureArtifacts> runs;
            if (*sweep) {
                runs.push_back(sweep::run_config(sweep::load_config(config_path), fo));
            } else if (preset == "all") {
                for (const auto& name : sweep::preset_names()) runs.push_back(sweep::run_figure(name, fo));
            } else {
                runs.push_back(sweep::run_figure(preset, fo));
            }
            int missing = 0;
            for (const auto& run : runs) {
                for (const auto& file : run.files) std::cout << file << '\n';
                for (const auto& r : run.results) missing += static_cast<int>(r.missing);
            }
            if (missing > 0) {
                std::cerr << missing << " cells failed; see the report files\n";
                return kExitNumeric;
            }
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ContractViolation& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return 0;
}
