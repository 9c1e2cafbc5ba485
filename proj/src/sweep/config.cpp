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

#include "lzs/sweep/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "lzs/error.hpp"

namespace lzs::sweep {

namespace pt = boost::property_tree;

namespace {

double to_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double d = 0.0;
    try {
        d = std::stod(v, &used);
    } catch (const std::exception&) {
        throw ConfigError("config: " + key + " is not a number: '" + v + "'");
    }
    if (used != v.size() || !std::isfinite(d)) throw ConfigError("config: " + key + " is not a finite number: '" + v + "'");
    return d;
}

int to_int(const std::string& key, const std::string& v) {
    const double d = to_double(key, v);
    if (d != std::floor(d) || std::abs(d) > 1e9) throw ConfigError("config: " + key + " must be an integer");
    return static_cast<int>(d);
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config: " + key + " must be true or false");
}

// Accepts "2pi", "pi", "0.5pi" as well as plain numbers for angles.
double to_angle(const std::string& key, const std::string& v) {
    if (v.size() >= 2 && v.compare(v.size() - 2, 2, "pi") == 0) {
        const std::string head = v.substr(0, v.size() - 2);
        const double factor = head.empty() ? 1.0 : to_double(key, head);
        return factor * 3.14159265358979323846;
    }
    return to_double(key, v);
}

AxisSpec parse_axis(const std::string& section, const pt::ptree& tree) {
    AxisSpec a;
    std::set<std::string> seen;
    for (const auto& [key, node] : tree) {
        const std::string v = node.get_value<std::string>();
        const std::string full = section + "." + key;
        seen.insert(key);
        if (key == "name") a.name = v;
        else if (key == "min") a.min = to_angle(full, v);
        else if (key == "max") a.max = to_angle(full, v);
        else if (key == "points") a.points = to_int(full, v);
        else if (key == "endpoint") a.endpoint = to_bool(full, v);
        else throw ConfigError("config: unknown key " + full);
    }
    for (const char* required : {"name", "min", "max", "points"})
        if (!seen.count(required)) throw ConfigError("config: missing " + section + "." + required);
    return a;
}

}  // namespace

Mode parse_mode(const std::string& s) {
    if (s == "lzs-grid") return Mode::LzsGrid;
    if (s == "force-curve") return Mode::ForceCurve;
    if (s == "depth-force") return Mode::DepthForce;
    if (s == "superlattice-phase") return Mode::SuperlatticePhase;
    throw ConfigError("config: unknown mode '" + s + "'");
}

Engine parse_engine(const std::string& s) {
    if (s == "analytic") return Engine::Analytic;
    if (s == "numeric") return Engine::Numeric;
    if (s == "both") return Engine::Both;
    throw ConfigError("config: unknown engine '" + s + "'");
}

Scale parse_scale(const std::string& s) {
    if (s == "linear") return Scale::Linear;
    if (s == "log") return Scale::Log;
    throw ConfigError("config: unknown scale '" + s + "'");
}

Palette parse_palette(const std::string& s) {
    if (s == "gray") return Palette::Gray;
    if (s == "rainbow") return Palette::Rainbow;
    throw ConfigError("config: unknown palette '" + s + "'");
}

std::string to_string(Mode m) {
    switch (m) {
        case Mode::LzsGrid: return "lzs-grid";
        case Mode::ForceCurve: return "force-curve";
        case Mode::DepthForce: return "depth-force";
        case Mode::SuperlatticePhase: return "superlattice-phase";
    }
    return "?";
}

std::string to_string(Engine e) {
    switch (e) {
        case Engine::Analytic: return "analytic";
        case Engine::Numeric: return "numeric";
        case Engine::Both: return "both";
    }
    return "?";
}

std::vector<double> AxisSpec::values() const {
    validate();
    std::vector<double> v(static_cast<std::size_t>(points));
    const double span = max - min;
    const double denom = endpoint ? static_cast<double>(points - 1) : static_cast<double>(points);
    for (int i = 0; i < points; ++i) v[static_cast<std::size_t>(i)] = min + (span * i) / denom;
    return v;
}

void AxisSpec::validate() const {
    if (name.empty()) throw ConfigError("axis: empty name");
    if (points < 2) throw ConfigError("axis " + name + ": needs at least 2 points");
    if (!(min < max)) throw ConfigError("axis " + name + ": min must be below max");
}

void SweepConfig::validate() const {
    const auto& known = parameter_names();
    const auto is_known = [&](const std::string& n) { return std::find(known.begin(), known.end(), n) != known.end(); };
    x.validate();
    if (y) y->validate();
    std::set<std::string> names;
    for (const AxisSpec* a : {&x, y ? &*y : nullptr}) {
        if (!a) continue;
        if (!is_known(a->name)) throw ConfigError("config: unknown axis parameter " + a->name);
        if (!names.insert(a->name).second) throw ConfigError("config: axis parameter repeated: " + a->name);
    }
    for (const auto& [k, v] : fixed) {
        if (!is_known(k)) throw ConfigError("config: unknown fixed parameter " + k);
        if (names.count(k)) throw ConfigError("config: parameter both swept and fixed: " + k);
        names.insert(k);
    }
    const auto has = [&](const char* n) { return names.count(n) > 0; };
    if (has("F") == has("inv_F")) throw ConfigError("config: exactly one of F and inv_F is required");
    const bool lattice_mode = has("V0") || has("V1") || has("V2") || has("V2_ratio") || has("phi");
    if (lattice_mode) {
        if (has("Delta") || has("J") || has("C0"))
            throw ConfigError("config: lattice parameters and direct Delta/J/C0 are exclusive");
        if (has("V0") == has("V1")) throw ConfigError("config: exactly one of V0 and V1 is required");
        if (has("V0") && (has("V2") || has("V2_ratio") || has("phi")))
            throw ConfigError("config: V0 denotes a single lattice; use V1/V2/phi for a superlattice");
        if (has("V2") && has("V2_ratio")) throw ConfigError("config: V2 and V2_ratio are exclusive");
    } else if (!(has("Delta") && has("J") && has("C0"))) {
        throw ConfigError("config: Delta, J and C0 are required without lattice parameters");
    }

    const auto axis_is = [&](const std::optional<AxisSpec>& a, std::initializer_list<const char*> ok) {
        if (!a) return false;
        return std::any_of(ok.begin(), ok.end(), [&](const char* n) { return a->name == n; });
    };
    const std::optional<AxisSpec> xa = x;
    switch (mode) {
        case Mode::LzsGrid:
            if (lattice_mode) throw ConfigError("config: lzs-grid mode takes Delta/J/C0 directly");
            break;
        case Mode::ForceCurve:
            if (y || !axis_is(xa, {"F", "inv_F"})) throw ConfigError("config: force-curve mode sweeps only F or inv_F on x");
            break;
        case Mode::DepthForce:
            if (!lattice_mode || !y || !axis_is(xa, {"V0", "V1", "V2"}) || !axis_is(y, {"F", "inv_F"}))
                throw ConfigError("config: depth-force mode sweeps a lattice depth on x and F or inv_F on y");
            break;
        case Mode::SuperlatticePhase:
            if (!lattice_mode || !y || !axis_is(xa, {"V2", "V2_ratio"}) || !axis_is(y, {"phi"}))
                throw ConfigError("config: superlattice-phase mode sweeps V2 or V2_ratio on x and phi on y");
            break;
    }
    if (m_max < 0) throw ConfigError("config: m_max must be non-negative");
    if (refine.factor < 1 || refine.window < 0.0) throw ConfigError("config: invalid refinement");
    if (refine.factor > 1 && !axis_is(xa, {"F", "inv_F"}))
        throw ConfigError("config: refinement applies to a force axis on x");
    if (!(numeric.tol > 0.0 && numeric.tol <= 1e-3)) throw ConfigError("config: numeric.tol must lie in (0, 1e-3]");
    if (numeric.nk < 1) throw ConfigError("config: numeric.nk must be positive");
    if (numeric.points == 1 || numeric.points < 0) throw ConfigError("config: numeric.points must be 0 or >= 2");
    try {
        lattice.validate();
    } catch (const ContractViolation& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

SweepConfig parse_config(const std::string& text) {
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    SweepConfig cfg;
    bool have_x = false;
    for (const auto& [section, node] : tree) {
        if (node.empty() && !node.data().empty()) throw ConfigError("config: key outside a section: " + section);
        for (const auto& [key, value] : node) cfg.provenance.emplace_back(section + "." + key, value.get_value<std::string>());

        if (section == "axis.x") {
            cfg.x = parse_axis(section, node);
            have_x = true;
        } else if (section == "axis.y") {
            cfg.y = parse_axis(section, node);
        } else if (section == "fixed") {
            for (const auto& [key, value] : node)
                cfg.fixed[key] = to_angle("fixed." + key, value.get_value<std::string>());
        } else if (section == "sweep") {
            for (const auto& [key, value] : node) {
                const std::string v = value.get_value<std::string>();
                if (key == "name") cfg.name = v;
                else if (key == "mode") cfg.mode = parse_mode(v);
                else if (key == "engine") cfg.engine = parse_engine(v);
                else if (key == "m_max") cfg.m_max = to_int("sweep.m_max", v);
                else if (key == "lorentzian") {
                    if (v == "resonance") cfg.width = spectral::LorentzianWidth::AtResonance;
                    else if (v == "running") cfg.width = spectral::LorentzianWidth::Running;
                    else throw ConfigError("config: sweep.lorentzian must be resonance or running");
                } else throw ConfigError("config: unknown key sweep." + key);
            }
        } else if (section == "lattice") {
            for (const auto& [key, value] : node) {
                const std::string v = value.get_value<std::string>();
                const std::string full = "lattice." + key;
                if (key == "cutoff") cfg.lattice.cutoff = to_int(full, v);
                else if (key == "nq") cfg.lattice.nq = to_int(full, v);
                else if (key == "points_per_cell") cfg.lattice.points_per_cell = to_int(full, v);
                else if (key == "cells") cfg.lattice.cells = to_int(full, v);
                else if (key == "localization_threshold") cfg.lattice.localization_threshold = to_double(full, v);
                else throw ConfigError("config: unknown key " + full);
            }
        } else if (section == "refine") {
            for (const auto& [key, value] : node) {
                const std::string v = value.get_value<std::string>();
                if (key == "factor") cfg.refine.factor = to_int("refine.factor", v);
                else if (key == "window") cfg.refine.window = to_double("refine.window", v);
                else throw ConfigError("config: unknown key refine." + key);
            }
        } else if (section == "numeric") {
            for (const auto& [key, value] : node) {
                const std::string v = value.get_value<std::string>();
                const std::string full = "numeric." + key;
                if (key == "tol") cfg.numeric.tol = to_double(full, v);
                else if (key == "nk") cfg.numeric.nk = to_int(full, v);
                else if (key == "horizon_periods") cfg.numeric.horizon_periods = to_double(full, v);
                else if (key == "points") cfg.numeric.points = to_int(full, v);
                else throw ConfigError("config: unknown key " + full);
            }
        } else if (section == "output") {
            for (const auto& [key, value] : node) {
                const std::string v = value.get_value<std::string>();
                if (key == "scale") cfg.scale = parse_scale(v);
                else if (key == "palette") cfg.palette = parse_palette(v);
                else throw ConfigError("config: unknown key output." + key);
            }
        } else if (section == "report") {
            double rx = 0.0, ry = 0.0;
            for (const auto& [key, value] : node) {
                const std::string v = value.get_value<std::string>();
                if (key == "x") rx = to_angle("report.x", v);
                else if (key == "y") ry = to_angle("report.y", v);
                else throw ConfigError("config: unknown key report." + key);
            }
            cfg.report_point = std::make_pair(rx, ry);
        } else {
            throw ConfigError("config: unknown section [" + section + "]");
        }
    }
    if (!have_x) throw ConfigError("config: missing [axis.x]");
    cfg.validate();
    return cfg;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace lzs::sweep
