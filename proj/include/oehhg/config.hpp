#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "oehhg/ground_state.hpp"
#include "oehhg/pipeline.hpp"
#include "oehhg/sampling.hpp"
#include "oehhg/units.hpp"

// JSON run configuration. Physical inputs are given in laboratory units
// (W/cm^2, nm, kV/cm, THz) and converted to atomic units on materialization.
// The schema is strict: unknown keys are rejected.

namespace oehhg {

class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

using json = nlohmann::json;

namespace cfg_detail {

inline void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw config_error(path + ": expected an object");
}

inline void reject_unknown(const json& j, const std::set<std::string>& allowed,
                           const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw config_error(path + ": unknown key '" + it.key() + "'");
}

inline double get_number(const json& j, const std::string& key, const std::string& path,
                         std::optional<double> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw config_error(path + ": missing required key '" + key + "'");
    }
    if (!j.at(key).is_number()) throw config_error(path + "." + key + ": expected a number");
    return j.at(key).get<double>();
}

inline int get_int(const json& j, const std::string& key, const std::string& path,
                   std::optional<int> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw config_error(path + ": missing required key '" + key + "'");
    }
    if (!j.at(key).is_number_integer()) throw config_error(path + "." + key + ": expected an integer");
    return j.at(key).get<int>();
}

inline std::string get_string(const json& j, const std::string& key, const std::string& path,
                              std::optional<std::string> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw config_error(path + ": missing required key '" + key + "'");
    }
    if (!j.at(key).is_string()) throw config_error(path + "." + key + ": expected a string");
    return j.at(key).get<std::string>();
}

inline void check_positive(double v, const std::string& what) {
    if (!(v > 0.0)) throw config_error(what + " must be positive");
}

}  // namespace cfg_detail

struct ProbeConfig {
    double intensity_w_cm2 = 2.5e14;
    double wavelength_nm = 2000.0;
    int cycles = 10;
    int ramp_cycles = 1;
    double cep = 0.0;
};

struct AtomConfig {
    std::string label = "H";
    double ip_au = 0.0;        // required for label "custom"
    double soft_core_a = 0.0;  // 0: tune at materialization
};

struct ThzConfig {
    double amplitude_kv_cm = 0.0;
    double frequency_thz = 1.3;
    std::string mode = "quasi-static";  // or "full-wave"
    double offset_fs = 0.0;
};

struct GridConfig {
    double dx_au = 0.2;
    double dt_au = 0.05;
    double box_au = 0.0;  // half-width override; 0 = derive from the probe
    int num_points = 0;   // override; 0 = derive
};

struct DelayConfig {
    int count = 24;
    double span_thz_periods = 1.5;  // scan covers +-span periods around the pulse center
};

struct RunConfig {
    ProbeConfig probe;
    AtomConfig atom;
    std::optional<ThzConfig> thz;
    GridConfig grid;
    std::string window = "hann-flat-top";
    int monitored_order = 0;
    unsigned parallel = 0;
    std::optional<DelayConfig> delays;
};

struct ScanConfig {
    RunConfig base;
    std::string variable = "ET";  // ET | intensity | wavelength | cycles | atom
    std::vector<json> values;
    int monitored_order = 0;
};

inline ProbeConfig parse_probe(const json& j, const std::string& path) {
    using namespace cfg_detail;
    require_object(j, path);
    reject_unknown(j, {"intensity_w_cm2", "wavelength_nm", "cycles", "ramp_cycles", "cep"}, path);
    ProbeConfig p;
    p.intensity_w_cm2 = get_number(j, "intensity_w_cm2", path);
    p.wavelength_nm = get_number(j, "wavelength_nm", path);
    p.cycles = get_int(j, "cycles", path, 10);
    p.ramp_cycles = get_int(j, "ramp_cycles", path, 1);
    p.cep = get_number(j, "cep", path, 0.0);
    check_positive(p.intensity_w_cm2, path + ".intensity_w_cm2");
    check_positive(p.wavelength_nm, path + ".wavelength_nm");
    if (p.cycles < 1) throw config_error(path + ".cycles must be >= 1");
    if (p.ramp_cycles < 0) throw config_error(path + ".ramp_cycles must be >= 0");
    if (p.cycles < 2 * p.ramp_cycles + 1)
        throw config_error(path + ": cycles must be >= 2*ramp_cycles + 1");
    return p;
}

inline AtomConfig parse_atom(const json& j, const std::string& path) {
    using namespace cfg_detail;
    require_object(j, path);
    reject_unknown(j, {"label", "ip_au", "soft_core_a"}, path);
    AtomConfig a;
    a.label = get_string(j, "label", path, "H");
    a.ip_au = get_number(j, "ip_au", path, 0.0);
    a.soft_core_a = get_number(j, "soft_core_a", path, 0.0);
    if (a.label == "custom") {
        if (a.ip_au <= 0.0) throw config_error(path + ": custom atom requires positive ip_au");
    } else if (a.label != "H" && a.label != "He" && a.label != "Ne" && a.label != "Ar") {
        throw config_error(path + ": unknown atom label '" + a.label + "'");
    }
    return a;
}

inline ThzConfig parse_thz(const json& j, const std::string& path) {
    using namespace cfg_detail;
    require_object(j, path);
    reject_unknown(j, {"amplitude_kv_cm", "frequency_thz", "mode", "offset_fs"}, path);
    ThzConfig t;
    t.amplitude_kv_cm = get_number(j, "amplitude_kv_cm", path);
    t.frequency_thz = get_number(j, "frequency_thz", path);
    t.mode = get_string(j, "mode", path, "quasi-static");
    t.offset_fs = get_number(j, "offset_fs", path, 0.0);
    check_positive(t.frequency_thz, path + ".frequency_thz");
    if (t.amplitude_kv_cm < 0.0) throw config_error(path + ".amplitude_kv_cm must be >= 0");
    if (t.mode != "quasi-static" && t.mode != "full-wave")
        throw config_error(path + ".mode must be 'quasi-static' or 'full-wave'");
    return t;
}

inline GridConfig parse_grid(const json& j, const std::string& path) {
    using namespace cfg_detail;
    require_object(j, path);
    reject_unknown(j, {"dx_au", "dt_au", "box_au", "num_points"}, path);
    GridConfig g;
    g.dx_au = get_number(j, "dx_au", path, 0.2);
    g.dt_au = get_number(j, "dt_au", path, 0.05);
    g.box_au = get_number(j, "box_au", path, 0.0);
    g.num_points = get_int(j, "num_points", path, 0);
    check_positive(g.dx_au, path + ".dx_au");
    check_positive(g.dt_au, path + ".dt_au");
    if (g.box_au < 0.0) throw config_error(path + ".box_au must be >= 0");
    if (g.num_points < 0) throw config_error(path + ".num_points must be >= 0");
    return g;
}

inline DelayConfig parse_delays(const json& j, const std::string& path) {
    using namespace cfg_detail;
    require_object(j, path);
    reject_unknown(j, {"count", "span_thz_periods"}, path);
    DelayConfig d;
    d.count = get_int(j, "count", path, 24);
    d.span_thz_periods = get_number(j, "span_thz_periods", path, 1.5);
    if (d.count < 2) throw config_error(path + ".count must be >= 2");
    check_positive(d.span_thz_periods, path + ".span_thz_periods");
    return d;
}

inline RunConfig parse_run_config(const json& j, const std::string& path = "config") {
    using namespace cfg_detail;
    require_object(j, path);
    reject_unknown(j,
                   {"probe", "atom", "thz", "grid", "window", "monitored_order", "parallel",
                    "delays"},
                   path);
    RunConfig c;
    if (!j.contains("probe")) throw config_error(path + ": missing required key 'probe'");
    c.probe = parse_probe(j.at("probe"), path + ".probe");
    if (j.contains("atom")) c.atom = parse_atom(j.at("atom"), path + ".atom");
    if (j.contains("thz")) c.thz = parse_thz(j.at("thz"), path + ".thz");
    if (j.contains("grid")) c.grid = parse_grid(j.at("grid"), path + ".grid");
    c.window = get_string(j, "window", path, "hann-flat-top");
    if (c.window != "hann-flat-top" && c.window != "hann-full" && c.window != "rect")
        throw config_error(path + ".window must be hann-flat-top, hann-full or rect");
    c.monitored_order = get_int(j, "monitored_order", path, 0);
    if (c.monitored_order < 0 || c.monitored_order % 2 != 0)
        throw config_error(path + ".monitored_order must be a non-negative even integer");
    const int par = get_int(j, "parallel", path, 0);
    if (par < 0) throw config_error(path + ".parallel must be >= 0");
    c.parallel = static_cast<unsigned>(par);
    if (j.contains("delays")) c.delays = parse_delays(j.at("delays"), path + ".delays");
    return c;
}

inline ScanConfig parse_scan_config(const json& j, const std::string& path = "config") {
    using namespace cfg_detail;
    require_object(j, path);
    if (!j.contains("scan")) throw config_error(path + ": missing required key 'scan'");
    json base = j;
    base.erase("scan");
    ScanConfig sc;
    sc.base = parse_run_config(base, path);

    const json& s = j.at("scan");
    require_object(s, path + ".scan");
    reject_unknown(s, {"variable", "values", "monitored_order"}, path + ".scan");
    sc.variable = get_string(s, "variable", path + ".scan", "ET");
    if (sc.variable != "ET" && sc.variable != "intensity" && sc.variable != "wavelength" &&
        sc.variable != "cycles" && sc.variable != "atom")
        throw config_error(path + ".scan.variable must be one of ET|intensity|wavelength|cycles|atom");
    if (!s.contains("values") || !s.at("values").is_array() || s.at("values").empty())
        throw config_error(path + ".scan.values must be a nonempty array");
    for (const auto& v : s.at("values")) sc.values.push_back(v);
    sc.monitored_order = get_int(s, "monitored_order", path + ".scan", 0);
    return sc;
}

inline json load_json_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw config_error("cannot open config file '" + file + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error("config parse error in '" + file + "': " + e.what());
    }
    return j;
}

// ---- materialization into simulation structs ----

inline ProbePulse build_probe(const ProbeConfig& c) {
    ProbePulse p;
    p.e0 = intensity_to_field(c.intensity_w_cm2);
    p.omega0 = wavelength_to_frequency(c.wavelength_nm);
    p.total_cycles = c.cycles;
    p.ramp_cycles = c.ramp_cycles;
    p.cep = c.cep;
    p.validate();
    return p;
}

/// Resolve the atom: predefined targets carry pinned soft-core parameters,
/// custom ones are tuned on the fly unless the parameter is given.
inline AtomModel build_atom(const AtomConfig& c) {
    if (c.label != "custom") {
        AtomModel m = predefined_atom(c.label);
        if (c.soft_core_a > 0.0) m.soft_core_a = c.soft_core_a;
        if (c.ip_au > 0.0) m.ip = c.ip_au;
        return m;
    }
    AtomModel m;
    m.label = "custom";
    m.ip = c.ip_au;
    m.soft_core_a = c.soft_core_a > 0.0 ? c.soft_core_a : tune_soft_core(c.ip_au);
    m.validate();
    return m;
}

inline ThzPulse build_thz(const ThzConfig& c) {
    ThzPulse t;
    t.et0 = kv_per_cm_to_field(c.amplitude_kv_cm);
    t.omega = thz_to_omega(c.frequency_thz);
    t.time_offset = fs_to_au(c.offset_fs);
    t.validate();
    return t;
}

inline WindowKind parse_window(const std::string& name) {
    if (name == "hann-flat-top") return WindowKind::hann_flat_top;
    if (name == "hann-full") return WindowKind::hann_full;
    if (name == "rect") return WindowKind::rect;
    throw config_error("unknown window '" + name + "'");
}

inline GridSpec build_grid(const GridConfig& c, const ProbePulse& probe) {
    if (c.box_au > 0.0 || c.num_points > 0) {
        GridSpec g = default_grid(probe, c.dx_au, c.dt_au);
        if (c.box_au > 0.0) {
            g.x_min = -c.box_au;
            g.x_max = c.box_au;
            g.num_points = next_power_of_two(static_cast<int>(std::ceil(2.0 * c.box_au / c.dx_au)));
        }
        if (c.num_points > 0) g.num_points = c.num_points;
        g.dt = c.dt_au;
        g.validate();
        return g;
    }
    return default_grid(probe, c.dx_au, c.dt_au);
}

inline SimConfig build_sim(const RunConfig& c) {
    SimConfig sim;
    sim.probe = build_probe(c.probe);
    sim.atom = build_atom(c.atom);
    sim.grid = build_grid(c.grid, sim.probe);
    sim.window = parse_window(c.window);
    sim.monitored_order = c.monitored_order;
    return sim;
}

/// Canonical textual form (nlohmann orders object keys), used for hashing.
inline std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace oehhg
