#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "oehhg/orbits.hpp"
#include "oehhg/pipeline.hpp"
#include "oehhg/sampling.hpp"
#include "oehhg/spectrum.hpp"

// CSV / JSON / binary emitters. All text output is built in memory with a
// fixed number format so identical inputs give byte-identical files.

namespace oehhg {

#ifndef OEHHG_VERSION
#define OEHHG_VERSION "0.0.0"
#endif

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string csv_header_comment(const std::string& config_hash) {
    return "# oehhg " OEHHG_VERSION " config_hash=" + config_hash + "\n";
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

inline std::string signal_csv(const DipoleSignal& sig, const std::string& config_hash) {
    std::string s = csv_header_comment(config_hash);
    s += "t_au,accel_au\n";
    for (std::size_t i = 0; i < sig.size(); ++i)
        s += fmt_double(sig.time[i]) + "," + fmt_double(sig.accel[i]) + "\n";
    return s;
}

inline std::string spectrum_csv(const HhgSpectrum& spec, const std::string& config_hash,
                                double max_order = 0.0) {
    std::string s = csv_header_comment(config_hash);
    s += "order,intensity\n";
    const std::size_t limit =
        max_order > 0.0
            ? std::min(spec.intensity.size(),
                       static_cast<std::size_t>(max_order / spec.order_step) + 1)
            : spec.intensity.size();
    for (std::size_t i = 0; i < limit; ++i)
        s += fmt_double(spec.order(i)) + "," + fmt_double(spec.intensity[i]) + "\n";
    return s;
}

inline std::string even_odd_flag_name(EvenOddFlag f) {
    return f == EvenOddFlag::pure_even ? "pure_even" : "ok";
}

inline std::string scan_csv(const std::vector<ScanPointOutcome>& rows,
                            const std::string& config_hash) {
    std::string s = csv_header_comment(config_hash);
    s += "ET_au,gamma,eta,I_even,I_odd_avg,flag\n";
    for (const auto& r : rows) {
        if (r.ok) {
            s += fmt_double(r.et) + "," + fmt_double(r.gamma) + "," + fmt_double(r.point.eta) +
                 "," + fmt_double(r.point.i_even) + "," + fmt_double(r.point.i_odd_avg) + "," +
                 even_odd_flag_name(r.point.flag) + "\n";
        } else {
            s += fmt_double(r.et) + "," + fmt_double(r.gamma) + ",nan,nan,nan,error\n";
        }
    }
    return s;
}

inline std::string waveform_csv(const ReconstructedWaveform& rec, const std::string& config_hash) {
    std::string s = csv_header_comment(config_hash);
    s += rec.has_benchmark
             ? "delay_fs,eta,ET_abs_au,ET_abs_kVcm,flag,ET_benchmark_kVcm\n"
             : "delay_fs,eta,ET_abs_au,ET_abs_kVcm,flag\n";
    for (std::size_t i = 0; i < rec.size(); ++i) {
        s += fmt_double(rec.delays_fs[i]) + "," + fmt_double(rec.eta[i]) + "," +
             fmt_double(rec.et_abs_au[i]) + "," + fmt_double(rec.et_abs_kvcm[i]) + "," +
             sample_flag_name(rec.flags[i]);
        if (rec.has_benchmark) s += "," + fmt_double(rec.benchmark_kvcm[i]);
        s += "\n";
    }
    return s;
}

struct CollapseCurvePoint {
    double gamma = 0.0;
    double eta = 0.0;
    std::string config_id;
};

inline std::string collapse_csv(const std::vector<CollapseCurvePoint>& rows, double max_deviation,
                                const std::string& config_hash) {
    std::string s = csv_header_comment(config_hash);
    s += "# max_pairwise_rel_deviation=" + fmt_double(max_deviation) + "\n";
    s += "gamma,eta,config_id\n";
    for (const auto& r : rows)
        s += fmt_double(r.gamma) + "," + fmt_double(r.eta) + "," + r.config_id + "\n";
    return s;
}

inline nlohmann::json trajectory_json(const Trajectory& tr) {
    const PhaseAngles a = PhaseAngles::of(tr);
    nlohmann::json j;
    j["phi_i"] = tr.phi_i;
    j["phi_r"] = tr.phi_r;
    j["theta"] = a.theta;
    j["delta_theta"] = a.delta_theta;
    j["C"] = coefficient_c(a).c;
    j["energy_up"] = tr.energy_up;
    return j;
}

// ---- wavefunction checkpoint: versioned header + complex array ----

inline void write_checkpoint(const std::string& path, const Wavefunction& wf,
                             const GridSpec& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open checkpoint file '" + path + "'");
    const char magic[4] = {'O', 'E', 'W', 'F'};
    const std::uint32_t version = 1;
    const std::uint64_t n = wf.psi.size();
    out.write(magic, 4);
    out.write(reinterpret_cast<const char*>(&version), sizeof version);
    out.write(reinterpret_cast<const char*>(&grid.x_min), sizeof grid.x_min);
    out.write(reinterpret_cast<const char*>(&grid.x_max), sizeof grid.x_max);
    out.write(reinterpret_cast<const char*>(&grid.dt), sizeof grid.dt);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(&wf.time), sizeof wf.time);
    out.write(reinterpret_cast<const char*>(wf.psi.data()),
              static_cast<std::streamsize>(n * sizeof(std::complex<double>)));
    if (!out) throw std::runtime_error("checkpoint write failed for '" + path + "'");
}

struct Checkpoint {
    Wavefunction wf;
    GridSpec grid;
};

inline Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open checkpoint file '" + path + "'");
    char magic[4];
    std::uint32_t version = 0;
    std::uint64_t n = 0;
    Checkpoint cp;
    in.read(magic, 4);
    if (!in || magic[0] != 'O' || magic[1] != 'E' || magic[2] != 'W' || magic[3] != 'F')
        throw std::runtime_error("'" + path + "' is not a wavefunction checkpoint");
    in.read(reinterpret_cast<char*>(&version), sizeof version);
    if (version != 1) throw std::runtime_error("unsupported checkpoint version");
    in.read(reinterpret_cast<char*>(&cp.grid.x_min), sizeof cp.grid.x_min);
    in.read(reinterpret_cast<char*>(&cp.grid.x_max), sizeof cp.grid.x_max);
    in.read(reinterpret_cast<char*>(&cp.grid.dt), sizeof cp.grid.dt);
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    in.read(reinterpret_cast<char*>(&cp.wf.time), sizeof cp.wf.time);
    cp.grid.num_points = static_cast<int>(n);
    cp.wf.psi.resize(n);
    in.read(reinterpret_cast<char*>(cp.wf.psi.data()),
            static_cast<std::streamsize>(n * sizeof(std::complex<double>)));
    if (!in) throw std::runtime_error("truncated checkpoint '" + path + "'");
    return cp;
}

}  // namespace oehhg
