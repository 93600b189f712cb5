#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "oehhg/oehhg.hpp"

// Command-line front end. Subcommands: groundstate, spectrum, scan, collapse,
// orbits, reconstruct. Exit codes: 0 success, 1 runtime/physics failure,
// 2 configuration error.

namespace fs = std::filesystem;
using namespace oehhg;

namespace {

std::string default_out_dir() {
    if (const char* env = std::getenv("OEHHG_OUT_DIR")) return env;
    return ".";
}

std::string ensure_dir(const std::string& dir) {
    fs::create_directories(dir);
    return dir;
}

std::string config_hash_of(const json& j) { return hash_hex(fnv1a64(canonical_dump(j))); }

struct CommonArgs {
    std::string config_path;
    std::string out_dir = default_out_dir();
    unsigned parallel = 0;
    bool svg = false;
    bool quasi_static = false;
    bool synthetic = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool needs_config = true) {
    auto* opt = cmd->add_option("--config", a.config_path, "JSON configuration file");
    if (needs_config) opt->required();
    cmd->add_option("--out", a.out_dir, "output directory (default: $OEHHG_OUT_DIR or .)");
    cmd->add_option("--parallel", a.parallel, "worker threads (0 = all cores)");
    cmd->add_flag("--svg", a.svg, "also emit SVG plots");
    cmd->add_flag("--quasi-static", a.quasi_static, "force quasi-static THz mode");
    cmd->add_flag("--synthetic", a.synthetic, "bypass the TDSE with an analytic signal");
}

int cmd_groundstate(const CommonArgs& args) {
    const json raw = load_json_file(args.config_path);
    const RunConfig cfg = parse_run_config(raw);
    const SimConfig sim = build_sim(cfg);
    const std::string hash = config_hash_of(raw);

    const GroundState gs = ground_state(sim.grid, sim.atom);

    ensure_dir(args.out_dir);
    const std::string ckpt = args.out_dir + "/groundstate.wf";
    write_checkpoint(ckpt, gs.wf, sim.grid);

    json rep;
    rep["energy_au"] = gs.energy;
    rep["soft_core_a"] = sim.atom.soft_core_a;
    rep["atom"] = sim.atom.label;
    rep["iterations"] = gs.iterations;
    rep["grid"] = {{"x_min", sim.grid.x_min},
                   {"x_max", sim.grid.x_max},
                   {"num_points", sim.grid.num_points},
                   {"dt", sim.grid.dt}};
    rep["checkpoint"] = ckpt;
    rep["config_hash"] = hash;
    write_text_file(args.out_dir + "/groundstate.json", rep.dump(2) + "\n");
    std::cout << "ground state: E = " << fmt_double(gs.energy) << " a.u. (target -Ip = "
              << fmt_double(-sim.atom.ip) << "), checkpoint " << ckpt << "\n";
    return 0;
}

int cmd_spectrum(const CommonArgs& args) {
    const json raw = load_json_file(args.config_path);
    const RunConfig cfg = parse_run_config(raw);
    const SimConfig sim = build_sim(cfg);
    const std::string hash = config_hash_of(raw);

    DipoleSignal sig;
    if (args.synthetic) {
        sig = synthetic_cosine_signal(sim.probe.omega0, 5.0, sim.probe.total_cycles,
                                      sim.grid.dt);
    } else {
        CompositeField field = CompositeField::probe_only(sim.probe);
        if (cfg.thz) {
            const ThzPulse thz = build_thz(*cfg.thz);
            if (cfg.thz->mode == "full-wave" && !args.quasi_static)
                field = CompositeField::with_thz(sim.probe, thz);
            else
                field = CompositeField::with_static(sim.probe, thz.field(0.0));
        }
        sig = simulate_dipole(sim, field);
    }

    const WindowKind window = args.synthetic ? WindowKind::hann_full : sim.window;
    const HhgSpectrum spec = compute_spectrum(sig, window);

    ensure_dir(args.out_dir);
    const double cut = args.synthetic
                           ? 0.0
                           : 1.8 * cutoff_order(sim.probe.e0, sim.probe.omega0, sim.atom.ip);
    write_text_file(args.out_dir + "/spectrum.csv", spectrum_csv(spec, hash, cut));
    write_text_file(args.out_dir + "/signal.csv", signal_csv(sig, hash));

    if (args.svg) {
        SvgSeries ser;
        const std::size_t limit =
            cut > 0.0 ? std::min(spec.intensity.size(),
                                 static_cast<std::size_t>(cut / spec.order_step))
                      : spec.intensity.size();
        for (std::size_t i = 1; i < limit; ++i) {
            ser.x.push_back(spec.order(i));
            ser.y.push_back(spec.intensity[i]);
        }
        SvgOptions opt;
        opt.log_y = true;
        opt.title = "HHG spectrum";
        opt.x_label = "harmonic order";
        opt.y_label = "intensity (arb. u., log10)";
        write_text_file(args.out_dir + "/spectrum.svg", svg_line_plot({ser}, opt));
    }
    std::cout << "spectrum written to " << args.out_dir << "/spectrum.csv\n";
    return 0;
}

std::vector<ScanTask> scan_tasks_from_config(const ScanConfig& sc) {
    std::vector<ScanTask> tasks;
    const SimConfig base = build_sim(sc.base);
    for (const json& v : sc.values) {
        ScanTask t;
        t.sim = base;
        if (sc.monitored_order > 0) t.sim.monitored_order = sc.monitored_order;
        if (sc.variable == "ET") {
            t.et = kv_per_cm_to_field(v.get<double>());
            t.sweep_value = t.et;
        } else if (sc.variable == "atom") {
            AtomConfig ac = sc.base.atom;
            ac.label = v.get<std::string>();
            t.sim.atom = build_atom(ac);
            t.sweep_value = t.sim.atom.ip;
            t.et = sc.base.thz ? kv_per_cm_to_field(sc.base.thz->amplitude_kv_cm) : 0.0;
        } else {
            RunConfig rc = sc.base;
            if (sc.variable == "intensity")
                rc.probe.intensity_w_cm2 = v.get<double>();
            else if (sc.variable == "wavelength")
                rc.probe.wavelength_nm = v.get<double>();
            else if (sc.variable == "cycles")
                rc.probe.cycles = v.get<int>();
            t.sim.probe = build_probe(rc.probe);
            t.sim.grid = build_grid(rc.grid, t.sim.probe);
            t.sweep_value = v.get<double>();
            t.et = sc.base.thz ? kv_per_cm_to_field(sc.base.thz->amplitude_kv_cm) : 0.0;
        }
        tasks.push_back(std::move(t));
    }
    // deterministic output ordering regardless of scheduling
    std::stable_sort(tasks.begin(), tasks.end(),
                     [](const ScanTask& a, const ScanTask& b) { return a.sweep_value < b.sweep_value; });
    return tasks;
}

int cmd_scan(const CommonArgs& args) {
    const json raw = load_json_file(args.config_path);
    const ScanConfig sc = parse_scan_config(raw);
    const std::string hash = config_hash_of(raw);

    const auto tasks = scan_tasks_from_config(sc);
    const unsigned par = args.parallel ? args.parallel : sc.base.parallel;
    const auto rows = run_scan(tasks, par);

    int failures = 0;
    for (const auto& r : rows)
        if (!r.ok) {
            ++failures;
            std::cerr << "scan point " << fmt_double(r.sweep_value) << " failed: " << r.error
                      << "\n";
        }

    ensure_dir(args.out_dir);
    write_text_file(args.out_dir + "/scan.csv", scan_csv(rows, hash));

    if (args.svg) {
        SvgSeries ser;
        for (const auto& r : rows)
            if (r.ok && std::isfinite(r.point.eta)) {
                ser.x.push_back(r.gamma);
                ser.y.push_back(r.point.eta);
            }
        SvgOptions opt;
        opt.log_y = true;
        opt.title = "even-to-odd ratio";
        opt.x_label = "gamma";
        opt.y_label = "eta (log10)";
        write_text_file(args.out_dir + "/scan.svg", svg_line_plot({ser}, opt));
    }
    std::cout << "scan written to " << args.out_dir << "/scan.csv (" << rows.size()
              << " points, " << failures << " failed)\n";
    return failures == static_cast<int>(rows.size()) && !rows.empty() ? 1 : 0;
}

int cmd_orbits(const std::string& out_file, bool cutoff_only, double energy_up) {
    json j;
    const Trajectory cut = cutoff_trajectory();
    j["cutoff"] = trajectory_json(cut);
    const auto rp = reversal_points(cutoff_coefficient_c, 3);
    j["reversal_gamma"] = rp.unity_crossings;
    j["pure_odd_gamma"] = rp.pure_odd;
    j["pure_even_gamma"] = rp.pure_even;
    j["coefficient_c_default"] = cutoff_coefficient_c;
    if (!cutoff_only) {
        auto [short_tr, long_tr] = solve_return(energy_up);
        j["short"] = trajectory_json(short_tr);
        j["long"] = trajectory_json(long_tr);
    }
    const std::string text = j.dump(2) + "\n";
    if (out_file.empty() || out_file == "-")
        std::cout << text;
    else {
        write_text_file(out_file, text);
        std::cout << "orbit data written to " << out_file << "\n";
    }
    return 0;
}

std::vector<double> delay_grid_from(const ThzPulse& thz, const DelayConfig& dc) {
    std::vector<double> delays(dc.count);
    const double span = dc.span_thz_periods * thz.period();
    for (int i = 0; i < dc.count; ++i)
        delays[i] = thz.time_offset - span + 2.0 * span * i / (dc.count - 1);
    return delays;
}

int cmd_reconstruct(const CommonArgs& args) {
    const json raw = load_json_file(args.config_path);
    const RunConfig cfg = parse_run_config(raw);
    if (!cfg.thz) throw config_error("reconstruct requires a 'thz' block");
    const std::string hash = config_hash_of(raw);

    const SimConfig sim = build_sim(cfg);
    const ThzPulse thz = build_thz(*cfg.thz);
    const DelayConfig dc = cfg.delays.value_or(DelayConfig{});
    const auto delays = delay_grid_from(thz, dc);

    DelayScan scan;
    if (args.synthetic) {
        scan = analytic_scan(sim.probe, thz, delays);
    } else {
        const ScanMode mode = (cfg.thz->mode == "full-wave" && !args.quasi_static)
                                  ? ScanMode::full_wave
                                  : ScanMode::quasi_static;
        const unsigned par = args.parallel ? args.parallel : cfg.parallel;
        scan = simulate_scan(sim, thz, delays, mode, par);
    }

    ReconstructedWaveform rec = reconstruct(scan);
    compare_with_benchmark(rec, thz);  // simulation mode: the input waveform is known

    ensure_dir(args.out_dir);
    write_text_file(args.out_dir + "/waveform.csv", waveform_csv(rec, hash));

    json manifest;
    manifest["config_hash"] = hash;
    manifest["mode"] = args.synthetic ? "analytic" : scan_mode_name(scan.mode);
    manifest["probe"] = {{"e0_au", sim.probe.e0},
                         {"omega0_au", sim.probe.omega0},
                         {"cycles", sim.probe.total_cycles},
                         {"ramp_cycles", sim.probe.ramp_cycles}};
    manifest["thz"] = {{"et0_au", thz.et0},
                       {"omega_au", thz.omega},
                       {"offset_au", thz.time_offset}};
    manifest["grid"] = {{"x_max", sim.grid.x_max},
                        {"num_points", sim.grid.num_points},
                        {"dt", sim.grid.dt}};
    manifest["delays"] = {{"count", dc.count}, {"span_thz_periods", dc.span_thz_periods}};
    manifest["rms_error_au"] = rec.rms_error_au;
    manifest["rms_frac_of_peak"] = rec.rms_frac_of_peak;
    manifest["valid_samples"] = rec.valid_count;
    json status = json::array();
    for (const auto& p : scan.points)
        status.push_back({{"delay_au", p.delay}, {"ok", p.ok}, {"error", p.error}});
    manifest["per_delay"] = status;
    write_text_file(args.out_dir + "/scan_manifest.json", manifest.dump(2) + "\n");

    if (args.svg) {
        SvgSeries rec_ser, truth_ser;
        rec_ser.label = "|E_T| extracted";
        rec_ser.color = "#b2341f";
        truth_ser.label = "|E_T| benchmark";
        for (std::size_t i = 0; i < rec.size(); ++i) {
            if (rec.flags[i] == SampleFlag::ok) {
                rec_ser.x.push_back(rec.delays_fs[i]);
                rec_ser.y.push_back(rec.et_abs_kvcm[i]);
            }
            truth_ser.x.push_back(rec.delays_fs[i]);
            truth_ser.y.push_back(rec.benchmark_kvcm[i]);
        }
        SvgOptions opt;
        opt.title = "THz waveform sampling";
        opt.x_label = "delay (fs)";
        opt.y_label = "|E_T| (kV/cm)";
        write_text_file(args.out_dir + "/waveform.svg", svg_line_plot({truth_ser, rec_ser}, opt));
    }

    std::cout << "waveform written to " << args.out_dir << "/waveform.csv; valid samples "
              << rec.valid_count << "/" << rec.size();
    if (rec.valid_count > 0)
        std::cout << ", RMS " << fmt_double(100.0 * rec.rms_frac_of_peak) << "% of peak";
    std::cout << "\n";
    return 0;
}

int cmd_collapse(const std::vector<std::string>& config_paths, const std::string& out_dir,
                 unsigned parallel) {
    if (config_paths.size() < 2) throw config_error("collapse needs at least 2 scan configs");

    struct Curve {
        std::string id;
        std::vector<double> gamma, eta;
    };
    std::vector<Curve> curves;
    std::string joined_hash;
    for (const auto& path : config_paths) {
        const json raw = load_json_file(path);
        const ScanConfig sc = parse_scan_config(raw);
        joined_hash += canonical_dump(raw);
        const auto tasks = scan_tasks_from_config(sc);
        const auto rows = run_scan(tasks, parallel ? parallel : sc.base.parallel);
        Curve c;
        c.id = fs::path(path).stem().string();
        for (const auto& r : rows)
            if (r.ok && std::isfinite(r.point.eta)) {
                c.gamma.push_back(r.gamma);
                c.eta.push_back(r.point.eta);
            }
        if (c.gamma.size() < 2)
            throw std::runtime_error("scan '" + c.id + "' produced too few valid points");
        curves.push_back(std::move(c));
    }
    const std::string hash = hash_hex(fnv1a64(joined_hash));

    // common gamma grid inside the stable window
    const double glo = 0.15, ghi = 0.55;
    for (const auto& c : curves)
        if (c.gamma.front() > glo + 1e-9 || c.gamma.back() < ghi - 1e-9)
            throw std::runtime_error("scan '" + c.id + "' does not cover gamma in [0.15, 0.55]");

    auto interp = [](const Curve& c, double g) {
        auto it = std::lower_bound(c.gamma.begin(), c.gamma.end(), g);
        if (it == c.gamma.begin()) return c.eta.front();
        if (it == c.gamma.end()) return c.eta.back();
        const std::size_t hi = it - c.gamma.begin();
        const std::size_t lo = hi - 1;
        const double f = (g - c.gamma[lo]) / (c.gamma[hi] - c.gamma[lo]);
        // interpolate log(eta): the law is exponential-ish in gamma here
        return std::exp(std::log(c.eta[lo]) * (1.0 - f) + std::log(c.eta[hi]) * f);
    };

    const int npts = 21;
    std::vector<CollapseCurvePoint> rows;
    double max_dev = 0.0;
    for (int i = 0; i < npts; ++i) {
        const double g = glo + (ghi - glo) * i / (npts - 1);
        std::vector<double> etas;
        for (const auto& c : curves) {
            const double eta = interp(c, g);
            etas.push_back(eta);
            rows.push_back({g, eta, c.id});
        }
        for (std::size_t a = 0; a < etas.size(); ++a)
            for (std::size_t b = a + 1; b < etas.size(); ++b) {
                const double hi = std::max(etas[a], etas[b]);
                const double lo = std::min(etas[a], etas[b]);
                if (lo > 0.0) max_dev = std::max(max_dev, hi / lo - 1.0);
            }
    }

    ensure_dir(out_dir);
    write_text_file(out_dir + "/collapse.csv", collapse_csv(rows, max_dev, hash));
    std::cout << "collapse metric: max pairwise relative deviation " << fmt_double(max_dev)
              << " over gamma in [0.15, 0.55]\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd-even HHG simulator and THz waveform sampler"};
    app.require_subcommand(1);

    CommonArgs gs_args, spec_args, scan_args, rec_args;
    std::vector<std::string> collapse_configs;
    std::string collapse_out = default_out_dir();
    unsigned collapse_parallel = 0;
    std::string orbits_out;
    bool orbits_cutoff = false;
    double orbits_energy = 2.0;

    auto* c_gs = app.add_subcommand("groundstate", "prepare and report the atomic ground state");
    add_common(c_gs, gs_args);

    auto* c_spec = app.add_subcommand("spectrum", "run one propagation and emit the HHG spectrum");
    add_common(c_spec, spec_args);

    auto* c_scan = app.add_subcommand("scan", "sweep a parameter and tabulate eta");
    add_common(c_scan, scan_args);

    auto* c_col = app.add_subcommand("collapse", "overlay eta(gamma) curves from several scans");
    c_col->add_option("--config", collapse_configs, "scan config files (2 or more)")
        ->required()
        ->expected(-2);
    c_col->add_option("--out", collapse_out, "output directory");
    c_col->add_option("--parallel", collapse_parallel, "worker threads");

    auto* c_orb = app.add_subcommand("orbits", "classical trajectory and coefficient report");
    c_orb->add_option("--out", orbits_out, "output JSON file (default: stdout)");
    c_orb->add_flag("--cutoff", orbits_cutoff, "report the cutoff trajectory only");
    c_orb->add_option("--energy", orbits_energy, "return energy in Up for branch solutions");

    auto* c_rec = app.add_subcommand("reconstruct", "pump-probe delay scan + waveform recovery");
    add_common(c_rec, rec_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_gs->parsed()) return cmd_groundstate(gs_args);
        if (c_spec->parsed()) return cmd_spectrum(spec_args);
        if (c_scan->parsed()) return cmd_scan(scan_args);
        if (c_col->parsed()) return cmd_collapse(collapse_configs, collapse_out, collapse_parallel);
        if (c_orb->parsed()) return cmd_orbits(orbits_out, orbits_cutoff, orbits_energy);
        if (c_rec->parsed()) return cmd_reconstruct(rec_args);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
