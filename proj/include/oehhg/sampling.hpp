#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "oehhg/orbits.hpp"
#include "oehhg/pipeline.hpp"
#include "oehhg/units.hpp"

// Pump-probe THz waveform sampling: scan the probe delay across the THz
// pulse, read eta at each delay, and invert the universal law
// eta = tan^2(C gamma) to recover |E_T| sample by sample.

namespace oehhg {

struct InvertedField {
    double et_abs = 0.0;
    bool saturated = false;  // eta at or beyond the tan^2 pole
};

/// |E_T| = (w0^3 / (E0 C)) atan(sqrt(eta)), the principal branch of the
/// inverted law. An infinite eta returns the branch-edge field, flagged.
inline InvertedField invert_ratio(double eta, double e0, double w0, double c) {
    if (eta < 0.0) throw std::domain_error("invert_ratio: eta must be >= 0");
    if (e0 <= 0.0 || w0 <= 0.0 || c == 0.0)
        throw std::domain_error("invert_ratio: invalid probe or coefficient");
    const double scale = w0 * w0 * w0 / (e0 * std::abs(c));
    if (std::isinf(eta)) return {scale * 0.5 * M_PI, true};
    return {scale * std::atan(std::sqrt(eta)), false};
}

enum class ScanMode { full_wave, quasi_static };

inline std::string scan_mode_name(ScanMode m) {
    return m == ScanMode::full_wave ? "full-wave" : "quasi-static";
}

struct DelayPoint {
    double delay = 0.0;  // a.u.
    EvenOddPoint point;
    bool ok = false;
    std::string error;
};

struct DelayScan {
    std::vector<DelayPoint> points;  // ordered by increasing delay
    ProbePulse probe;
    ThzPulse thz;
    ScanMode mode = ScanMode::quasi_static;
};

/// Simulate the pump-probe scan: at each delay tau the probe (centered at
/// t = 0) sees the THz pulse advanced by tau, so the sample estimates
/// E_T(tau). Per-delay failures are recorded, not fatal.
inline DelayScan simulate_scan(const SimConfig& cfg, const ThzPulse& thz,
                               const std::vector<double>& delays, ScanMode mode,
                               unsigned parallelism = 0) {
    thz.validate();
    for (std::size_t i = 1; i < delays.size(); ++i)
        if (!(delays[i] > delays[i - 1]))
            throw std::domain_error("simulate_scan: delays must be strictly increasing");

    DelayScan scan;
    scan.probe = cfg.probe;
    scan.thz = thz;
    scan.mode = mode;
    scan.points.resize(delays.size());

    const int monitored = cfg.resolve_monitored_order();

    parallel_for(delays.size(), parallelism, [&](std::size_t i) {
        DelayPoint& p = scan.points[i];
        p.delay = delays[i];
        try {
            CompositeField field;
            if (mode == ScanMode::full_wave) {
                ThzPulse shifted = thz;
                shifted.time_offset = thz.time_offset - delays[i];
                field = CompositeField::with_thz(cfg.probe, shifted);
            } else {
                field = CompositeField::with_static(cfg.probe, thz.field(delays[i]));
            }
            const DipoleSignal sig = simulate_dipole(cfg, field);
            const HhgSpectrum spec = compute_spectrum(sig, cfg.window);
            p.point = even_to_odd_ratio(spec, monitored);
            p.ok = true;
        } catch (const std::exception& e) {
            p.ok = false;
            p.error = e.what();
        }
    });
    return scan;
}

/// Forward model without any TDSE: eta(tau) = tan^2(C gamma(tau)). Used by
/// the analytic CLI mode and the inverse-identity tests.
inline DelayScan analytic_scan(const ProbePulse& probe, const ThzPulse& thz,
                               const std::vector<double>& delays,
                               double c = cutoff_coefficient_c) {
    DelayScan scan;
    scan.probe = probe;
    scan.thz = thz;
    scan.mode = ScanMode::quasi_static;
    scan.points.resize(delays.size());
    for (std::size_t i = 0; i < delays.size(); ++i) {
        DelayPoint& p = scan.points[i];
        p.delay = delays[i];
        const double gamma = asymmetry_parameter(probe.e0, probe.omega0, thz.field(delays[i]));
        p.point.eta = analytic_ratio(gamma, c);
        p.point.i_even = p.point.eta;
        p.point.i_odd_avg = 1.0;
        p.point.flag = std::isinf(p.point.eta) ? EvenOddFlag::pure_even : EvenOddFlag::ok;
        p.ok = true;
    }
    return scan;
}

enum class SampleFlag { ok, low_signal, saturated, range, error };

inline std::string sample_flag_name(SampleFlag f) {
    switch (f) {
        case SampleFlag::ok: return "ok";
        case SampleFlag::low_signal: return "low_signal";
        case SampleFlag::saturated: return "saturated";
        case SampleFlag::range: return "range";
        default: return "error";
    }
}

struct GuardCheck {
    std::string name;
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    bool pass = false;
};

struct GuardReport {
    std::vector<GuardCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Working range in which the universal law is quantitative: probe intensity
/// 1-4 x 10^14 W/cm^2, wavelength >= 1200 nm, THz field 20-2000 kV/cm, and
/// resulting gamma inside [0.1, 0.6].
inline GuardReport working_range_guard(const ProbePulse& probe, double et_peak) {
    GuardReport rep;
    const double intensity = field_to_intensity(probe.e0);
    const double wavelength = frequency_to_wavelength(probe.omega0);
    const double et_kvcm = field_to_kv_per_cm(std::abs(et_peak));
    const double gamma = asymmetry_parameter(probe.e0, probe.omega0, std::abs(et_peak));

    auto add = [&](const std::string& name, double v, double lo, double hi) {
        rep.checks.push_back({name, v, lo, hi, v >= lo && v <= hi});
    };
    add("intensity_w_cm2", intensity, 1.0e14, 4.0e14);
    add("wavelength_nm", wavelength, 1200.0, std::numeric_limits<double>::infinity());
    add("thz_field_kv_cm", et_kvcm, 20.0, 2000.0);
    add("gamma", gamma, 0.1, 0.6);
    return rep;
}

struct ReconstructedWaveform {
    std::vector<double> delays_au;
    std::vector<double> delays_fs;
    std::vector<double> eta;
    std::vector<double> et_abs_au;
    std::vector<double> et_abs_kvcm;
    std::vector<SampleFlag> flags;

    // benchmark comparison (simulation mode only)
    bool has_benchmark = false;
    std::vector<double> benchmark_kvcm;
    double rms_error_au = std::numeric_limits<double>::quiet_NaN();
    double rms_frac_of_peak = std::numeric_limits<double>::quiet_NaN();
    int valid_count = 0;

    std::size_t size() const { return delays_au.size(); }
};

/// Invert each delay's eta into |E_T|. The sign is not recoverable from the
/// even-to-odd ratio, so the output is a magnitude with a pi ambiguity in
/// the THz carrier-envelope phase. Per-sample gamma guards use the inverted
/// value itself; a probe outside the working range flags every sample.
inline ReconstructedWaveform reconstruct(const DelayScan& scan,
                                         double c = cutoff_coefficient_c) {
    if (scan.points.empty()) throw std::domain_error("reconstruct: empty scan");

    const double e0 = scan.probe.e0;
    const double w0 = scan.probe.omega0;

    // probe-only part of the guard (field/gamma checks are per-sample)
    const GuardReport probe_guard = working_range_guard(scan.probe, kv_per_cm_to_field(100.0));
    bool probe_ok = true;
    for (const auto& chk : probe_guard.checks)
        if ((chk.name == "intensity_w_cm2" || chk.name == "wavelength_nm") && !chk.pass)
            probe_ok = false;

    ReconstructedWaveform out;
    for (const DelayPoint& p : scan.points) {
        out.delays_au.push_back(p.delay);
        out.delays_fs.push_back(au_to_fs(p.delay));
        if (!p.ok) {
            out.eta.push_back(std::numeric_limits<double>::quiet_NaN());
            out.et_abs_au.push_back(std::numeric_limits<double>::quiet_NaN());
            out.et_abs_kvcm.push_back(std::numeric_limits<double>::quiet_NaN());
            out.flags.push_back(SampleFlag::error);
            continue;
        }
        const InvertedField inv = invert_ratio(p.point.eta, e0, w0, c);
        const double gamma_est = asymmetry_parameter(e0, w0, inv.et_abs);

        SampleFlag flag = SampleFlag::ok;
        if (inv.saturated)
            flag = SampleFlag::saturated;
        else if (gamma_est < 0.1)
            flag = SampleFlag::low_signal;
        else if (gamma_est > 0.6 || !probe_ok)
            flag = SampleFlag::range;

        out.eta.push_back(p.point.eta);
        out.et_abs_au.push_back(inv.et_abs);
        out.et_abs_kvcm.push_back(field_to_kv_per_cm(inv.et_abs));
        out.flags.push_back(flag);
    }
    return out;
}

/// Attach the known THz waveform as benchmark and compute the RMS error of
/// |E_T| over the unflagged samples.
inline void compare_with_benchmark(ReconstructedWaveform& rec, const ThzPulse& truth) {
    rec.has_benchmark = true;
    rec.benchmark_kvcm.resize(rec.size());
    double sum2 = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < rec.size(); ++i) {
        const double bench = std::abs(truth.field(rec.delays_au[i]));
        rec.benchmark_kvcm[i] = field_to_kv_per_cm(bench);
        if (rec.flags[i] == SampleFlag::ok) {
            const double d = rec.et_abs_au[i] - bench;
            sum2 += d * d;
            ++n;
        }
    }
    rec.valid_count = n;
    if (n > 0) {
        rec.rms_error_au = std::sqrt(sum2 / n);
        rec.rms_frac_of_peak = rec.rms_error_au / truth.peak_abs_field();
    }
}

}  // namespace oehhg
