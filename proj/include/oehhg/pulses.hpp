#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "oehhg/units.hpp"

// Time-dependent electric fields of the driving pulses, all in atomic units.
// The probe is a trapezoidal-envelope carrier centered at t = 0; the THz pump
// is a Gaussian-envelope single-color waveform.

namespace oehhg {

/// Mid-IR driving pulse: E0 * env(t) * cos(w0 t + cep) with a trapezoidal
/// envelope that rises/falls linearly over ramp_cycles optical cycles.
struct ProbePulse {
    double e0 = 0.0;        // peak amplitude, a.u.
    double omega0 = 0.0;    // carrier angular frequency, a.u.
    int total_cycles = 10;
    int ramp_cycles = 1;
    double cep = 0.0;       // radians

    void validate() const {
        if (e0 <= 0.0) throw std::domain_error("ProbePulse: e0 must be positive");
        if (omega0 <= 0.0) throw std::domain_error("ProbePulse: omega0 must be positive");
        if (ramp_cycles < 0) throw std::domain_error("ProbePulse: ramp_cycles must be >= 0");
        if (total_cycles < 2 * ramp_cycles + 1)
            throw std::domain_error("ProbePulse: need total_cycles >= 2*ramp_cycles + 1");
    }

    double period() const { return 2.0 * M_PI / omega0; }
    double duration() const { return total_cycles * period(); }

    // pulse support is [begin, end], centered at zero
    double begin() const { return -0.5 * duration(); }
    double end() const { return 0.5 * duration(); }
    double flat_begin() const { return begin() + ramp_cycles * period(); }
    double flat_end() const { return end() - ramp_cycles * period(); }

    /// Trapezoidal envelope in [0,1]; continuous, piecewise linear,
    /// symmetric about t = 0.
    double envelope(double t) const {
        const double half = 0.5 * duration();
        const double u = std::abs(t);
        if (u >= half) return 0.0;
        const double ramp = ramp_cycles * period();
        if (ramp <= 0.0) return 1.0;
        const double from_edge = half - u;
        return from_edge < ramp ? from_edge / ramp : 1.0;
    }

    double field(double t) const {
        const double env = envelope(t);
        if (env == 0.0) return 0.0;
        return e0 * env * std::cos(omega0 * t + cep);
    }
};

/// Gaussian-envelope THz waveform ET0 * exp(-wT^2 (t-t0)^2 / 36 pi^2) * sin(wT (t-t0)).
struct ThzPulse {
    double et0 = 0.0;         // peak amplitude, a.u.
    double omega = 0.0;       // angular frequency, a.u.
    double time_offset = 0.0; // a.u.

    void validate() const {
        if (omega <= 0.0) throw std::domain_error("ThzPulse: omega must be positive");
    }

    double period() const { return 2.0 * M_PI / omega; }

    double field(double t) const {
        const double s = t - time_offset;
        const double arg = omega * s;
        return et0 * std::exp(-arg * arg / (36.0 * M_PI * M_PI)) * std::sin(arg);
    }

    /// Largest |field| over the waveform (numerically, on a fine phase grid).
    double peak_abs_field() const {
        double peak = 0.0;
        const double dt = period() / 400.0;
        // envelope decays within a few periods
        for (double t = time_offset - 6.0 * period(); t <= time_offset + 6.0 * period(); t += dt)
            peak = std::max(peak, std::abs(field(t)));
        return peak;
    }
};

/// Probe plus at most one THz contribution: a full waveform or a quasi-static
/// value. Either way the THz part is gated by the probe envelope so the total
/// field turns on smoothly and equals probe + THz on the flat top, where the
/// harmonic emission that is analyzed takes place.
struct CompositeField {
    ProbePulse probe;
    std::optional<ThzPulse> thz;
    std::optional<double> static_thz;

    void validate() const {
        probe.validate();
        if (thz && static_thz)
            throw std::domain_error("CompositeField: at most one THz contribution may be active");
        if (thz) thz->validate();
    }

    double thz_part(double t) const {
        if (thz) return thz->field(t);
        if (static_thz) return *static_thz;
        return 0.0;
    }

    double field(double t) const {
        double e = probe.field(t);
        if (thz || static_thz) e += probe.envelope(t) * thz_part(t);
        return e;
    }

    static CompositeField probe_only(const ProbePulse& p) { return {p, std::nullopt, std::nullopt}; }
    static CompositeField with_static(const ProbePulse& p, double et) { return {p, std::nullopt, et}; }
    static CompositeField with_thz(const ProbePulse& p, const ThzPulse& pump) { return {p, pump, std::nullopt}; }
};

}  // namespace oehhg
