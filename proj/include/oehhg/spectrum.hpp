#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "oehhg/fft.hpp"
#include "oehhg/propagate.hpp"

// Harmonic-resolved HHG spectra from dipole-acceleration signals, harmonic
// band intensities, the even-to-odd ratio eta, and the cutoff law.

namespace oehhg {

enum class WindowKind { hann_flat_top, hann_full, rect };

inline std::string window_name(WindowKind w) {
    switch (w) {
        case WindowKind::hann_flat_top: return "hann-flat-top";
        case WindowKind::hann_full: return "hann-full";
        default: return "rect";
    }
}

/// Window weights for a recorded signal. The default analysis window is a
/// Hann taper confined to the probe's flat top, where the emission is
/// unchirped; the ramps are excluded.
inline std::vector<double> window_weights(const DipoleSignal& sig, WindowKind kind) {
    std::vector<double> w(sig.size(), 1.0);
    if (kind == WindowKind::rect) return w;

    double a, b;
    if (kind == WindowKind::hann_flat_top) {
        a = sig.meta.probe.flat_begin();
        b = sig.meta.probe.flat_end();
    } else {
        a = sig.time.front();
        b = sig.time.back();
    }
    if (!(b > a)) throw std::domain_error("window_weights: empty window interval");

    for (std::size_t i = 0; i < sig.size(); ++i) {
        const double t = sig.time[i];
        if (t < a || t > b) {
            w[i] = 0.0;
        } else {
            const double u = (t - a) / (b - a);
            const double s = std::sin(M_PI * u);
            w[i] = s * s;
        }
    }
    return w;
}

/// Harmonic spectrum on a uniform order axis (order = omega / w0).
/// Intensities are |A|^2/(2 pi) with negative frequencies folded in, so that
/// sum(intensity) * d_omega equals the windowed signal power exactly.
struct HhgSpectrum {
    double w0 = 0.0;
    double order_step = 0.0;
    std::vector<std::complex<double>> amplitude;  // bins 0 .. M/2
    std::vector<double> intensity;
    WindowKind window = WindowKind::hann_flat_top;

    double max_order() const { return order_step * (intensity.size() - 1); }
    double order(std::size_t i) const { return order_step * i; }
};

inline HhgSpectrum compute_spectrum(const DipoleSignal& sig,
                                    WindowKind window = WindowKind::hann_flat_top,
                                    int pad_factor = 4) {
    if (sig.size() == 0) throw std::domain_error("compute_spectrum: empty signal");
    const double w0 = sig.meta.probe.omega0;
    if (w0 <= 0.0) throw std::domain_error("compute_spectrum: signal lacks a carrier frequency");
    const double span = sig.time.back() - sig.time.front();
    if (span < 2.0 * (2.0 * M_PI / w0))
        throw std::domain_error("compute_spectrum: need at least 2 optical cycles of data");
    if (pad_factor < 1) throw std::domain_error("compute_spectrum: pad factor must be >= 1");

    const auto w = window_weights(sig, window);
    const std::size_t m = static_cast<std::size_t>(next_power_of_two(static_cast<int>(sig.size()))) *
                          static_cast<std::size_t>(pad_factor);

    std::vector<std::complex<double>> buf(m, 0.0);
    for (std::size_t i = 0; i < sig.size(); ++i) buf[i] = w[i] * sig.accel[i];

    Fft1D fft(m);
    fft.forward(buf);

    HhgSpectrum spec;
    spec.w0 = w0;
    spec.window = window;
    const double dw = 2.0 * M_PI / (m * sig.dt);
    spec.order_step = dw / w0;

    const std::size_t half = m / 2;
    spec.amplitude.resize(half + 1);
    spec.intensity.resize(half + 1);
    for (std::size_t i = 0; i <= half; ++i) {
        const std::complex<double> a = buf[i] * sig.dt;
        spec.amplitude[i] = a;
        const double fold = (i == 0 || i == half) ? 1.0 : 2.0;
        spec.intensity[i] = fold * std::norm(a) / (2.0 * M_PI);
    }
    return spec;
}

/// Integral of the piecewise-linear intensity between two orders.
inline double integrate_band(const HhgSpectrum& spec, double lo, double hi) {
    if (!(lo >= 0.0 && hi <= spec.max_order() && lo < hi))
        throw std::domain_error("integrate_band: order band outside the spectral range");
    const double step = spec.order_step;
    const double a = lo / step, b = hi / step;

    auto value_at = [&](double idx) {
        const std::size_t i = static_cast<std::size_t>(idx);
        const double frac = idx - i;
        if (i + 1 >= spec.intensity.size()) return spec.intensity.back();
        return spec.intensity[i] * (1.0 - frac) + spec.intensity[i + 1] * frac;
    };

    const std::size_t first = static_cast<std::size_t>(std::ceil(a));
    const std::size_t last = static_cast<std::size_t>(std::floor(b));

    double integral = 0.0;
    if (first > last) {
        // both endpoints inside one sample interval
        integral = 0.5 * (value_at(a) + value_at(b)) * (b - a);
    } else {
        integral += 0.5 * (value_at(a) + spec.intensity[first]) * (first - a);
        for (std::size_t i = first; i < last; ++i)
            integral += 0.5 * (spec.intensity[i] + spec.intensity[i + 1]);
        integral += 0.5 * (spec.intensity[last] + value_at(b)) * (b - last);
    }
    return integral * step;
}

struct HarmonicIntensity {
    int order = 0;
    double intensity = 0.0;
    double half_width = 0.25;  // harmonic-order units
};

/// Intensity integrated over [N - 1/4, N + 1/4].
inline HarmonicIntensity harmonic_intensity(const HhgSpectrum& spec, int order) {
    const double half_width = 0.25;
    if (order < 1 || order + half_width > spec.max_order())
        throw std::domain_error("harmonic_intensity: order outside the spectral range");
    return {order, integrate_band(spec, order - half_width, order + half_width), half_width};
}

enum class EvenOddFlag { ok, pure_even };

struct EvenOddPoint {
    int even_order = 0;
    double eta = 0.0;
    double i_even = 0.0;
    double i_odd_avg = 0.0;
    EvenOddFlag flag = EvenOddFlag::ok;
};

/// eta = I(N) / mean(I(N-1), I(N+1)) for even N. A vanishing odd average
/// (pure-even spectrum) yields an infinity sentinel, not an exception.
inline EvenOddPoint even_to_odd_ratio(const HhgSpectrum& spec, int n_even) {
    if (n_even % 2 != 0) throw std::domain_error("even_to_odd_ratio: order must be even");
    if (n_even - 1 < 1 || n_even + 1.25 > spec.max_order())
        throw std::domain_error("even_to_odd_ratio: adjacent odd orders outside the range");

    EvenOddPoint p;
    p.even_order = n_even;
    p.i_even = harmonic_intensity(spec, n_even).intensity;
    p.i_odd_avg = 0.5 * (harmonic_intensity(spec, n_even - 1).intensity +
                         harmonic_intensity(spec, n_even + 1).intensity);
    if (p.i_odd_avg == 0.0) {
        p.eta = std::numeric_limits<double>::infinity();
        p.flag = EvenOddFlag::pure_even;
    } else {
        p.eta = p.i_even / p.i_odd_avg;
    }
    return p;
}

/// Cutoff law (Ip + 3.17 Up) / w0 in harmonic orders.
inline double cutoff_order(double e0, double w0, double ip) {
    if (e0 <= 0.0 || w0 <= 0.0 || ip <= 0.0)
        throw std::domain_error("cutoff_order: inputs must be positive");
    return (ip + 3.17 * ponderomotive_energy(e0, w0)) / w0;
}

/// Largest even order not above the cutoff: the default eta monitoring point.
inline int monitored_even_order(double e0, double w0, double ip) {
    const int f = static_cast<int>(std::floor(cutoff_order(e0, w0, ip)));
    return f % 2 == 0 ? f : f - 1;
}

/// Data-driven plateau edge: the last odd harmonic whose median-filtered
/// log-intensity stays within `drop_decades` of the plateau level. The
/// plateau level is taken as an upper quantile of the log-intensities over
/// the search window so the noise floor beyond the cutoff does not bias it.
inline double locate_plateau_cutoff(const HhgSpectrum& spec, int search_min, int search_max,
                                    double drop_decades = 2.0) {
    search_max = std::min(search_max, static_cast<int>(spec.max_order() - 2.0));
    if (search_min < 3 || search_max <= search_min + 8)
        throw std::domain_error("locate_plateau_cutoff: search window too small");

    std::vector<int> orders;
    std::vector<double> logi;
    for (int n = search_min | 1; n <= search_max; n += 2) {
        orders.push_back(n);
        logi.push_back(std::log10(std::max(harmonic_intensity(spec, n).intensity, 1e-300)));
    }

    // 5-point running median
    std::vector<double> med(logi.size());
    for (std::size_t i = 0; i < logi.size(); ++i) {
        const std::size_t lo = i >= 2 ? i - 2 : 0;
        const std::size_t hi = std::min(i + 2, logi.size() - 1);
        std::vector<double> v(logi.begin() + lo, logi.begin() + hi + 1);
        std::sort(v.begin(), v.end());
        med[i] = v[v.size() / 2];
    }

    std::vector<double> sorted = med;
    std::sort(sorted.begin(), sorted.end());
    const double plateau = sorted[static_cast<std::size_t>(0.75 * (sorted.size() - 1))];

    int last = orders.front();
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (med[i] >= plateau - drop_decades) last = orders[i];
    return last;
}

/// Synthetic single-order cosine signal, mainly for tests and the TDSE
/// bypass mode of the CLI.
inline DipoleSignal synthetic_cosine_signal(double w0, double order, int cycles, double dt) {
    DipoleSignal sig;
    sig.dt = dt;
    sig.meta.probe.e0 = 1.0;
    sig.meta.probe.omega0 = w0;
    sig.meta.probe.total_cycles = cycles;
    sig.meta.probe.ramp_cycles = 0;
    sig.meta.field_mode = "synthetic";
    const double duration = cycles * 2.0 * M_PI / w0;
    const long steps = std::lround(duration / dt);
    for (long i = 0; i <= steps; ++i) {
        const double t = -0.5 * duration + i * dt;
        sig.time.push_back(t);
        sig.accel.push_back(std::cos(order * w0 * t));
        sig.x_expect.push_back(0.0);
    }
    return sig;
}

}  // namespace oehhg
