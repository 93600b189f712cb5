#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "oehhg/atom.hpp"
#include "oehhg/fft.hpp"
#include "oehhg/grid.hpp"
#include "oehhg/pulses.hpp"
#include "oehhg/wavefunction.hpp"

// Real-time TDSE propagation in the length gauge,
//   H = p^2/2 + V(x) + x E(t),
// with Strang-split spectral steps (potential half-step, spectral kinetic
// step, potential half-step; the field is evaluated at the step midpoint).
// The dipole acceleration a(t) = -<dV/dx> - E(t) is recorded every step.

namespace oehhg {

class instability_error : public std::runtime_error {
  public:
    instability_error(const std::string& what, long step)
        : std::runtime_error(what + " at step " + std::to_string(step)), step_(step) {}
    long step() const { return step_; }

  private:
    long step_;
};

/// Cos^exponent mask over the outer width_fraction of each box side.
struct AbsorberSpec {
    double width_fraction = 0.1;
    double mask_exponent = 0.125;

    void validate() const {
        if (!(width_fraction > 0.0 && width_fraction < 0.5))
            throw std::domain_error("AbsorberSpec: width fraction must lie in (0, 0.5)");
        if (mask_exponent <= 0.0)
            throw std::domain_error("AbsorberSpec: mask exponent must be positive");
    }

    std::vector<double> mask(const GridSpec& grid) const {
        validate();
        std::vector<double> m(grid.num_points, 1.0);
        const double half = 0.5 * (grid.x_max - grid.x_min);
        const double width = width_fraction * half;
        const double lo = grid.x_min + width;
        const double hi = grid.x_max - width;
        for (int i = 0; i < grid.num_points; ++i) {
            const double x = grid.position(i);
            double s = 0.0;
            if (x < lo)
                s = (lo - x) / width;
            else if (x > hi)
                s = (x - hi) / width;
            if (s > 0.0) m[i] = std::pow(std::cos(0.5 * M_PI * std::min(s, 1.0)), mask_exponent);
        }
        return m;
    }
};

struct SignalMeta {
    ProbePulse probe;
    AtomModel atom;
    GridSpec grid;
    std::string field_mode = "probe-only";  // "static-thz", "full-wave", "synthetic"
    double thz_static_value = 0.0;
};

/// Dipole-acceleration record of one propagation, uniformly sampled at dt.
struct DipoleSignal {
    std::vector<double> time;
    std::vector<double> accel;
    std::vector<double> x_expect;
    double dt = 0.0;
    SignalMeta meta;

    std::size_t size() const { return time.size(); }
};

struct PropagateOptions {
    bool absorber_enabled = true;
    int norm_check_interval = 64;
};

struct PropagationResult {
    DipoleSignal signal;
    Wavefunction state;
    double final_norm_squared = 0.0;
};

inline PropagationResult propagate(const Wavefunction& initial, const CompositeField& field,
                                   const AtomModel& atom, const GridSpec& grid,
                                   const AbsorberSpec& absorber = {},
                                   const PropagateOptions& opts = {}) {
    grid.validate();
    field.validate();
    atom.validate();
    if (static_cast<int>(initial.psi.size()) != grid.num_points)
        throw std::invalid_argument("propagate: state size does not match grid");

    const int n = grid.num_points;
    const double dt = grid.dt;
    const double dx = grid.dx();
    const double t0 = field.probe.begin();
    const long steps = std::lround(field.probe.duration() / dt);

    const Fft1D fft(n);
    const auto k = grid.momenta();
    const auto x = grid.positions();

    std::vector<std::complex<double>> kin_full(n), pot_half(n);
    for (int i = 0; i < n; ++i)
        kin_full[i] = std::exp(std::complex<double>(0.0, -0.5 * k[i] * k[i] * dt));
    for (int i = 0; i < n; ++i)
        pot_half[i] = std::exp(std::complex<double>(0.0, -0.5 * atom.potential(x[i]) * dt));

    std::vector<double> vgrad(n);
    for (int i = 0; i < n; ++i) vgrad[i] = atom.potential_gradient(x[i]);

    const std::vector<double> mask = opts.absorber_enabled ? absorber.mask(grid)
                                                           : std::vector<double>(n, 1.0);

    Wavefunction wf = initial;
    wf.time = t0;

    DipoleSignal sig;
    sig.dt = dt;
    sig.meta.probe = field.probe;
    sig.meta.atom = atom;
    sig.meta.grid = grid;
    if (field.thz)
        sig.meta.field_mode = "full-wave";
    else if (field.static_thz) {
        sig.meta.field_mode = "static-thz";
        sig.meta.thz_static_value = *field.static_thz;
    }
    sig.time.reserve(steps + 1);
    sig.accel.reserve(steps + 1);
    sig.x_expect.reserve(steps + 1);

    auto record = [&](double t) {
        double grad = 0.0, xe = 0.0;
        for (int i = 0; i < n; ++i) {
            const double w = std::norm(wf.psi[i]);
            grad += w * vgrad[i];
            xe += w * x[i];
        }
        sig.time.push_back(t);
        sig.accel.push_back(-grad * dx - field.field(t));
        sig.x_expect.push_back(xe * dx);
    };

    record(t0);

    // field phase factor exp(-i x E dt/2) evaluated by geometric recurrence
    // along the grid; one complex exp per step instead of n.
    for (long s = 0; s < steps; ++s) {
        const double t = t0 + s * dt;
        const double e_mid = field.field(t + 0.5 * dt);

        const std::complex<double> ratio =
            std::exp(std::complex<double>(0.0, -0.5 * dx * e_mid * dt));
        const std::complex<double> start =
            std::exp(std::complex<double>(0.0, -0.5 * grid.x_min * e_mid * dt));

        std::complex<double> f = start;
        for (int i = 0; i < n; ++i) {
            wf.psi[i] *= pot_half[i] * f;
            f *= ratio;
        }
        fft.forward(wf.psi);
        for (int i = 0; i < n; ++i) wf.psi[i] *= kin_full[i];
        fft.inverse(wf.psi);
        f = start;
        if (opts.absorber_enabled) {
            for (int i = 0; i < n; ++i) {
                wf.psi[i] *= pot_half[i] * f * mask[i];
                f *= ratio;
            }
        } else {
            for (int i = 0; i < n; ++i) {
                wf.psi[i] *= pot_half[i] * f;
                f *= ratio;
            }
        }

        wf.time = t0 + (s + 1) * dt;
        record(wf.time);

        if ((s + 1) % opts.norm_check_interval == 0 || s + 1 == steps) {
            const double n2 = norm_squared(wf, grid);
            if (!std::isfinite(n2))
                throw instability_error("propagate: non-finite norm", s + 1);
            if (n2 > 1.0 + 1e-6)
                throw instability_error("propagate: norm gain exceeds 1e-6", s + 1);
        }
    }

    const double n2 = norm_squared(wf, grid);
    return {std::move(sig), std::move(wf), n2};
}

}  // namespace oehhg
