#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oehhg/pulses.hpp"

namespace oehhg {

/// Uniform position grid plus the time step of the propagator.
struct GridSpec {
    double x_min = -400.0;
    double x_max = 400.0;
    int num_points = 4096;
    double dt = 0.05;

    void validate() const {
        if (!(x_min < 0.0 && 0.0 < x_max))
            throw std::domain_error("GridSpec: box must contain the origin");
        if (num_points < 1024) throw std::domain_error("GridSpec: need at least 1024 points");
        if (dt <= 0.0) throw std::domain_error("GridSpec: dt must be positive");
    }

    double dx() const { return (x_max - x_min) / num_points; }
    double position(int i) const { return x_min + i * dx(); }

    std::vector<double> positions() const {
        std::vector<double> x(num_points);
        for (int i = 0; i < num_points; ++i) x[i] = position(i);
        return x;
    }

    /// FFT momentum axis, standard wraparound ordering.
    std::vector<double> momenta() const {
        std::vector<double> k(num_points);
        const double dk = 2.0 * M_PI / (num_points * dx());
        for (int i = 0; i < num_points; ++i)
            k[i] = (i <= num_points / 2 ? i : i - num_points) * dk;
        return k;
    }
};

inline int next_power_of_two(int n) {
    int p = 1;
    while (p < n) p *= 2;
    return p;
}

/// Box sized to retain the long trajectories of the given probe:
/// half-width max(2*quiver_radius + 100, 400), dx and dt as requested but
/// with the point count rounded up to a power of two.
inline GridSpec default_grid(const ProbePulse& probe, double dx = 0.2, double dt = 0.05) {
    const double quiver = probe.e0 / (probe.omega0 * probe.omega0);
    const double half = std::max(2.0 * quiver + 100.0, 400.0);
    GridSpec g;
    g.x_min = -half;
    g.x_max = half;
    g.num_points = next_power_of_two(static_cast<int>(std::ceil(2.0 * half / dx)));
    g.dt = dt;
    g.validate();
    return g;
}

}  // namespace oehhg
