#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "oehhg/atom.hpp"
#include "oehhg/fft.hpp"
#include "oehhg/grid.hpp"
#include "oehhg/wavefunction.hpp"

// Ground-state preparation by imaginary-time split-operator propagation,
// plus the bisection tuner that picks the soft-core parameter for a target
// ionization potential.

namespace oehhg {

class convergence_error : public std::runtime_error {
  public:
    convergence_error(const std::string& what, double residual)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

struct GroundState {
    Wavefunction wf;
    double energy = 0.0;
    int iterations = 0;
};

/// Lowest eigenstate of p^2/2 + V on the grid. Imaginary-time propagation
/// with a coarse-to-fine step schedule; the final fine steps let the Trotter
/// fixed point track the true discrete eigenstate closely enough that the
/// variational energy is accurate to well below 1e-6.
inline GroundState ground_state(const GridSpec& grid, const AtomModel& atom) {
    grid.validate();
    atom.validate();

    const int n = grid.num_points;
    const Fft1D fft(n);
    const auto k = grid.momenta();
    const auto x = grid.positions();

    Wavefunction wf;
    wf.psi.resize(n);
    for (int i = 0; i < n; ++i) wf.psi[i] = std::exp(-x[i] * x[i] / 8.0);
    normalize(wf, grid);

    std::vector<double> vpot(n);
    for (int i = 0; i < n; ++i) vpot[i] = atom.potential(x[i]);

    struct Phase {
        double dtau;
        double tol;
        int max_iter;
        bool required;  // polish passes may hit their cap without failing
    };
    // coarse steps reach the eigenstate; the final small-step pass shrinks
    // the O(dtau^2) Trotter bias of the fixed point below 1e-8 in energy
    const Phase schedule[] = {
        {0.2, 1e-8, 20000, true}, {0.05, 1e-10, 20000, true}, {0.01, 1e-12, 8000, false}};

    std::vector<double> kin_half(n), pot_full(n);
    double energy = total_energy(wf, grid, atom, fft);
    int total_iter = 0;

    for (const Phase& ph : schedule) {
        for (int i = 0; i < n; ++i) kin_half[i] = std::exp(-0.25 * k[i] * k[i] * ph.dtau);
        for (int i = 0; i < n; ++i) pot_full[i] = std::exp(-vpot[i] * ph.dtau);

        double delta = 1.0;
        int it = 0;
        for (; it < ph.max_iter; ++it) {
            fft.forward(wf.psi);
            for (int i = 0; i < n; ++i) wf.psi[i] *= kin_half[i];
            fft.inverse(wf.psi);
            for (int i = 0; i < n; ++i) wf.psi[i] *= pot_full[i];
            fft.forward(wf.psi);
            for (int i = 0; i < n; ++i) wf.psi[i] *= kin_half[i];
            fft.inverse(wf.psi);
            normalize(wf, grid);

            if (it % 8 == 7) {
                const double e = total_energy(wf, grid, atom, fft);
                delta = std::abs(e - energy);
                energy = e;
                if (delta < ph.tol) break;
            }
        }
        total_iter += it;
        if (ph.required && delta >= ph.tol)
            throw convergence_error("ground_state: imaginary-time propagation did not converge", delta);
    }

    // fix the global phase: ITP keeps the state real up to FFT rounding
    double peak = 0.0;
    int ipeak = 0;
    for (int i = 0; i < n; ++i)
        if (std::norm(wf.psi[i]) > peak) {
            peak = std::norm(wf.psi[i]);
            ipeak = i;
        }
    const std::complex<double> ph = wf.psi[ipeak] / std::abs(wf.psi[ipeak]);
    for (auto& c : wf.psi) c /= ph;

    wf.time = 0.0;
    return {std::move(wf), energy, total_iter};
}

/// Grid used for soft-core tuning and other atom-only work: compact box,
/// fine spacing.
inline GridSpec tuning_grid() {
    GridSpec g;
    g.x_min = -60.0;
    g.x_max = 60.0;
    g.num_points = 1024;
    g.dt = 0.05;
    return g;
}

/// Soft-core parameter a such that the grid ground-state energy equals -Ip
/// to 1e-4, by monotone bisection (energy increases with a).
inline double tune_soft_core(double ip, const GridSpec& grid = tuning_grid()) {
    if (!(ip > 0.1 && ip < 2.0))
        throw std::domain_error("tune_soft_core: Ip must lie in (0.1, 2.0) a.u.");

    auto energy_of = [&](double a) {
        return ground_state(grid, AtomModel{a, ip, "tune"}).energy;
    };

    double lo = 0.05, hi = 12.0;
    if (energy_of(lo) > -ip || energy_of(hi) < -ip)
        throw std::domain_error("tune_soft_core: target Ip outside the bracketed range");

    double mid = 0.0;
    for (int it = 0; it < 60; ++it) {
        mid = 0.5 * (lo + hi);
        const double e = energy_of(mid);
        if (std::abs(e + ip) < 1e-5) return mid;
        if (e < -ip)
            lo = mid;  // too deep: increase a
        else
            hi = mid;
        if (hi - lo < 1e-10) break;
    }
    const double e = energy_of(mid);
    if (std::abs(e + ip) > 1e-4)
        throw convergence_error("tune_soft_core: bisection stalled", std::abs(e + ip));
    return mid;
}

}  // namespace oehhg
