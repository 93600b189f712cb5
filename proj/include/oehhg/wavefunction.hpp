#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "oehhg/atom.hpp"
#include "oehhg/fft.hpp"
#include "oehhg/grid.hpp"

namespace oehhg {

/// Complex grid state. Norm is <= 1 once absorption has acted.
struct Wavefunction {
    std::vector<std::complex<double>> psi;
    double time = 0.0;

    std::size_t size() const { return psi.size(); }
};

inline double norm_squared(const Wavefunction& wf, const GridSpec& grid) {
    double s = 0.0;
    for (const auto& c : wf.psi) s += std::norm(c);
    return s * grid.dx();
}

inline void normalize(Wavefunction& wf, const GridSpec& grid) {
    const double n2 = norm_squared(wf, grid);
    if (n2 <= 0.0) throw std::runtime_error("normalize: vanishing wavefunction");
    const double s = 1.0 / std::sqrt(n2);
    for (auto& c : wf.psi) c *= s;
}

/// <x> in a.u.
inline double position_expectation(const Wavefunction& wf, const GridSpec& grid) {
    double s = 0.0;
    for (int i = 0; i < grid.num_points; ++i) s += std::norm(wf.psi[i]) * grid.position(i);
    return s * grid.dx();
}

inline double potential_energy(const Wavefunction& wf, const GridSpec& grid, const AtomModel& atom) {
    double s = 0.0;
    for (int i = 0; i < grid.num_points; ++i) s += std::norm(wf.psi[i]) * atom.potential(grid.position(i));
    return s * grid.dx();
}

/// <p^2>/2 via the spectral representation.
inline double kinetic_energy(const Wavefunction& wf, const GridSpec& grid, const Fft1D& fft) {
    std::vector<std::complex<double>> phi = wf.psi;
    fft.forward(phi);
    const auto k = grid.momenta();
    double s = 0.0;
    for (int i = 0; i < grid.num_points; ++i) s += std::norm(phi[i]) * 0.5 * k[i] * k[i];
    // unnormalized DFT: sum |phi_k|^2 = n sum |psi_i|^2
    return s * grid.dx() / grid.num_points;
}

inline double total_energy(const Wavefunction& wf, const GridSpec& grid, const AtomModel& atom,
                           const Fft1D& fft) {
    return kinetic_energy(wf, grid, fft) + potential_energy(wf, grid, atom);
}

}  // namespace oehhg
