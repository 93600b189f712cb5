#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "oehhg/atom.hpp"
#include "oehhg/grid.hpp"

// Independent ground-state oracles used only by tests. Two discretizations:
//  - tridiagonal second-order finite differences (Dirichlet box), lowest
//    eigenvalue by Sturm-sequence bisection;
//  - the same spectral Hamiltonian the propagator uses (circulant kinetic
//    matrix + diagonal potential), diagonalized densely with Eigen.

namespace oracles {

// number of eigenvalues of the symmetric tridiagonal (d, e) below lambda
inline int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double lambda) {
    int count = 0;
    double q = d[0] - lambda;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        const double denom = (q == 0.0) ? 1e-300 : q;
        q = d[i] - lambda - e[i - 1] * e[i - 1] / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

/// Lowest eigenvalue of -1/2 d^2/dx^2 + V on the grid, 3-point finite
/// differences with Dirichlet walls.
inline double fd_ground_energy(const oehhg::GridSpec& grid, const oehhg::AtomModel& atom) {
    const int n = grid.num_points;
    const double dx = grid.dx();
    std::vector<double> d(n), e(n - 1, -0.5 / (dx * dx));
    for (int i = 0; i < n; ++i) d[i] = 1.0 / (dx * dx) + atom.potential(grid.position(i));

    double lo = -2.0 / atom.soft_core_a, hi = 2.0 / (dx * dx);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) >= 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo < 1e-13 * std::max(1.0, std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

/// Lowest eigenvalue of the spectral (FFT-kinetic) Hamiltonian, by dense
/// symmetric diagonalization. Same discrete operator as the split-step
/// propagator, independent algorithm.
inline double spectral_ground_energy(const oehhg::GridSpec& grid, const oehhg::AtomModel& atom) {
    const int n = grid.num_points;
    const auto k = grid.momenta();

    // kinetic matrix is circulant: T_ij = c[(i-j) mod n]
    std::vector<double> c(n, 0.0);
    for (int m = 0; m < n; ++m) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += 0.5 * k[j] * k[j] * std::cos(2.0 * M_PI * j * m / n);
        c[m] = s / n;
    }

    Eigen::MatrixXd h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = c[(i - j + n) % n];
    for (int i = 0; i < n; ++i) h(i, i) += atom.potential(grid.position(i));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h, Eigen::EigenvaluesOnly);
    return eig.eigenvalues()(0);
}

}  // namespace oracles
