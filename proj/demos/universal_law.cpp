// Prints the classical cutoff trajectory, the coefficient C, and a short
// table of the universal law eta = tan^2(C gamma).

#include <cstdio>

#include "oehhg/orbits.hpp"

int main() {
    using namespace oehhg;

    const Trajectory cut = cutoff_trajectory();
    const PhaseAngles angles = PhaseAngles::of(cut);
    const CutoffCoefficient c = coefficient_c(angles);

    std::printf("cutoff trajectory: phi_i = %.4f rad, phi_r = %.4f rad, K = %.4f Up\n",
                cut.phi_i, cut.phi_r, cut.energy_up);
    std::printf("theta = %.4f, delta_theta = %.4f, C = %.4f (|C| vs 2.558: %+.2f%%)\n\n",
                angles.theta, angles.delta_theta, c.c,
                100.0 * (c.magnitude() - 2.558) / 2.558);

    std::printf("%8s %12s %12s\n", "gamma", "eta", "regime");
    for (double g = 0.05; g <= 1.0001; g += 0.05) {
        const RegimeClass r = classify_regime(g);
        std::printf("%8.2f %12.5f %12s%s\n", g, analytic_ratio(g, cutoff_coefficient_c),
                    r.name().c_str(), r.low_signal ? " (noisy)" : "");
    }

    const auto rp = reversal_points(cutoff_coefficient_c, 3);
    std::printf("\neta = 1 crossings at gamma =");
    for (double g : rp.unity_crossings) std::printf(" %.4f", g);
    std::printf("\n");
    return 0;
}
