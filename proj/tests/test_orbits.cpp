#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oehhg/orbits.hpp"

using namespace oehhg;

namespace {

// Independent oracle for the classical map: fixed-step scan for the first
// sign change of the excursion, refined by linear interpolation; no reuse of
// the library's bracketing logic.
double oracle_first_return(double phi_i) {
    const double step = 1e-4;
    double prev = phi_i + 0.01;
    double f_prev = return_condition(phi_i, prev);
    for (double phi = prev + step; phi < phi_i + 2.0 * M_PI + 1.0; phi += step) {
        const double f = return_condition(phi_i, phi);
        if (f_prev < 0.0 && f >= 0.0) return prev + step * (-f_prev) / (f - f_prev);
        prev = phi;
        f_prev = f;
    }
    return std::nan("");
}

struct OracleCutoff {
    double phi_i, phi_r, energy_up;
};

OracleCutoff oracle_cutoff() {
    double best_phi = 0.0, best_e = 0.0;
    for (double phi = 0.05; phi < 1.4; phi += 5e-4) {
        const double pr = oracle_first_return(phi);
        const double e = return_energy_up(phi, pr);
        if (e > best_e) {
            best_e = e;
            best_phi = phi;
        }
    }
    return {best_phi, oracle_first_return(best_phi), best_e};
}

}  // namespace

TEST_CASE("cutoff trajectory matches the brute-force oracle") {
    const Trajectory tr = cutoff_trajectory();
    const OracleCutoff oc = oracle_cutoff();

    CHECK(tr.energy_up == Catch::Approx(3.17).margin(0.01));
    CHECK(tr.energy_up == Catch::Approx(oc.energy_up).margin(1e-6));
    CHECK(tr.phi_i == Catch::Approx(oc.phi_i).margin(6e-4));
    CHECK(tr.phi_r == Catch::Approx(oc.phi_r).margin(2e-3));

    // standard three-step values
    CHECK(tr.phi_i == Catch::Approx(0.31).margin(0.02));
    CHECK(tr.phi_r == Catch::Approx(4.40).margin(0.05));

    CHECK(std::abs(return_condition(tr.phi_i, tr.phi_r)) < 1e-10);

    const PhaseAngles a = PhaseAngles::of(tr);
    CHECK(a.theta == Catch::Approx(2.36).margin(0.03));
    CHECK(a.delta_theta == Catch::Approx(2.05).margin(0.03));
}

TEST_CASE("coefficient C at the cutoff reproduces the universal constant") {
    const CutoffCoefficient c = coefficient_c(cutoff_trajectory());
    CHECK(c.magnitude() == Catch::Approx(2.558).epsilon(0.02));
}

TEST_CASE("coefficient C limiting cases") {
    CHECK(coefficient_c(PhaseAngles{0.0, 1.0}).c == 0.0);
    // delta_theta -> 0: C = O(delta^3)
    CHECK(std::abs(coefficient_c(PhaseAngles{1.0, 1e-4}).c) < 1e-11);
}

TEST_CASE("solve_return finds both branches") {
    auto [short_tr, long_tr] = solve_return(2.0);
    CHECK(short_tr.energy_up == Catch::Approx(2.0).margin(1e-8));
    CHECK(long_tr.energy_up == Catch::Approx(2.0).margin(1e-8));
    CHECK(std::abs(return_condition(short_tr.phi_i, short_tr.phi_r)) < 1e-10);
    CHECK(std::abs(return_condition(long_tr.phi_i, long_tr.phi_r)) < 1e-10);

    const Trajectory cut = cutoff_trajectory();
    // excursion ordering: short returns before the cutoff trajectory, long after
    CHECK(short_tr.phi_r < cut.phi_r);
    CHECK(cut.phi_r < long_tr.phi_r);
    // ionization ordering is reversed
    CHECK(long_tr.phi_i < cut.phi_i);
    CHECK(cut.phi_i < short_tr.phi_i);

    // distinct C values below the cutoff
    CHECK(coefficient_c(short_tr).c != Catch::Approx(coefficient_c(long_tr).c).margin(1e-3));
}

TEST_CASE("solve_return limiting behavior at low energy") {
    auto [short_tr, long_tr] = solve_return(1e-3);
    // long branch: born near the crest, grazing a full cycle
    CHECK(long_tr.phi_i < 0.02);
    CHECK(long_tr.phi_r == Catch::Approx(2.0 * M_PI).margin(0.15));
    CHECK(short_tr.phi_i > long_tr.phi_i);
}

TEST_CASE("solve_return rejects out-of-range energies") {
    CHECK_THROWS_AS(solve_return(0.0), std::domain_error);
    CHECK_THROWS_AS(solve_return(3.5), std::domain_error);
    CHECK_THROWS_AS(solve_return(-1.0), std::domain_error);
}

TEST_CASE("return-condition residuals stay tiny across the energy range") {
    for (double e = 0.05; e < 3.15; e += 0.155) {
        auto [s, l] = solve_return(e);
        CHECK(std::abs(return_condition(s.phi_i, s.phi_r)) < 1e-10);
        CHECK(std::abs(return_condition(l.phi_i, l.phi_r)) < 1e-10);
    }
}

TEST_CASE("branches merge at the cutoff") {
    const Trajectory cut = cutoff_trajectory();
    double prev_gap = 10.0;
    for (double e : {2.8, 3.0, 3.1, 3.15, 3.17}) {
        auto [s, l] = solve_return(std::min(e, cut.energy_up - 1e-6));
        const double gap = std::abs(s.phi_i - l.phi_i);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 0.05);
}

TEST_CASE("analytic ratio basics") {
    CHECK(analytic_ratio(0.0, 2.558) == 0.0);
    CHECK(analytic_ratio(M_PI / (4.0 * 2.558), 2.558) == Catch::Approx(1.0).epsilon(1e-12));
    // tan(0.5116)^2, frozen from direct evaluation
    CHECK(analytic_ratio(0.2, 2.558) == Catch::Approx(0.315245).margin(1e-5));
}

TEST_CASE("analytic ratio symmetry, periodicity, monotonicity") {
    const double c = 2.558;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> gs(0.0, 3.0);
    for (int i = 0; i < 300; ++i) {
        const double g = gs(rng);
        const double eta = analytic_ratio(g, c);
        CHECK(analytic_ratio(-g, c) == Catch::Approx(eta).margin(1e-10));
        if (std::isfinite(eta) && eta < 1e12) {
            CHECK(analytic_ratio(g + M_PI / c, c) == Catch::Approx(eta).epsilon(1e-5).margin(1e-9));
        }
    }
    // strictly increasing on (0, pi/2C)
    double prev = -1.0;
    for (double g = 0.0; g < 0.995 * M_PI / (2.0 * c); g += 0.01) {
        const double eta = analytic_ratio(g, c);
        CHECK(eta > prev);
        prev = eta;
    }
}

TEST_CASE("reversal points") {
    const auto rp = reversal_points(2.558, 3);
    REQUIRE(rp.unity_crossings.size() == 4);
    CHECK(rp.unity_crossings[0] == Catch::Approx(0.3070).margin(1e-4));
    CHECK(rp.unity_crossings[1] == Catch::Approx(0.9211).margin(1e-4));
    CHECK(rp.unity_crossings[2] == Catch::Approx(1.535).margin(1e-3));
    CHECK(rp.unity_crossings[3] == Catch::Approx(2.149).margin(1e-3));
    // arithmetic progression with spacing pi/2C
    for (size_t k = 1; k < rp.unity_crossings.size(); ++k)
        CHECK(rp.unity_crossings[k] - rp.unity_crossings[k - 1] ==
              Catch::Approx(M_PI / (2.0 * 2.558)).epsilon(1e-12));
    // eta extrema interleave the crossings
    CHECK(rp.pure_odd[0] == 0.0);
    CHECK(rp.pure_even[0] == Catch::Approx(M_PI / 2.558 * 0.5).epsilon(1e-12));
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(0.3).regime == Regime::perturbative);
    CHECK_FALSE(classify_regime(0.3).low_signal);
    CHECK(classify_regime(2.0).regime == Regime::intermediate);
    CHECK(classify_regime(5.0).regime == Regime::disordered);
    CHECK(classify_regime(0.05).regime == Regime::perturbative);
    CHECK(classify_regime(0.05).low_signal);
    CHECK_THROWS_AS(classify_regime(-0.1), std::domain_error);
}

TEST_CASE("analytic burst-interference spectrum") {
    const double c = 2.558;
    // symmetric system: even orders vanish, odd are maximal
    CHECK(analytic_even_odd_spectrum(500, 0.0, c) == Catch::Approx(0.0).margin(1e-12));
    CHECK(analytic_even_odd_spectrum(501, 0.0, c) == Catch::Approx(4.0).epsilon(1e-12));
    // C gamma = pi/2: pure-even spectrum
    const double g_half = M_PI / (2.0 * c);
    CHECK(analytic_even_odd_spectrum(500, g_half, c) == Catch::Approx(4.0).epsilon(1e-9));
    CHECK(analytic_even_odd_spectrum(501, g_half, c) == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("burst interference reproduces tan^2(C gamma) exactly") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> gs(0.01, 0.55);
    for (int i = 0; i < 200; ++i) {
        const double g = gs(rng);
        const double even = analytic_even_odd_spectrum(500, g, 2.558);
        const double odd = 0.5 * (analytic_even_odd_spectrum(499, g, 2.558) +
                                  analytic_even_odd_spectrum(501, g, 2.558));
        CHECK(even / odd == Catch::Approx(analytic_ratio(g, 2.558)).epsilon(1e-10));
    }
}

TEST_CASE("burst pair invariants") {
    const BurstPair b = burst_pair(500, 0.3, 2.558);
    CHECK(std::norm(b.d2) / std::norm(b.d1) == Catch::Approx(1.0));
    CHECK(b.s_t == Catch::Approx(2.558 * 0.3).epsilon(1e-12));
    CHECK(b.delta_phi == Catch::Approx(500 * M_PI - b.delta_action).epsilon(1e-12));
}
