#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// Classical three-step trajectories in E(t) = E0 cos(w0 t) and the analytic
// even-to-odd law eta = tan^2(C*gamma).
//
// An electron born at rest at x = 0 at phase phi_i has
//   v(phi)/(E0/w0) = -(sin phi - sin phi_i)
//   x(phi)*(w0^2/E0) = (cos phi - cos phi_i) + (phi - phi_i) sin phi_i
// and returns to the core when x = 0 again. Return kinetic energy in units of
// Up is 2 (sin phi_r - sin phi_i)^2, maximal (3.17 Up) for the cutoff
// trajectory where the short and long branches merge.

namespace oehhg {

/// Paper constant for harmonics at the cutoff, used by default when
/// inverting the even-to-odd law.
inline constexpr double cutoff_coefficient_c = 2.558;

/// Classical maximum return energy in units of Up.
inline constexpr double max_return_energy_up = 3.17;

enum class Branch { short_branch, long_branch, cutoff };

struct Trajectory {
    double phi_i = 0.0;       // ionization phase w0*t_i, radians
    double phi_r = 0.0;       // recombination phase w0*t_r, radians
    double energy_up = 0.0;   // return kinetic energy, units of Up
    Branch branch = Branch::cutoff;
};

struct PhaseAngles {
    double theta = 0.0;        // w0 (t_r + t_i) / 2
    double delta_theta = 0.0;  // w0 (t_r - t_i) / 2

    static PhaseAngles of(const Trajectory& tr) {
        return {0.5 * (tr.phi_r + tr.phi_i), 0.5 * (tr.phi_r - tr.phi_i)};
    }
};

struct CutoffCoefficient {
    double c = 0.0;  // signed
    double magnitude() const { return std::abs(c); }
};

/// Residual of the return condition; zero when the trajectory revisits x = 0.
inline double return_condition(double phi_i, double phi_r) {
    return (std::cos(phi_r) - std::cos(phi_i)) + (phi_r - phi_i) * std::sin(phi_i);
}

/// Return kinetic energy in units of Up.
inline double return_energy_up(double phi_i, double phi_r) {
    const double dv = std::sin(phi_r) - std::sin(phi_i);
    return 2.0 * dv * dv;
}

namespace detail {

// First zero of the excursion x(phi) after birth. The velocity is negative
// on (phi_i, pi - phi_i) and positive on (pi - phi_i, 2 pi + phi_i), so x
// is strictly negative up to pi - phi_i and rises monotonically through the
// return: [pi - phi_i, 2 pi + phi_i] always brackets it.
inline double first_return_phase(double phi_i) {
    if (!(phi_i > 0.0 && phi_i < 0.5 * M_PI))
        throw std::domain_error("first_return_phase: phi_i must lie in (0, pi/2)");
    double lo = M_PI - phi_i;
    double hi = 2.0 * M_PI + phi_i;  // x there equals 2 pi sin(phi_i) > 0
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (return_condition(phi_i, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15 * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Trajectory of maximum return energy (the cutoff), by golden-section search
/// over the ionization phase.
inline Trajectory cutoff_trajectory() {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = 0.05, b = 1.4;  // cutoff phi_i is well inside (0, pi/2)
    auto energy_at = [](double phi_i) {
        return return_energy_up(phi_i, detail::first_return_phase(phi_i));
    };
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = energy_at(x1), f2 = energy_at(x2);
    while (b - a > 1e-12) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = energy_at(x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = energy_at(x1);
        }
    }
    const double phi_i = 0.5 * (a + b);
    const double phi_r = detail::first_return_phase(phi_i);
    return {phi_i, phi_r, return_energy_up(phi_i, phi_r), Branch::cutoff};
}

/// Short and long trajectories returning with the given kinetic energy
/// (units of Up, 0 < energy < the classical maximum of ~3.173).
inline std::pair<Trajectory, Trajectory> solve_return(double energy_up) {
    if (!(energy_up > 0.0))
        throw std::domain_error("solve_return: return energy must be positive");

    const Trajectory top = cutoff_trajectory();
    if (energy_up >= top.energy_up)
        throw std::domain_error("solve_return: return energy exceeds the classical maximum 3.173 Up");

    auto solve_branch = [&](double lo, double hi, Branch br) {
        // return_energy(phi_i) is monotone on each side of the cutoff phase
        auto f = [&](double phi_i) {
            return return_energy_up(phi_i, detail::first_return_phase(phi_i)) - energy_up;
        };
        double flo = f(lo);
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = mid; flo = fm;
            } else {
                hi = mid;
            }
            if (hi - lo < 1e-14 * std::max(1.0, hi)) break;
        }
        const double phi_i = 0.5 * (lo + hi);
        const double phi_r = detail::first_return_phase(phi_i);
        Trajectory tr{phi_i, phi_r, return_energy_up(phi_i, phi_r), br};
        if (std::abs(tr.energy_up - energy_up) > 1e-8)
            throw std::runtime_error("solve_return: branch root not bracketed");
        return tr;
    };

    const double eps = 1e-9;
    // long branch: born earlier than the cutoff phase; short branch: later
    Trajectory long_tr = solve_branch(eps, top.phi_i, Branch::long_branch);
    Trajectory short_tr = solve_branch(top.phi_i, 0.5 * M_PI - eps, Branch::short_branch);
    return {short_tr, long_tr};
}

/// C = 2 sin(theta) (dtheta cos(dtheta) - sin(dtheta)); the constant in
/// eta = tan^2(C gamma). Signed; only |C| enters the ratio.
inline CutoffCoefficient coefficient_c(const PhaseAngles& a) {
    const double dt = a.delta_theta;
    return {2.0 * std::sin(a.theta) * (dt * std::cos(dt) - std::sin(dt))};
}

inline CutoffCoefficient coefficient_c(const Trajectory& tr) {
    return coefficient_c(PhaseAngles::of(tr));
}

/// Even-to-odd ratio eta = tan^2(C gamma); +infinity at the poles of tan.
inline double analytic_ratio(double gamma, double c) {
    const double t = std::tan(c * gamma);
    const double eta = t * t;
    if (!std::isfinite(eta)) return std::numeric_limits<double>::infinity();
    return eta;
}

struct ReversalPoints {
    std::vector<double> unity_crossings;  // eta = 1 at (k + 0.5) pi / (2C)
    std::vector<double> pure_odd;         // eta minima at k pi / C
    std::vector<double> pure_even;        // eta maxima at (k + 0.5) pi / C
};

inline ReversalPoints reversal_points(double c, int k_max) {
    if (k_max < 0) throw std::domain_error("reversal_points: k_max must be >= 0");
    const double ac = std::abs(c);
    ReversalPoints out;
    for (int k = 0; k <= k_max; ++k) {
        out.unity_crossings.push_back((k + 0.5) * M_PI / (2.0 * ac));
        out.pure_odd.push_back(k * M_PI / ac);
        out.pure_even.push_back((k + 0.5) * M_PI / ac);
    }
    return out;
}

enum class Regime { perturbative, intermediate, disordered };

struct RegimeClass {
    Regime regime = Regime::perturbative;
    bool low_signal = false;  // gamma < 0.1: below the numerical noise floor

    std::string name() const {
        switch (regime) {
            case Regime::perturbative: return "perturbative";
            case Regime::intermediate: return "intermediate";
            default: return "disordered";
        }
    }
};

/// Three-regime map of the even-to-odd response vs gamma. Boundaries 0.6 and
/// 4.3 (= 3.5 pi / C at the cutoff); gamma below 0.1 is perturbative but
/// flagged as noise-limited.
inline RegimeClass classify_regime(double gamma) {
    if (gamma < 0.0) throw std::domain_error("classify_regime: gamma must be >= 0");
    if (gamma < 0.1) return {Regime::perturbative, true};
    if (gamma <= 0.6) return {Regime::perturbative, false};
    if (gamma <= 4.3) return {Regime::intermediate, false};
    return {Regime::disordered, false};
}

/// Interfering attosecond-burst pair behind one harmonic order. The THz
/// field advances one burst's quasi-classical action by S_T = C gamma and
/// retards the other, so the interburst action difference is 2 S_T; the
/// half-cycle field flip makes the amplitudes equal and opposite.
struct BurstPair {
    std::complex<double> d1{1.0, 0.0};
    std::complex<double> d2{-1.0, 0.0};
    double phi1 = 0.0;
    double phi2 = 0.0;
    double delta_phi = 0.0;      // phi2 - phi1 = N pi - Re(delta_action)
    double delta_action = 0.0;   // 2 * s_t
    double s_t = 0.0;            // first-order THz action correction, C gamma
};

inline BurstPair burst_pair(int order, double gamma, double c) {
    BurstPair b;
    b.s_t = c * gamma;
    b.delta_action = 2.0 * b.s_t;
    b.phi1 = b.s_t;
    b.phi2 = order * M_PI - b.s_t;
    b.delta_phi = b.phi2 - b.phi1;
    return b;
}

/// Harmonic intensity (arbitrary units) from the two-burst interference:
/// 4 sin^2(C gamma) at even orders, 4 cos^2(C gamma) at odd orders, so the
/// even-to-adjacent-odd ratio is exactly tan^2(C gamma).
inline double analytic_even_odd_spectrum(int order, double gamma, double c) {
    const BurstPair b = burst_pair(order, gamma, c);
    const std::complex<double> i1(0.0, 1.0);
    const std::complex<double> amp = b.d1 * std::exp(-i1 * b.phi1) + b.d2 * std::exp(-i1 * b.phi2);
    return std::norm(amp);
}

}  // namespace oehhg
