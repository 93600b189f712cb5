#pragma once

#include <cmath>
#include <stdexcept>

// Atomic-unit conversions for the laboratory quantities that parameterize a
// strong-field HHG run: laser intensity, wavelength, THz field strength and
// frequency, and the dimensionless asymmetry parameter gamma = E0*ET/w0^3.

namespace oehhg {

namespace constants {

// 1 a.u. of intensity reference: I[W/cm^2] = E0[a.u.]^2 * this
inline constexpr double intensity_au_w_cm2 = 3.50945e16;

// 1 a.u. of electric field in kV/cm
inline constexpr double field_au_kv_cm = 5.142e6;

// lambda[nm] * omega[a.u.] = this
inline constexpr double nm_times_omega_au = 45.5633;

// 1 a.u. of time in seconds
inline constexpr double time_au_s = 2.4189e-17;

inline constexpr double time_au_fs = time_au_s * 1e15;

}  // namespace constants

/// Peak field amplitude (a.u.) for a given intensity in W/cm^2.
inline double intensity_to_field(double intensity_w_cm2) {
    if (intensity_w_cm2 <= 0.0)
        throw std::domain_error("intensity_to_field: intensity must be positive");
    return std::sqrt(intensity_w_cm2 / constants::intensity_au_w_cm2);
}

inline double field_to_intensity(double field_au) {
    return field_au * field_au * constants::intensity_au_w_cm2;
}

/// Angular frequency (a.u.) for a vacuum wavelength in nm.
inline double wavelength_to_frequency(double wavelength_nm) {
    if (wavelength_nm <= 0.0)
        throw std::domain_error("wavelength_to_frequency: wavelength must be positive");
    return constants::nm_times_omega_au / wavelength_nm;
}

inline double frequency_to_wavelength(double omega_au) {
    if (omega_au <= 0.0)
        throw std::domain_error("frequency_to_wavelength: frequency must be positive");
    return constants::nm_times_omega_au / omega_au;
}

inline double field_to_kv_per_cm(double field_au) {
    return field_au * constants::field_au_kv_cm;
}

inline double kv_per_cm_to_field(double kv_cm) {
    return kv_cm / constants::field_au_kv_cm;
}

/// Angular frequency (a.u.) of an oscillation given in THz.
inline double thz_to_omega(double freq_thz) {
    if (freq_thz <= 0.0)
        throw std::domain_error("thz_to_omega: frequency must be positive");
    return 2.0 * M_PI * freq_thz * 1e12 * constants::time_au_s;
}

inline double fs_to_au(double t_fs) { return t_fs / constants::time_au_fs; }
inline double au_to_fs(double t_au) { return t_au * constants::time_au_fs; }

/// Scaled THz field gamma = E0 * ET / w0^3 (dimensionless).
inline double asymmetry_parameter(double e0, double w0, double et) {
    if (e0 <= 0.0 || w0 <= 0.0)
        throw std::domain_error("asymmetry_parameter: probe amplitude and frequency must be positive");
    return e0 * et / (w0 * w0 * w0);
}

/// The THz field (a.u.) that produces a given gamma with a given probe.
inline double gamma_to_field(double gamma, double e0, double w0) {
    if (e0 <= 0.0 || w0 <= 0.0)
        throw std::domain_error("gamma_to_field: probe amplitude and frequency must be positive");
    return gamma * w0 * w0 * w0 / e0;
}

/// Cycle-averaged quiver energy Up = E0^2 / (4 w0^2) in a.u.
inline double ponderomotive_energy(double e0, double w0) {
    return e0 * e0 / (4.0 * w0 * w0);
}

struct AsymmetryPoint {
    double gamma = 0.0;
    double et = 0.0;  // a.u. field
    double e0 = 0.0;
    double w0 = 0.0;

    static AsymmetryPoint from_field(double e0, double w0, double et) {
        return {asymmetry_parameter(e0, w0, et), et, e0, w0};
    }
};

}  // namespace oehhg
