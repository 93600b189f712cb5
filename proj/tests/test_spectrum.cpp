#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oehhg/spectrum.hpp"

using namespace oehhg;

namespace {
constexpr double kW0 = 0.05;

DipoleSignal multi_order_signal(const std::vector<std::pair<double, double>>& orders_amps,
                                int cycles = 24, double dt = 0.05) {
    DipoleSignal sig = synthetic_cosine_signal(kW0, 1.0, cycles, dt);
    for (std::size_t i = 0; i < sig.size(); ++i) {
        double a = 0.0;
        for (const auto& [ord, amp] : orders_amps) a += amp * std::cos(ord * kW0 * sig.time[i]);
        sig.accel[i] = a;
    }
    return sig;
}
}  // namespace

TEST_CASE("pure cosine gives a single harmonic peak") {
    const auto sig = multi_order_signal({{5.0, 1.0}});
    const auto spec = compute_spectrum(sig, WindowKind::hann_full);

    const double i5 = harmonic_intensity(spec, 5).intensity;
    const double i4 = harmonic_intensity(spec, 4).intensity;
    const double i6 = harmonic_intensity(spec, 6).intensity;
    REQUIRE(i5 > 0.0);
    CHECK(i4 / i5 < 1e-6);
    CHECK(i6 / i5 < 1e-6);
}

TEST_CASE("near-zero signal gives a near-zero spectrum") {
    auto sig = multi_order_signal({{5.0, 0.0}});
    const auto spec = compute_spectrum(sig, WindowKind::hann_full);
    for (double v : spec.intensity) CHECK(v == 0.0);
}

TEST_CASE("empty or too-short signals are rejected") {
    DipoleSignal empty;
    empty.meta.probe.omega0 = kW0;
    CHECK_THROWS_AS(compute_spectrum(empty), std::domain_error);

    const auto tiny = synthetic_cosine_signal(kW0, 1.0, 1, 0.05);
    CHECK_THROWS_AS(compute_spectrum(tiny, WindowKind::hann_full), std::domain_error);
}

TEST_CASE("Parseval consistency on synthetic signals") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> amp(0.1, 2.0);
    for (int rep = 0; rep < 3; ++rep) {
        const auto sig = multi_order_signal(
            {{3.0, amp(rng)}, {4.0, amp(rng)}, {7.5, amp(rng)}, {11.0, amp(rng)}});
        for (auto window : {WindowKind::hann_full, WindowKind::rect}) {
            const auto spec = compute_spectrum(sig, window);
            const auto w = window_weights(sig, window);
            double time_side = 0.0;
            for (std::size_t i = 0; i < sig.size(); ++i) {
                const double f = w[i] * sig.accel[i];
                time_side += f * f;
            }
            time_side *= sig.dt;
            double freq_side = 0.0;
            for (double v : spec.intensity) freq_side += v;
            freq_side *= spec.order_step * spec.w0;
            CHECK(freq_side == Catch::Approx(time_side).epsilon(1e-6));
        }
    }
}

TEST_CASE("band integration is linear: equal amplitudes give equal bins") {
    const auto sig = multi_order_signal({{4.0, 1.0}, {5.0, 1.0}});
    const auto spec = compute_spectrum(sig, WindowKind::hann_full);
    const double i4 = harmonic_intensity(spec, 4).intensity;
    const double i5 = harmonic_intensity(spec, 5).intensity;
    CHECK(i4 == Catch::Approx(i5).epsilon(1e-3));
}

TEST_CASE("harmonic_intensity rejects out-of-range orders") {
    const auto sig = multi_order_signal({{5.0, 1.0}});
    const auto spec = compute_spectrum(sig, WindowKind::hann_full);
    CHECK_THROWS_AS(harmonic_intensity(spec, 0), std::domain_error);
    CHECK_THROWS_AS(harmonic_intensity(spec, 100000000), std::domain_error);
}

TEST_CASE("even-to-odd ratio on synthetic combs") {
    SECTION("pure-odd comb: eta ~ 0") {
        const auto sig = multi_order_signal({{3.0, 1.0}, {5.0, 1.0}, {7.0, 1.0}});
        const auto spec = compute_spectrum(sig, WindowKind::hann_full);
        const auto p = even_to_odd_ratio(spec, 4);
        CHECK(p.eta < 1e-6);
        CHECK(p.flag == EvenOddFlag::ok);
    }
    SECTION("all three bins equal: eta = 1") {
        const auto sig = multi_order_signal({{3.0, 1.0}, {4.0, 1.0}, {5.0, 1.0}});
        const auto spec = compute_spectrum(sig, WindowKind::hann_full);
        const auto p = even_to_odd_ratio(spec, 4);
        CHECK(p.eta == Catch::Approx(1.0).epsilon(2e-3));
    }
    SECTION("zero odd average: infinity sentinel, not an exception") {
        HhgSpectrum spec;
        spec.w0 = kW0;
        spec.order_step = 0.25;
        spec.intensity.assign(41, 0.0);
        spec.amplitude.assign(41, 0.0);
        spec.intensity[4 * 4] = 1.0;  // order 4 only
        const auto p = even_to_odd_ratio(spec, 4);
        CHECK(std::isinf(p.eta));
        CHECK(p.flag == EvenOddFlag::pure_even);
    }
    SECTION("odd even_order rejected") {
        const auto sig = multi_order_signal({{5.0, 1.0}});
        const auto spec = compute_spectrum(sig, WindowKind::hann_full);
        CHECK_THROWS_AS(even_to_odd_ratio(spec, 5), std::domain_error);
    }
}

TEST_CASE("eta is invariant under signal rescaling") {
    auto sig = multi_order_signal({{3.0, 0.7}, {4.0, 0.4}, {5.0, 1.1}});
    const auto p0 = even_to_odd_ratio(compute_spectrum(sig, WindowKind::hann_full), 4);
    for (double c : {1e-6, 0.5, 3.0, 1e8}) {
        auto scaled = sig;
        for (auto& a : scaled.accel) a *= c;
        const auto p = even_to_odd_ratio(compute_spectrum(scaled, WindowKind::hann_full), 4);
        CHECK(p.eta == Catch::Approx(p0.eta).epsilon(1e-12));
    }
}

TEST_CASE("cutoff law") {
    // paper-scale probe: cutoff sits at order ~500 (H500/H501 at the cutoff)
    CHECK(cutoff_order(0.08440, 0.022782, 0.5) == Catch::Approx(499.6).margin(0.6));
    CHECK(monitored_even_order(0.08440, 0.022782, 0.5) == 498);
    // vanishing field: Ip / w0
    CHECK(cutoff_order(1e-9, 0.022782, 0.5) == Catch::Approx(0.5 / 0.022782).epsilon(1e-4));
    // 1e14 W/cm^2 case
    CHECK(cutoff_order(0.05338, 0.022782, 0.5) == Catch::Approx(213.4).margin(0.6));
    CHECK(monitored_even_order(0.05338, 0.022782, 0.5) == 212);
    CHECK_THROWS_AS(cutoff_order(0.0, 0.022782, 0.5), std::domain_error);
}

TEST_CASE("monitored order is the largest even order below the cutoff") {
    // spot values from the definition
    struct Case { double cut; int expect; };
    // build e0 tweaks that land on specific cutoffs is awkward; check the
    // rounding helper indirectly through crafted inputs
    CHECK(monitored_even_order(0.08440, 0.022782, 0.5) % 2 == 0);
    const double cut = cutoff_order(0.08440, 0.022782, 0.5);
    const int mon = monitored_even_order(0.08440, 0.022782, 0.5);
    CHECK(mon <= cut);
    CHECK(mon + 2 > cut);
}

TEST_CASE("plateau cutoff locator on a synthetic plateau") {
    // flat comb of odd harmonics up to 21, then nothing
    std::vector<std::pair<double, double>> comb;
    for (double n = 3.0; n <= 21.0; n += 2.0) comb.push_back({n, 1.0});
    const auto sig = multi_order_signal(comb, 40);
    const auto spec = compute_spectrum(sig, WindowKind::hann_full);
    const double edge = locate_plateau_cutoff(spec, 5, 31);
    CHECK(edge == Catch::Approx(21.0).margin(2.0));
}
