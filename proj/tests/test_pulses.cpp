#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oehhg/pulses.hpp"
#include "oehhg/units.hpp"

using namespace oehhg;

namespace {
ProbePulse fig2_probe() {
    ProbePulse p;
    p.e0 = intensity_to_field(2.5e14);
    p.omega0 = wavelength_to_frequency(2000.0);
    p.total_cycles = 10;
    p.ramp_cycles = 1;
    p.cep = 0.0;
    return p;
}
}  // namespace

TEST_CASE("probe field values at marked points") {
    ProbePulse p = fig2_probe();
    p.validate();

    // flat-top center, CEP = 0: crest value is E0
    CHECK(p.field(0.0) == Catch::Approx(p.e0).epsilon(1e-12));
    // before the pulse starts the field vanishes
    CHECK(p.field(p.begin() - 1.0) == 0.0);
    CHECK(p.field(2.0 * p.begin()) == 0.0);
    // midpoint of the ramp-up: envelope 1/2, and for a 10-cycle pulse the
    // carrier sits at a trough there (w0 t = -9 pi), so |field| = E0/2
    const double t_mid_ramp = p.begin() + 0.5 * p.period();
    CHECK(p.envelope(t_mid_ramp) == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(p.field(t_mid_ramp)) == Catch::Approx(0.5 * p.e0).epsilon(1e-9));
}

TEST_CASE("probe envelope is trapezoidal, continuous and symmetric") {
    ProbePulse p = fig2_probe();
    const double half = 0.5 * p.duration();
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ts(-half * 1.2, half * 1.2);
    for (int i = 0; i < 500; ++i) {
        const double t = ts(rng);
        const double e = p.envelope(t);
        CHECK(e >= 0.0);
        CHECK(e <= 1.0);
        CHECK(p.envelope(-t) == Catch::Approx(e).margin(1e-14));
        // continuity: small steps change the envelope by at most slope*step
        const double step = 1e-6;
        CHECK(std::abs(p.envelope(t + step) - e) <= step / (p.ramp_cycles * p.period()) + 1e-12);
    }
    // flat top is exactly 1
    CHECK(p.envelope(0.0) == 1.0);
    CHECK(p.envelope(p.flat_begin() + 1e-9) == Catch::Approx(1.0).margin(1e-12));
    CHECK(p.envelope(p.flat_end() - 1e-9) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("probe validation rejects bad cycle counts") {
    ProbePulse p = fig2_probe();
    p.total_cycles = 2;
    p.ramp_cycles = 1;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.total_cycles = 3;
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("THz waveform values") {
    ThzPulse thz{5.0e-5, thz_to_omega(1.3), 0.0};
    thz.validate();

    CHECK(thz.field(0.0) == 0.0);
    // quarter period in: envelope exp(-1/144)
    const double t_quarter = 0.5 * M_PI / thz.omega;
    CHECK(thz.field(t_quarter) ==
          Catch::Approx(thz.et0 * std::exp(-1.0 / 144.0)).epsilon(1e-12));
    CHECK(thz.field(t_quarter) == Catch::Approx(0.9931 * thz.et0).epsilon(1e-4));
    // decays far away
    CHECK(std::abs(thz.field(100.0 * thz.period())) < 1e-300);
}

TEST_CASE("THz waveform is odd about its offset and bounded by ET0") {
    ThzPulse thz{3.3e-5, thz_to_omega(0.8), 1234.5};
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ss(-4.0 * thz.period(), 4.0 * thz.period());
    for (int i = 0; i < 500; ++i) {
        const double s = ss(rng);
        CHECK(thz.field(thz.time_offset + s) ==
              Catch::Approx(-thz.field(thz.time_offset - s)).margin(1e-18));
        CHECK(std::abs(thz.field(thz.time_offset + s)) <= thz.et0);
    }
    CHECK(thz.peak_abs_field() <= thz.et0);
    CHECK(thz.peak_abs_field() > 0.99 * thz.et0);
}

TEST_CASE("composite field composes probe and gated THz part") {
    ProbePulse p = fig2_probe();
    SECTION("probe only") {
        auto f = CompositeField::probe_only(p);
        f.validate();
        CHECK(f.field(0.0) == p.field(0.0));
    }
    SECTION("static THz gated by the probe envelope") {
        auto f = CompositeField::with_static(p, 1e-4);
        f.validate();
        CHECK(f.field(0.0) == Catch::Approx(p.field(0.0) + 1e-4).epsilon(1e-12));
        // outside the pulse the composite vanishes entirely
        CHECK(f.field(p.begin() - 5.0) == 0.0);
    }
    SECTION("full waveform") {
        ThzPulse thz{5e-5, thz_to_omega(1.3), 0.0};
        auto f = CompositeField::with_thz(p, thz);
        f.validate();
        const double t = 0.3 * p.flat_end();
        CHECK(f.field(t) == Catch::Approx(p.field(t) + thz.field(t)).epsilon(1e-12));
    }
    SECTION("both THz modes at once are rejected") {
        CompositeField f{p, ThzPulse{1e-5, 1e-4, 0.0}, 1e-5};
        CHECK_THROWS_AS(f.validate(), std::domain_error);
    }
}
