#include <doctest.h>

#include "sizzle/envelopes.hpp"
#include "sizzle/units.hpp"

using namespace sizzle;

TEST_CASE("RCFT envelope boundary and midpoint values") {
    RcftDragEnvelope e{1.0, 30.0, 160.0, -0.109};
    Envelope env = e;
    CHECK(std::abs(envelope_value(env, 0.0)) < 1e-15);
    CHECK(std::abs(envelope_value(env, 160.0)) < 1e-15);
    // ramp complete: exactly Omega, purely real
    CHECK(envelope_value(env, 30.0).real() == doctest::Approx(1.0));
    CHECK(envelope_value(env, 30.0).imag() == doctest::Approx(0.0));
    // half-ramp: Omega*(1/2 + i r/2)
    auto v = envelope_value(env, 15.0);
    CHECK(v.real() == doctest::Approx(0.5));
    CHECK(v.imag() == doctest::Approx(-0.109 / 2.0));
}

TEST_CASE("RCFT envelope continuity at both ramp boundaries") {
    RcftDragEnvelope e{2.3, 17.0, 101.0, 0.2};
    Envelope env = e;
    for (double tb : {17.0, 101.0 - 17.0}) {
        auto lo = envelope_value(env, tb - 1e-9);
        auto hi = envelope_value(env, tb + 1e-9);
        CHECK(std::abs(lo - hi) < 1e-7);
    }
}

TEST_CASE("RCFT pulse area equals (total - ramp) * amplitude") {
    RcftDragEnvelope e{1.7, 23.0, 140.0, -0.3};
    Envelope env = e;
    // Simpson integration of the real part
    const int n = 20000;
    const double h = e.total / n;
    double area = envelope_value(env, 0.0).real() + envelope_value(env, e.total).real();
    for (int k = 1; k < n; ++k)
        area += envelope_value(env, k * h).real() * (k % 2 ? 4.0 : 2.0);
    area *= h / 3.0;
    const double expect = (e.total - e.ramp) * e.amplitude;
    CHECK(std::abs(area - expect) / expect < 1e-9);
}

TEST_CASE("half-pi envelope matches its formula") {
    HalfPiEnvelope e{0.8, -0.12, 25.0};
    Envelope env = e;
    const double t = 7.3;
    const double x = two_pi * t / 25.0;
    auto v = envelope_value(env, t);
    CHECK(v.real() == doctest::Approx(0.8 * (1.0 - std::cos(x)) / 2.0));
    CHECK(v.imag() == doctest::Approx(0.8 * (-0.12) * std::sin(x) / 2.0));
}

TEST_CASE("envelope derivative matches finite differences") {
    RcftDragEnvelope e{1.1, 19.0, 120.0, -0.2};
    Envelope env = e;
    for (double t : {3.0, 10.0, 60.0, 110.0}) {
        const double h = 1e-6;
        auto fd = (envelope_value(env, t + h) - envelope_value(env, t - h)) / (2.0 * h);
        auto an = envelope_derivative(env, t);
        CHECK(std::abs(fd - an) < 1e-6);
    }
}

TEST_CASE("envelope domain and invariants") {
    RcftDragEnvelope e{1.0, 30.0, 160.0, 0.0};
    Envelope env = e;
    CHECK_THROWS_AS(envelope_value(env, -1.0), error);
    CHECK_THROWS_AS(envelope_value(env, 161.0), error);
    RcftDragEnvelope bad{1.0, 90.0, 160.0, 0.0};
    CHECK_THROWS_AS(bad.validate(), error);
}
