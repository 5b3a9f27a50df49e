#pragma once

#include <complex>
#include <variant>

#include "sizzle/errors.hpp"

namespace sizzle {

// Raised-cosine flat-top pulse with a DRAG quadrature on the ramps:
//   0 <= t < ramp:          amp * [(1-cos(pi t/ramp))/2 + i*iq*sin(pi t/ramp)/2]
//   ramp <= t < total-ramp: amp
//   total-ramp <= t<total:  mirrored ramp
struct RcftDragEnvelope {
    double amplitude = 0.0; // Omega, rad/ns
    double ramp = 0.0;      // tau_ramp, ns
    double total = 0.0;     // tau_total, ns
    double iq_ratio = 0.0;  // r_iq, dimensionless

    void validate() const;
};

// Cosine half-pi pulse with DRAG quadrature:
//   amp * [(1-cos(2 pi t/tau))/2 + i*iq*sin(2 pi t/tau)/2], 0 <= t < tau
struct HalfPiEnvelope {
    double amplitude = 0.0; // Omega, rad/ns
    double iq_ratio = 0.0;
    double duration = 25.0; // tau_hpi, ns

    void validate() const;
};

struct ConstantEnvelope {
    double amplitude = 0.0;
    double total = 0.0;
};

using Envelope = std::variant<RcftDragEnvelope, HalfPiEnvelope, ConstantEnvelope>;

// Complex envelope value at time t. Throws if t is outside [0, total].
std::complex<double> envelope_value(const Envelope& env, double t);

// Analytic time derivative of the complex envelope.
std::complex<double> envelope_derivative(const Envelope& env, double t);

// Value of the envelope piece active at t_ref, analytically continued to
// time t. Exponential integrators sample the generator slightly outside
// a step's window; evaluating the neighboring piece's formula there would
// inject a spurious discontinuity, so the piece is pinned by t_ref.
std::complex<double> envelope_piece_value(const Envelope& env, double t_ref, double t);

double envelope_total(const Envelope& env);

// true on any interval where the envelope is constant (the flat top);
// used by segment-aware propagation.
bool envelope_constant_on(const Envelope& env, double t0, double t1);

} // namespace sizzle
