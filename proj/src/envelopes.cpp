#include "sizzle/envelopes.hpp"

#include <cmath>

#include "sizzle/units.hpp"

namespace sizzle {

void RcftDragEnvelope::validate() const {
    if (!(ramp > 0.0) || !(2.0 * ramp <= total))
        throw error("RCFT envelope requires 0 < 2*ramp <= total");
    if (amplitude < 0.0) throw error("RCFT envelope amplitude must be >= 0");
}

void HalfPiEnvelope::validate() const {
    if (!(duration > 0.0)) throw error("half-pi envelope duration must be > 0");
}

namespace {

// Piece selected by t_ref, evaluated at t (possibly slightly outside).
std::complex<double> rcft_piece_value(const RcftDragEnvelope& e, double t_ref, double t) {
    const std::complex<double> i(0.0, 1.0);
    if (t_ref < e.ramp) {
        const double x = pi * t / e.ramp;
        return e.amplitude * ((1.0 - std::cos(x)) / 2.0 + i * e.iq_ratio * std::sin(x) / 2.0);
    }
    if (t_ref < e.total - e.ramp) return e.amplitude;
    const double x = pi * (e.total - t) / e.ramp;
    return e.amplitude * ((1.0 - std::cos(x)) / 2.0 + i * e.iq_ratio * std::sin(x) / 2.0);
}

std::complex<double> rcft_value(const RcftDragEnvelope& e, double t) {
    return rcft_piece_value(e, t, t);
}

std::complex<double> rcft_deriv(const RcftDragEnvelope& e, double t) {
    const std::complex<double> i(0.0, 1.0);
    const double k = pi / e.ramp;
    if (t < e.ramp) {
        const double x = k * t;
        return e.amplitude * k * (std::sin(x) / 2.0 + i * e.iq_ratio * std::cos(x) / 2.0);
    }
    if (t < e.total - e.ramp) return 0.0;
    const double x = k * (e.total - t);
    return -e.amplitude * k * (std::sin(x) / 2.0 + i * e.iq_ratio * std::cos(x) / 2.0);
}

std::complex<double> hpi_value(const HalfPiEnvelope& e, double t) {
    const std::complex<double> i(0.0, 1.0);
    const double x = two_pi * t / e.duration;
    return e.amplitude * ((1.0 - std::cos(x)) / 2.0 + i * e.iq_ratio * std::sin(x) / 2.0);
}

std::complex<double> hpi_deriv(const HalfPiEnvelope& e, double t) {
    const std::complex<double> i(0.0, 1.0);
    const double k = two_pi / e.duration;
    const double x = k * t;
    return e.amplitude * k * (std::sin(x) / 2.0 + i * e.iq_ratio * std::cos(x) / 2.0);
}

} // namespace

std::complex<double> envelope_value(const Envelope& env, double t) {
    const double total = envelope_total(env);
    if (t < 0.0 || t > total) throw error("envelope_value: t outside [0, total]");
    return std::visit(
        [&](const auto& e) -> std::complex<double> {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, RcftDragEnvelope>) return rcft_value(e, t);
            else if constexpr (std::is_same_v<T, HalfPiEnvelope>) return hpi_value(e, t);
            else return e.amplitude;
        },
        env);
}

std::complex<double> envelope_derivative(const Envelope& env, double t) {
    const double total = envelope_total(env);
    if (t < 0.0 || t > total) throw error("envelope_derivative: t outside [0, total]");
    return std::visit(
        [&](const auto& e) -> std::complex<double> {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, RcftDragEnvelope>) return rcft_deriv(e, t);
            else if constexpr (std::is_same_v<T, HalfPiEnvelope>) return hpi_deriv(e, t);
            else return 0.0;
        },
        env);
}

std::complex<double> envelope_piece_value(const Envelope& env, double t_ref, double t) {
    const double total = envelope_total(env);
    if (t_ref < 0.0 || t_ref > total) return 0.0;
    return std::visit(
        [&](const auto& e) -> std::complex<double> {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, RcftDragEnvelope>)
                return rcft_piece_value(e, t_ref, t);
            else if constexpr (std::is_same_v<T, HalfPiEnvelope>)
                return hpi_value(e, t);
            else
                return e.amplitude;
        },
        env);
}

double envelope_total(const Envelope& env) {
    return std::visit(
        [](const auto& e) -> double {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, HalfPiEnvelope>) return e.duration;
            else return e.total;
        },
        env);
}

bool envelope_constant_on(const Envelope& env, double t0, double t1) {
    return std::visit(
        [&](const auto& e) -> bool {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, RcftDragEnvelope>)
                return t0 >= e.ramp && t1 <= e.total - e.ramp;
            else if constexpr (std::is_same_v<T, HalfPiEnvelope>)
                return false;
            else
                return true;
        },
        env);
}

} // namespace sizzle
