#pragma once

#include <numbers>

// Internal convention: angular frequencies in rad/ns, times in ns.
// External interfaces (CLI, files, plan configs) use ordinary frequency
// in MHz; the conversion is omega = 2*pi*f with f in GHz = MHz * 1e-3.

namespace sizzle {

inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double pi = std::numbers::pi;

inline constexpr double mhz_to_radns(double f_mhz) {
    return two_pi * f_mhz * 1e-3;
}

inline constexpr double radns_to_mhz(double w_radns) {
    return w_radns / (two_pi * 1e-3);
}

inline constexpr double us_to_ns(double t_us) { return t_us * 1e3; }

} // namespace sizzle
