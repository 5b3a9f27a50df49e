#pragma once

#include <map>
#include <string>

#include "sizzle/transmon.hpp"

namespace sizzle {

// Max-over-time adiabatic coefficients of a driven transmon, summed over
// the transition pairs (g,e), (g,f), (e,f), (e,h):
//   A_mn(t) = |<m(t)| dH/dt |n(t)>| / |E_m(t) - E_n(t)|^2
struct AdiabaticReport {
    double a_total_max = 0.0;
    std::map<std::string, double> per_pair; // keys "g-e", "g-f", "e-f", "e-h"
};

// Instantaneous eigenanalysis in the drive frame (frame = carrier), with
// eigenstates tracked across the grid by maximal overlap. Throws
// pole_error if a tracked pair becomes degenerate below 1e-12 rad/ns.
AdiabaticReport adiabatic_coefficient(const TransmonSpec& transmon,
                                      const DriveTone& drive,
                                      const std::vector<double>& t_grid);

// Grid over the rising ramp (the flat top contributes zero, the falling
// ramp mirrors the rising one).
std::vector<double> default_ramp_grid(const Envelope& env);

} // namespace sizzle
