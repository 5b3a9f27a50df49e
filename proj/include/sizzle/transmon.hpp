#pragma once

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "sizzle/envelopes.hpp"

namespace sizzle {

// One fixed-frequency transmon, truncated to `levels` Fock states
// (g, e, f, h for the default 4).
struct TransmonSpec {
    double omega_ge = 0.0;  // rad/ns, > 0
    double alpha = 0.0;     // rad/ns, < 0
    int levels = 4;
    double t1 = std::numeric_limits<double>::infinity();      // ns
    double t2_star = std::numeric_limits<double>::infinity(); // ns

    void validate() const;
};

// Two (or more) transmons with transverse couplings, plus the common
// rotating-frame frequency used for simulation.
struct SystemSpec {
    std::vector<TransmonSpec> transmons;
    std::map<std::pair<int, int>, double> couplings; // g, rad/ns, keys (i<j)
    double frame_freq = 0.0;                         // omega_f, rad/ns

    void validate() const;
    std::vector<int> level_dims() const;
    double coupling(int i, int j) const;
};

// One microwave tone applied to a single transmon.
struct DriveTone {
    int target = 0;
    double carrier_freq = 0.0; // omega_d, rad/ns
    Envelope envelope;
    double phase_offset = 0.0; // phi, rad

    void validate(int n_transmons) const;
};

} // namespace sizzle
