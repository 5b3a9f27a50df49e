#pragma once

#include "sizzle/operators.hpp"
#include "sizzle/transmon.hpp"

namespace sizzle {

// Static rotating-frame Hamiltonian
//   sum_i [(omega_i - omega_f) n_i + (alpha_i/2) a_i^dag^2 a_i^2]
//   + sum_{i<j} g_ij (a_i a_j^dag + h.c.)
OperatorMatrix build_static_hamiltonian(const SystemSpec& system);

// Drive term at time t for one tone, embedded on its target:
//   (c(t) a + c*(t) a^dag)/2,  c(t) = ~Omega(t) e^{i phi} e^{i(omega_d-omega_f)t}
// Outside the envelope support this is the zero operator.
OperatorMatrix build_drive_term(const DriveTone& drive, const SystemSpec& system,
                                double t);

// Time-dependent Hamiltonian H(t) = H_static + sum of drive terms, with
// enough structure exposed for segment-aware propagation.
class HamiltonianSchedule {
  public:
    HamiltonianSchedule(SystemSpec system, std::vector<DriveTone> drives);

    const SystemSpec& system() const { return system_; }
    const std::vector<DriveTone>& drives() const { return drives_; }
    const Mat& h_static() const { return h_static_; }
    int dim() const { return static_cast<int>(h_static_.rows()); }

    Mat hamiltonian(double t) const;

    // Fills `h` in place (avoids allocation in the integrator loop).
    void hamiltonian_into(double t, Mat& h) const;

    // Same, but with each envelope's piece pinned by t_ref so node times
    // slightly outside the current smooth segment stay on its formula.
    void hamiltonian_into_ref(double t, double t_ref, Mat& h) const;

    // True if H is time independent over [t0, t1]: every tone either has
    // zero support there, or a constant envelope and carrier == frame.
    bool constant_on(double t0, double t1) const;

    // Earliest envelope segment boundary strictly after t (ramp edges,
    // envelope ends), or +infinity when none remain.
    double next_breakpoint(double t) const;

  private:
    SystemSpec system_;
    std::vector<DriveTone> drives_;
    Mat h_static_;
    std::vector<Mat> quad_a_;  // (a + a^dag)/2 per tone target
    std::vector<Mat> quad_b_;  // i(a - a^dag)/2 per tone target
};

} // namespace sizzle
