#pragma once

#include <optional>

#include "sizzle/hamiltonian.hpp"

namespace sizzle {

// How T2* enters gamma_ph. The source formula gamma_ph = 1/T2* - 1/T1
// vanishes for T1 = T2*; whether T2* means pure-dephasing or total
// coherence time is ambiguous, so all three readings are available.
enum class DephasingModel {
    literal,        // gamma_ph = 1/T2* - 1/T1
    pure_dephasing, // gamma_ph = 1/T2*
    total_coherence // gamma_ph = 1/T2* - 1/(2 T1)
};

enum class CollapseMode { per_qubit, literal_collective };

// Rates for the structured fast path: one relaxation and one dephasing
// channel per transmon.
struct PerQubitRates {
    std::vector<double> gamma1;   // 1/T1 per transmon
    std::vector<double> gamma_ph; // per transmon
};

struct CollapseSet {
    std::vector<OperatorMatrix> operators;
    CollapseMode mode = CollapseMode::per_qubit;
    // Present when mode == per_qubit; lets the integrator apply the
    // dissipator in O(dim^2) without matrix products.
    std::optional<PerQubitRates> per_qubit;

    bool empty() const { return operators.empty(); }
};

// per_qubit mode emits sqrt(gamma1) a_i and sqrt(2 gamma_ph) n_i per
// transmon; literal_collective emits the summed forms
// sqrt(gamma1)(a_0+a_1) and sqrt(2 gamma_ph)(n_0+n_1). Operators with
// zero rate (or infinite T1/T2*) are omitted.
CollapseSet build_collapse_set(const SystemSpec& system, CollapseMode mode,
                               DephasingModel model = DephasingModel::literal);

enum class Integrator {
    magnus4, // commutator-free 4th-order exponential + Yoshida dissipator split
    rk4      // classical Runge-Kutta on the master equation
};

struct EvolveOptions {
    double dt = 0.1; // ns; must be <= 0.5
    Integrator integrator = Integrator::magnus4;
    // Validate density-matrix invariants on the result and abort on
    // mid-integration drift. Disable when evolving Pauli pseudo-states.
    bool check_density = true;
};

// Integrates d(rho)/dt = -i[H(t),rho] + sum_j (L_j rho L_j^dag
// - {L_j^dag L_j, rho}/2) over [t0, t1] with a fixed step.
DensityMatrix evolve(const DensityMatrix& rho0, const HamiltonianSchedule& schedule,
                     const CollapseSet& collapse, double t0, double t1,
                     const EvolveOptions& opt = {});

// Same flow for several operators at once; per-step propagator builds are
// shared. Inputs need not be density matrices (QPT feeds Pauli operators).
std::vector<Mat> evolve_batch(const std::vector<Mat>& inputs,
                              const HamiltonianSchedule& schedule,
                              const CollapseSet& collapse, double t0, double t1,
                              const EvolveOptions& opt = {});

// Closed-system paths.
Vec evolve_state(const Vec& psi0, const HamiltonianSchedule& schedule, double t0,
                 double t1, const EvolveOptions& opt = {});
Mat propagator(const HamiltonianSchedule& schedule, double t0, double t1,
               const EvolveOptions& opt = {});

// exp(-i tau H) for Hermitian H via eigendecomposition.
Mat expm_hermitian(const Mat& h, double tau);

} // namespace sizzle
