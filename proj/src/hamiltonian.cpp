#include "sizzle/hamiltonian.hpp"

#include <cmath>
#include <limits>

namespace sizzle {

OperatorMatrix build_static_hamiltonian(const SystemSpec& system) {
    system.validate();
    const auto dims = system.level_dims();
    const int d = total_dim(dims);
    Mat h = Mat::Zero(d, d);
    const int n = static_cast<int>(system.transmons.size());
    for (int i = 0; i < n; ++i) {
        const auto& q = system.transmons[i];
        const Mat a = destroy(q.levels);
        const Mat nop = number_op(q.levels);
        // a^dag^2 a^2 = n(n-1)
        const Mat kerr = nop * (nop - Mat::Identity(q.levels, q.levels));
        Mat local = (q.omega_ge - system.frame_freq) * nop + 0.5 * q.alpha * kerr;
        h += embed(local, i, dims);
    }
    for (const auto& [key, g] : system.couplings) {
        const auto [i, j] = key;
        const Mat ai = embed(destroy(dims[i]), i, dims);
        const Mat aj = embed(destroy(dims[j]), j, dims);
        const Mat ex = ai * aj.adjoint();
        h += g * (ex + ex.adjoint());
    }
    return {dims, std::move(h)};
}

OperatorMatrix build_drive_term(const DriveTone& drive, const SystemSpec& system,
                                double t) {
    const auto dims = system.level_dims();
    drive.validate(static_cast<int>(dims.size()));
    const int d = total_dim(dims);
    const double total = envelope_total(drive.envelope);
    if (t < 0.0 || t > total) return {dims, Mat::Zero(d, d)};

    const cplx i1(0.0, 1.0);
    const cplx c = envelope_value(drive.envelope, t) *
                   std::exp(i1 * (drive.phase_offset +
                                  (drive.carrier_freq - system.frame_freq) * t));
    const Mat a = embed(destroy(dims[drive.target]), drive.target, dims);
    Mat h = 0.5 * (std::conj(c) * a + c * a.adjoint());
    return {dims, std::move(h)};
}

HamiltonianSchedule::HamiltonianSchedule(SystemSpec system, std::vector<DriveTone> drives)
    : system_(std::move(system)), drives_(std::move(drives)) {
    h_static_ = build_static_hamiltonian(system_).m;
    const auto dims = system_.level_dims();
    for (const auto& dr : drives_) {
        dr.validate(static_cast<int>(dims.size()));
        const Mat a = embed(destroy(dims[dr.target]), dr.target, dims);
        quad_a_.push_back(0.5 * (a + Mat(a.adjoint())));
        quad_b_.push_back(0.5 * cplx(0.0, 1.0) * (a - Mat(a.adjoint())));
    }
}

void HamiltonianSchedule::hamiltonian_into(double t, Mat& h) const {
    hamiltonian_into_ref(t, t, h);
}

void HamiltonianSchedule::hamiltonian_into_ref(double t, double t_ref, Mat& h) const {
    h = h_static_;
    const cplx i1(0.0, 1.0);
    for (size_t k = 0; k < drives_.size(); ++k) {
        const auto& dr = drives_[k];
        const cplx c = envelope_piece_value(dr.envelope, t_ref, t) *
                       std::exp(i1 * (dr.phase_offset +
                                      (dr.carrier_freq - system_.frame_freq) * t));
        // (c a + c* a^dag)/2 = Re(c)(a+a^dag)/2 + Im(c) i(a-a^dag)/2
        if (c != cplx(0.0, 0.0)) h += c.real() * quad_a_[k] + c.imag() * quad_b_[k];
    }
}

Mat HamiltonianSchedule::hamiltonian(double t) const {
    Mat h;
    hamiltonian_into(t, h);
    return h;
}

bool HamiltonianSchedule::constant_on(double t0, double t1) const {
    if (t1 < t0) std::swap(t0, t1);
    for (const auto& dr : drives_) {
        const double total = envelope_total(dr.envelope);
        if (t0 >= total || t1 <= 0.0) continue; // no support in window
        if (t0 < 0.0 || t1 > total) return false;
        if (!envelope_constant_on(dr.envelope, t0, t1)) return false;
        const bool zero_amp = std::abs(envelope_value(dr.envelope, 0.5 * (t0 + t1))) == 0.0;
        if (!zero_amp && dr.carrier_freq != system_.frame_freq) return false;
    }
    return true;
}

double HamiltonianSchedule::next_breakpoint(double t) const {
    double bp = std::numeric_limits<double>::infinity();
    auto consider = [&](double x) {
        if (x > t + 1e-12 && x < bp) bp = x;
    };
    for (const auto& dr : drives_) {
        const double total = envelope_total(dr.envelope);
        consider(0.0);
        consider(total);
        if (const auto* r = std::get_if<RcftDragEnvelope>(&dr.envelope)) {
            consider(r->ramp);
            consider(r->total - r->ramp);
        }
    }
    return bp;
}

} // namespace sizzle
