#pragma once

#include <unsupported/Eigen/MatrixFunctions>

#include "sizzle/lindblad.hpp"
#include "sizzle/units.hpp"

namespace sizzle::test {

inline TransmonSpec transmon_5000(double t1 = std::numeric_limits<double>::infinity(),
                                  double t2 = std::numeric_limits<double>::infinity()) {
    return TransmonSpec{mhz_to_radns(5000.0), -mhz_to_radns(250.0), 4, t1, t2};
}

inline SystemSpec single_qubit_system(const TransmonSpec& q,
                                      double frame_mhz = 5600.0) {
    SystemSpec s;
    s.transmons = {q};
    s.frame_freq = mhz_to_radns(frame_mhz);
    return s;
}

inline SystemSpec two_qubit_system(double d10_mhz, double g_mhz,
                                   double frame_mhz = 5600.0,
                                   double t1 = std::numeric_limits<double>::infinity(),
                                   double t2 = std::numeric_limits<double>::infinity()) {
    SystemSpec s;
    TransmonSpec q0{mhz_to_radns(5000.0), -mhz_to_radns(250.0), 4, t1, t2};
    const double w1 = 5000.0 + d10_mhz;
    TransmonSpec q1{mhz_to_radns(w1), -0.05 * mhz_to_radns(w1), 4, t1, t2};
    s.transmons = {q0, q1};
    s.couplings[{0, 1}] = mhz_to_radns(g_mhz);
    s.frame_freq = mhz_to_radns(frame_mhz);
    return s;
}

inline Vec basis_state(const std::vector<int>& dims, const std::vector<int>& occ) {
    int idx = 0;
    for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + occ[k];
    Vec v = Vec::Zero(total_dim(dims));
    v[idx] = 1.0;
    return v;
}

inline DensityMatrix pure_state(const std::vector<int>& dims, const Vec& psi) {
    return {dims, psi * psi.adjoint()};
}

// Dense Liouvillian in column-major vectorization; the independent
// oracle for evolve() (propagated with Eigen's matrix exponential).
inline Mat liouvillian(const Mat& h, const std::vector<Mat>& collapse) {
    const int d = static_cast<int>(h.rows());
    const Mat id = Mat::Identity(d, d);
    const cplx mi(0.0, -1.0);
    Mat l = mi * (kron(id, h) - kron(h.transpose(), id));
    for (const auto& c : collapse) {
        const Mat n = c.adjoint() * c;
        l += kron(c.conjugate(), c) -
             0.5 * (kron(id, n) + kron(n.transpose(), id));
    }
    return l;
}

inline Mat expm_propagate(const Mat& liouv, const Mat& rho0, double t) {
    const int d = static_cast<int>(rho0.rows());
    Mat lt = liouv * t;
    Mat el = lt.exp();
    Vec v = Eigen::Map<const Vec>(rho0.data(), d * d);
    Vec out = el * v;
    return Eigen::Map<const Mat>(out.data(), d, d);
}

} // namespace sizzle::test
