#include "sizzle/operators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace sizzle {

int total_dim(const std::vector<int>& dims) {
    int d = 1;
    for (int k : dims) d *= k;
    return d;
}

void OperatorMatrix::validate() const {
    if (m.rows() != m.cols()) throw error("operator matrix not square");
    if (m.rows() != total_dim(dims))
        throw error("operator dimension does not match product of dims");
}

void DensityMatrix::validate() const {
    if (m.rows() != m.cols() || m.rows() != total_dim(dims))
        throw error("density matrix dimension mismatch");
    if (!is_hermitian(m, 1e-10))
        throw error("density matrix not Hermitian within 1e-10");
    if (std::abs(m.trace().real() - 1.0) > 1e-9 || std::abs(m.trace().imag()) > 1e-9)
        throw error("density matrix trace deviates from 1 beyond 1e-9");
    Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw error("density matrix has eigenvalue below -1e-8");
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat destroy(int levels) {
    Mat a = Mat::Zero(levels, levels);
    for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

Mat number_op(int levels) {
    Mat n = Mat::Zero(levels, levels);
    for (int k = 0; k < levels; ++k) n(k, k) = double(k);
    return n;
}

Mat embed(const Mat& op, int which, const std::vector<int>& dims) {
    if (which < 0 || which >= static_cast<int>(dims.size()))
        throw error("embed: subsystem index out of range");
    if (op.rows() != dims[which])
        throw error("embed: operator dimension does not match subsystem");
    Mat out = which == 0 ? op : Mat(Mat::Identity(dims[0], dims[0]));
    if (which == 0 && dims.size() == 1) return out;
    for (size_t k = 1; k < dims.size(); ++k) {
        const Mat& factor = (static_cast<int>(k) == which)
                                ? op
                                : Mat(Mat::Identity(dims[k], dims[k]));
        out = kron(out, factor);
    }
    return out;
}

Mat pauli2(int idx) {
    Mat p(2, 2);
    const cplx i(0.0, 1.0);
    switch (idx) {
        case 0: p << 1, 0, 0, 1; break;
        case 1: p << 0, 1, 1, 0; break;
        case 2: p << 0, -i, i, 0; break;
        case 3: p << 1, 0, 0, -1; break;
        default: throw error("pauli index must be 0..3");
    }
    return p;
}

Mat pauli_embedded(int idx, int levels) {
    Mat p = Mat::Zero(levels, levels);
    p.topLeftCorner(2, 2) = pauli2(idx);
    if (idx == 0)
        for (int k = 2; k < levels; ++k) p(k, k) = 1.0;
    return p;
}

Mat pauli_string_embedded(int code, const std::vector<int>& dims) {
    const int n = static_cast<int>(dims.size());
    std::vector<int> digits(n);
    int c = code;
    for (int k = n - 1; k >= 0; --k) {
        digits[k] = c % 4;
        c /= 4;
    }
    if (c != 0) throw error("pauli string code out of range");
    Mat out = pauli_embedded(digits[0], dims[0]);
    for (int k = 1; k < n; ++k) out = kron(out, pauli_embedded(digits[k], dims[k]));
    return out;
}

Mat partial_trace(const Mat& m, int which, const std::vector<int>& dims) {
    const int n = static_cast<int>(dims.size());
    if (which < 0 || which >= n) throw error("partial_trace: bad subsystem");
    int dl = 1, dr = 1;
    for (int k = 0; k < which; ++k) dl *= dims[k];
    for (int k = which + 1; k < n; ++k) dr *= dims[k];
    const int dt = dims[which];
    Mat out = Mat::Zero(dl * dr, dl * dr);
    for (int il = 0; il < dl; ++il)
        for (int jl = 0; jl < dl; ++jl)
            for (int ir = 0; ir < dr; ++ir)
                for (int jr = 0; jr < dr; ++jr) {
                    cplx s = 0.0;
                    for (int t = 0; t < dt; ++t)
                        s += m((il * dt + t) * dr + ir, (jl * dt + t) * dr + jr);
                    out(il * dr + ir, jl * dr + jr) = s;
                }
    return out;
}

namespace {

// Row indices of the computational-basis states in the full space.
std::vector<int> computational_indices(const std::vector<int>& dims) {
    std::vector<int> idx{0};
    for (int d : dims) {
        std::vector<int> next;
        next.reserve(idx.size() * 2);
        for (int base : idx)
            for (int b = 0; b < 2; ++b) next.push_back(base * d + b);
        idx = std::move(next);
    }
    return idx;
}

} // namespace

Mat project_computational(const Mat& m, const std::vector<int>& dims) {
    const auto idx = computational_indices(dims);
    const int n = static_cast<int>(idx.size());
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m(idx[i], idx[j]);
    return out;
}

Mat embed_computational(const Mat& m, const std::vector<int>& dims) {
    const auto idx = computational_indices(dims);
    const int n = static_cast<int>(idx.size());
    if (m.rows() != n) throw error("embed_computational: size mismatch");
    Mat out = Mat::Zero(total_dim(dims), total_dim(dims));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(idx[i], idx[j]) = m(i, j);
    return out;
}

bool is_hermitian(const Mat& m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double expectation(const DensityMatrix& rho, const OperatorMatrix& op) {
    if (rho.dims != op.dims) throw error("expectation: dims mismatch");
    if (!is_hermitian(op.m, 1e-10)) throw error("expectation: non-Hermitian operator");
    const cplx v = (rho.m * op.m).trace();
    if (std::abs(v.imag()) > 1e-9)
        throw error("expectation: imaginary residue above 1e-9");
    return v.real();
}

} // namespace sizzle
