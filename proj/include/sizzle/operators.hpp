#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sizzle/errors.hpp"

namespace sizzle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Dense complex operator on a tensor product of finite-level subsystems.
// dims holds the per-subsystem level counts; the matrix dimension is
// their product, ordered with subsystem 0 as the leftmost kron factor.
struct OperatorMatrix {
    std::vector<int> dims;
    Mat m;

    int dim() const { return static_cast<int>(m.rows()); }
    void validate() const;
};

// State of the open system. Same layout as OperatorMatrix; validate()
// additionally checks the density-matrix invariants.
struct DensityMatrix {
    std::vector<int> dims;
    Mat m;

    int dim() const { return static_cast<int>(m.rows()); }

    // Hermitian within 1e-10 (max norm), trace within 1e-9 of 1,
    // eigenvalues >= -1e-8.
    void validate() const;
};

int total_dim(const std::vector<int>& dims);

Mat kron(const Mat& a, const Mat& b);

// Lowering operator a on a single `levels`-dimensional oscillator.
Mat destroy(int levels);
Mat number_op(int levels);

// I x ... x op x ... x I with `op` acting on subsystem `which`.
Mat embed(const Mat& op, int which, const std::vector<int>& dims);

// Qubit Pauli embedded in the d-level computational subspace
// (top-left 2x2 block; all other levels untouched by I only for P=I).
// idx: 0=I, 1=X, 2=Y, 3=Z.
Mat pauli2(int idx);
Mat pauli_embedded(int idx, int levels);

// n-qubit Pauli P_{i0} x P_{i1} x ... embedded on multi-transmon dims.
// `code` indexes the lexicographic II..ZZ ordering (base-4 digits,
// subsystem 0 = most significant digit).
Mat pauli_string_embedded(int code, const std::vector<int>& dims);

// Trace out subsystem `which`, returning the operator on the rest.
Mat partial_trace(const Mat& m, int which, const std::vector<int>& dims);

// Project onto the computational (two lowest levels per subsystem)
// subspace: returns a 2^n x 2^n matrix. Trace lost to higher levels is
// simply dropped.
Mat project_computational(const Mat& m, const std::vector<int>& dims);

// Lift a 2^n x 2^n matrix into the full space (zeros elsewhere).
Mat embed_computational(const Mat& m, const std::vector<int>& dims);

// tr(rho * op) for Hermitian op. Throws on non-Hermitian op or
// mismatched dims; imaginary residue below 1e-9 is discarded.
double expectation(const DensityMatrix& rho, const OperatorMatrix& op);

bool is_hermitian(const Mat& m, double tol = 1e-10);

} // namespace sizzle
