#include <doctest.h>

#include "helpers.hpp"
#include "sizzle/operators.hpp"

using namespace sizzle;

TEST_CASE("kron dimensions and values") {
    Mat a(2, 2), b(2, 2);
    a << 1, 2, 3, 4;
    b << 0, 1, 1, 0;
    Mat k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k(0, 1) == cplx(1, 0));
    CHECK(k(2, 3) == cplx(4, 0));
}

TEST_CASE("destroy and number operators") {
    Mat a = destroy(4);
    CHECK(a(0, 1) == cplx(1, 0));
    CHECK(a(2, 3).real() == doctest::Approx(std::sqrt(3.0)));
    Mat n = number_op(4);
    CHECK(((a.adjoint() * a) - n).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("embedding acts on the right subsystem") {
    std::vector<int> dims{4, 4};
    Mat a1 = embed(destroy(4), 1, dims);
    // |0,1> -> |0,0>
    Vec v = test::basis_state(dims, {0, 1});
    Vec w = a1 * v;
    CHECK(std::abs(w[0] - cplx(1, 0)) < 1e-14);
}

TEST_CASE("pauli strings embedded in transmon space") {
    std::vector<int> dims{4, 4};
    // code 3 = IZ, code 12 = ZI in lexicographic I,X,Y,Z base-4 order
    Mat iz = pauli_string_embedded(3, dims);
    Vec v = test::basis_state(dims, {0, 1});
    CHECK(std::abs((v.adjoint() * iz * v)(0, 0).real() + 1.0) < 1e-14);
    Mat zi = pauli_string_embedded(12, dims);
    CHECK(std::abs((v.adjoint() * zi * v)(0, 0).real() - 1.0) < 1e-14);
}

TEST_CASE("partial trace of a product state") {
    std::vector<int> dims{4, 4};
    Vec v0 = test::basis_state({4}, {1});
    Vec v1 = test::basis_state({4}, {2});
    Mat rho = kron(v0 * v0.adjoint(), v1 * v1.adjoint());
    Mat r0 = partial_trace(rho, 1, dims);
    CHECK(std::abs(r0(1, 1) - cplx(1, 0)) < 1e-14);
    Mat r1 = partial_trace(rho, 0, dims);
    CHECK(std::abs(r1(2, 2) - cplx(1, 0)) < 1e-14);
}

TEST_CASE("computational projection round trip") {
    std::vector<int> dims{4, 4};
    Mat m = Mat::Random(4, 4);
    m = (m + Mat(m.adjoint())).eval();
    Mat full = embed_computational(m, dims);
    Mat back = project_computational(full, dims);
    CHECK((back - m).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("expectation examples") {
    std::vector<int> dims{4};
    // rho = |g><g|, op = Z -> +1
    DensityMatrix rho = test::pure_state(dims, test::basis_state(dims, {0}));
    OperatorMatrix z{dims, pauli_embedded(3, 4)};
    CHECK(expectation(rho, z) == doctest::Approx(1.0));

    // rho = |+><+|, op = X -> +1
    Vec plus = (test::basis_state(dims, {0}) + test::basis_state(dims, {1})) / std::sqrt(2.0);
    DensityMatrix rp = test::pure_state(dims, plus);
    OperatorMatrix x{dims, pauli_embedded(1, 4)};
    CHECK(expectation(rp, x) == doctest::Approx(1.0));

    // rho = I/4 on two qubits, any traceless op -> 0
    std::vector<int> dims2{4, 4};
    Mat eye = embed_computational(Mat::Identity(4, 4) / 4.0, dims2);
    DensityMatrix mixed{dims2, eye};
    OperatorMatrix zz{dims2, pauli_string_embedded(15, dims2)};
    CHECK(expectation(mixed, zz) == doctest::Approx(0.0));

    // non-Hermitian op rejected
    OperatorMatrix bad{dims, destroy(4)};
    CHECK_THROWS_AS(expectation(rho, bad), error);
}

TEST_CASE("density matrix invariants enforced") {
    std::vector<int> dims{4};
    DensityMatrix ok = test::pure_state(dims, test::basis_state(dims, {0}));
    CHECK_NOTHROW(ok.validate());

    DensityMatrix bad_trace{dims, 2.0 * ok.m};
    CHECK_THROWS_AS(bad_trace.validate(), error);

    Mat nh = ok.m;
    nh(0, 1) = cplx(0.5, 0.5);
    DensityMatrix not_herm{dims, nh};
    CHECK_THROWS_AS(not_herm.validate(), error);
}
