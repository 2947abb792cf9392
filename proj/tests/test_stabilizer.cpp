#include <doctest.h>

#include <random>

#include "lustab/builtins.hpp"
#include "lustab/stabilizer.hpp"

using namespace lustab;

namespace {

PureState ghz_ab(int n, double a, double b) {
    Vec amp = Vec::Zero(std::int64_t{1} << n);
    amp[0] = a;
    amp[amp.size() - 1] = b;
    return PureState(n, std::move(amp));
}

}  // namespace

TEST_CASE("nullspace dimensions for the canonical families") {
    CHECK(stabilizer_algebra(builtin_state("product:3")).dim == 3);
    CHECK(stabilizer_algebra(ghz_ab(4, 1.0, 1.0)).dim == 3);
    CHECK(stabilizer_algebra(ghz_ab(4, 2.0, 1.0)).dim == 3);
    CHECK(stabilizer_algebra(builtin_state("singlet")).dim == 3);
    CHECK(stabilizer_algebra(dicke_state(5, 2)).dim == 1);
    CHECK(stabilizer_algebra(builtin_state("isoceles")).dim == 0);
}

TEST_CASE("basis annihilates the state") {
    for (const char* name : {"product:4", "singlet", "phi", "tau"}) {
        const PureState psi = builtin_state(name);
        const StabilizerAlgebra algebra = stabilizer_algebra(psi);
        CHECK(algebra.residual < 1e-10);
        for (const auto& m : algebra.basis) {
            CHECK(apply_algebra(m, psi).norm() < 1e-10 * psi.norm());
        }
        CHECK((algebra.coords.transpose() * algebra.coords -
               Eigen::MatrixXd::Identity(algebra.dim, algebra.dim))
                  .norm() < 1e-12);
    }
}

TEST_CASE("projection dimensions") {
    const StabilizerAlgebra singlet = stabilizer_algebra(builtin_state("singlet"));
    CHECK(projection_dim(singlet, 1) == 3);
    CHECK(projection_dim(singlet, 2) == 3);
    const StabilizerAlgebra product = stabilizer_algebra(builtin_state("product:3"));
    for (int q = 1; q <= 3; ++q) CHECK(projection_dim(product, q) == 1);
    const StabilizerAlgebra phi = stabilizer_algebra(builtin_state("phi"));
    for (int q = 1; q <= 3; ++q) CHECK(projection_dim(phi, q) == 1);
}

TEST_CASE("decomposition splits blocks and residuals") {
    {
        const StabilizerAlgebra algebra = stabilizer_algebra(builtin_state("singlet"));
        const StabilizerDecomposition d = decompose(algebra);
        REQUIRE(d.blocks.size() == 1);
        CHECK(d.blocks[0] == std::vector<int>{1, 2});
        CHECK(d.r1_qubits.empty());
        CHECK(d.r0_qubits.empty());
    }
    {
        const StabilizerAlgebra algebra = stabilizer_algebra(builtin_state("product:4"));
        const StabilizerDecomposition d = decompose(algebra);
        CHECK(d.blocks.empty());
        CHECK(d.r1_qubits == std::vector<int>{1, 2, 3, 4});
        CHECK(d.r0_qubits.empty());
    }
    {
        // singlet x singlet: two blocks
        const PureState s = builtin_state("singlet");
        Vec amp = Vec::Zero(16);
        for (std::int64_t i = 0; i < 4; ++i) {
            for (std::int64_t j = 0; j < 4; ++j) amp[(i << 2) | j] = s.amp[i] * s.amp[j];
        }
        const StabilizerAlgebra algebra = stabilizer_algebra(PureState(4, amp));
        const StabilizerDecomposition d = decompose(algebra);
        REQUIRE(d.blocks.size() == 2);
        CHECK(d.blocks[0] == std::vector<int>{1, 2});
        CHECK(d.blocks[1] == std::vector<int>{3, 4});
    }
    {
        // isoceles: everything lands in R0
        const StabilizerAlgebra algebra = stabilizer_algebra(builtin_state("isoceles"));
        const StabilizerDecomposition d = decompose(algebra);
        CHECK(d.blocks.empty());
        CHECK(d.r1_qubits.empty());
        CHECK(d.r0_qubits == std::vector<int>{1, 2, 3});
    }
}

TEST_CASE("block elements have full weight") {
    const StabilizerAlgebra algebra = stabilizer_algebra(builtin_state("singlet"));
    CHECK(check_block_full_weight(algebra, {1, 2}, 20));
}

TEST_CASE("full-weight check rejects a hand-built counterexample") {
    // span{ su(2) on qubit 1 } pretending to be a block on {1,2}: every
    // element misses qubit 2.
    StabilizerAlgebra fake;
    fake.n = 2;
    fake.dim = 3;
    fake.coords = Eigen::MatrixXd::Zero(7, 3);
    for (int j = 0; j < 3; ++j) {
        AlgebraElement m = AlgebraElement::zero(2);
        m.site[0] = Eigen::Vector3d::Unit(j);
        fake.basis.push_back(m);
        fake.coords(1 + j, j) = 1.0;
    }
    CHECK_FALSE(check_block_full_weight(fake, {1, 2}, 20));
}

TEST_CASE("principal angles") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    Eigen::MatrixXd b = a;
    CHECK(max_principal_angle(a, b) < 1e-12);
    b(1, 1) = 0.0;
    b(2, 1) = 1.0;
    CHECK(max_principal_angle(a, b) == doctest::Approx(M_PI / 2.0));
    // unequal dimensions
    CHECK(max_principal_angle(a, a.leftCols(1)) == doctest::Approx(M_PI / 2.0));
}

TEST_CASE("covariance under a product of Paulis") {
    // conjugating the state permutes the algebra coherently
    const PureState psi = builtin_state("phi");
    LocalUnitaryElement u = LocalUnitaryElement::identity(3);
    u.site[0] = Complex(0.0, 1.0) * pauli_x();
    const StabilizerAlgebra before = stabilizer_algebra(psi);
    const StabilizerAlgebra after = stabilizer_algebra(apply_group(u, psi));
    CHECK(before.dim == after.dim);
    Eigen::MatrixXd conj_coords(10, before.dim);  // 3n+1 rows at n = 3
    for (int j = 0; j < before.dim; ++j) {
        conj_coords.col(j) =
            algebra_coords(conjugate(u, before.basis[static_cast<std::size_t>(j)]));
    }
    CHECK(max_principal_angle(conj_coords, after.coords) < 1e-7);
}
