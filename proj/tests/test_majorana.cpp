#include <doctest.h>

#include <random>

#include "lustab/builtins.hpp"
#include "lustab/local_ops.hpp"
#include "lustab/majorana.hpp"

using namespace lustab;

namespace {

PureState random_symmetric(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    DickeCoefficients d{n, Vec(n + 1)};
    for (int k = 0; k <= n; ++k) d.d[k] = Complex(gauss(rng), gauss(rng));
    return dicke_reconstruct(d);
}

}  // namespace

TEST_CASE("bloch vectors of the named states") {
    CHECK((bloch_vector(named_qubit_state('a')) - Eigen::Vector3d(0, 0, 1)).norm() < 1e-14);
    CHECK((bloch_vector(named_qubit_state('b')) - Eigen::Vector3d(0, 0, -1)).norm() < 1e-14);
    CHECK((bloch_vector(named_qubit_state('c')) - Eigen::Vector3d(1, 0, 0)).norm() < 1e-14);
    CHECK((bloch_vector(named_qubit_state('f')) - Eigen::Vector3d(0, 1, 0)).norm() < 1e-14);
    CHECK((bloch_vector(named_qubit_state('g')) - Eigen::Vector3d(-1, 0, 0)).norm() < 1e-14);
    CHECK((bloch_vector(named_qubit_state('h')) - Eigen::Vector3d(0, -1, 0)).norm() < 1e-14);
}

TEST_CASE("symmetrize agrees with the explicit permutation sum") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> gauss;
    for (int n = 2; n <= 5; ++n) {
        std::vector<SingleQubitState> phis;
        for (int j = 0; j < n; ++j) {
            phis.push_back({Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng))});
        }
        const PureState fast = symmetrize(phis);
        // brute force over all n! orderings
        Vec slow = Vec::Zero(std::int64_t{1} << n);
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) order[static_cast<std::size_t>(j)] = j;
        do {
            for (std::int64_t i = 0; i < slow.size(); ++i) {
                Complex term = 1.0;
                for (int k = 0; k < n; ++k) {
                    const auto& phi = phis[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
                    term *= ((i >> (n - 1 - k)) & 1) ? phi.beta : phi.alpha;
                }
                slow[i] += term;
            }
        } while (std::next_permutation(order.begin(), order.end()));
        CHECK((fast.amp - slow).norm() < 1e-10 * slow.norm());
    }
}

TEST_CASE("dicke states have pole roots with the right multiplicities") {
    const MajoranaConfiguration config = majorana_roots(dicke_state(5, 2));
    REQUIRE(config.points.size() == 2);
    CHECK(config.total() == 5);
    for (const auto& p : config.points) {
        if (p.dir.z() > 0) {
            CHECK((p.dir - Eigen::Vector3d(0, 0, 1)).norm() < 1e-9);
            CHECK(p.multiplicity == 3);  // n-k factors of |0>
        } else {
            CHECK((p.dir - Eigen::Vector3d(0, 0, -1)).norm() < 1e-9);
            CHECK(p.multiplicity == 2);
        }
    }
}

TEST_CASE("majorana round trip on random symmetric states") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 6;
        const PureState psi = random_symmetric(n, rng);
        const auto states = majorana_states(psi);
        REQUIRE(static_cast<int>(states.size()) == n);
        const PureState rebuilt = symmetrize(states);
        CHECK(fidelity(psi.amp, rebuilt.amp) > 1.0 - 1e-8);
    }
}

TEST_CASE("majorana rejects asymmetric input") {
    Vec amp = Vec::Zero(4);
    amp[1] = 1.0;
    CHECK_THROWS_AS(majorana_states(PureState(2, amp)), NotSymmetricError);
}

TEST_CASE("octahedron state has six octahedral points") {
    const MajoranaConfiguration config = majorana_roots(builtin_state("tau"));
    REQUIRE(config.points.size() == 6);
    for (const auto& p : config.points) {
        CHECK(p.multiplicity == 1);
        int axis_hits = 0;
        for (int d = 0; d < 3; ++d) {
            if (std::abs(std::abs(p.dir[d]) - 1.0) < 1e-9) ++axis_hits;
        }
        CHECK(axis_hits == 1);  // a coordinate-axis unit vector
    }
}

TEST_CASE("equivariance: rotating the state rotates the points") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> gauss;
    const PureState psi = random_symmetric(4, rng);
    // g = exp(i pi/5 X)-ish fixed rotation
    Eigen::Vector4d q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    q.normalize();
    Mat2 g;
    g << Complex(q[0], -q[3]), Complex(-q[2], -q[1]), Complex(q[2], -q[1]), Complex(q[0], q[3]);
    LocalUnitaryElement u;
    u.site.assign(4, g);
    const Eigen::Matrix3d r = Eigen::Quaterniond(q[0], q[1], q[2], q[3]).toRotationMatrix();

    const MajoranaConfiguration before = majorana_roots(psi);
    const MajoranaConfiguration after = majorana_roots(apply_group(u, psi));
    REQUIRE(before.points.size() == after.points.size());
    for (const auto& p : before.points) {
        const Eigen::Vector3d image = r * p.dir;
        bool found = false;
        for (const auto& s : after.points) {
            if ((s.dir - image).norm() < 1e-6 && s.multiplicity == p.multiplicity) found = true;
        }
        CHECK(found);
    }
}
