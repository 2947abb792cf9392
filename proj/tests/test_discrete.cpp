#include <doctest.h>

#include <numbers>
#include <random>

#include "lustab/builtins.hpp"
#include "lustab/discrete.hpp"

using namespace lustab;

namespace {

const Complex kI{0.0, 1.0};

Rotation axis_angle(const Eigen::Vector3d& axis, double angle) {
    return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

}  // namespace

TEST_CASE("su2 lift round trip") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::Vector3d axis(gauss(rng), gauss(rng), gauss(rng));
        const double angle = 2.0 * std::numbers::pi * (trial + 1) / 23.0;
        const Rotation r = axis_angle(axis, angle);
        const Mat2 g = su2_from_rotation(r);
        CHECK(std::abs(g.determinant() - Complex(1.0, 0.0)) < 1e-12);
        CHECK((rotation_from_su2(g) - r).norm() < 1e-10);
        CHECK((rotation_from_su2(Mat2(-g)) - r).norm() < 1e-10);  // sign-blind
    }
    // rotation about z by angle acts as diag(e^{-i a/2}, e^{i a/2}) up to sign
    const Mat2 gz = su2_from_rotation(axis_angle({0, 0, 1}, 0.8));
    CHECK(std::abs(gz(0, 1)) < 1e-14);
    CHECK(std::abs(gz(0, 0) - std::polar(1.0, -0.4)) < 1e-12);
}

TEST_CASE("rotation candidates of simple configurations") {
    {
        // equilateral triangle on the equator: dihedral(3) has 6 rotations
        MajoranaConfiguration config;
        for (int j = 0; j < 3; ++j) {
            const double a = 2.0 * std::numbers::pi * j / 3.0;
            config.points.push_back({{std::cos(a), std::sin(a), 0.0}, 1});
        }
        CHECK(rotation_candidates(config).size() == 6);
    }
    {
        // octahedron: full rotation group has order 24
        MajoranaConfiguration config;
        for (int d = 0; d < 3; ++d) {
            for (double s : {1.0, -1.0}) {
                config.points.push_back({s * Eigen::Vector3d::Unit(d), 1});
            }
        }
        CHECK(rotation_candidates(config).size() == 24);
    }
    {
        // multiplicities break symmetry: only the identity survives
        MajoranaConfiguration config;
        config.points.push_back({{0, 0, 1}, 2});
        config.points.push_back({{1, 0, 0}, 1});
        CHECK(rotation_candidates(config).size() == 1);
    }
}

TEST_CASE("degenerate configurations are rejected") {
    {
        MajoranaConfiguration config;
        config.points.push_back({{0, 0, 1}, 4});
        CHECK_THROWS_AS(rotation_candidates(config), DegenerateConfigurationError);
    }
    {
        MajoranaConfiguration config;
        config.points.push_back({{0, 0, 1}, 2});
        config.points.push_back({{0, 0, -1}, 2});
        CHECK_THROWS_AS(rotation_candidates(config), DegenerateConfigurationError);
    }
}

TEST_CASE("lift_and_verify accepts XXX on the isoceles state") {
    const PureState psi = builtin_state("isoceles");
    // pi rotation about x lifts to -iX per qubit; phase absorbs the sign
    const Rotation r = axis_angle({1, 0, 0}, std::numbers::pi);
    const auto lift = lift_and_verify(psi, r);
    REQUIRE(lift.has_value());
    LocalUnitaryElement u;
    u.phase = lift->first;
    u.site.assign(3, lift->second);
    CHECK((apply_group(u, psi).amp - psi.amp).norm() < 1e-9 * psi.norm());
    // a generic rotation does not stabilize
    CHECK_FALSE(lift_and_verify(psi, axis_angle({1, 2, 3}, 1.0)).has_value());
}

TEST_CASE("group identification") {
    std::vector<Rotation> rotations{Rotation::Identity()};
    CHECK(identify_group(rotations).str() == "trivial");
    rotations.push_back(axis_angle({1, 0, 0}, std::numbers::pi));
    CHECK(identify_group(rotations).str() == "cyclic(2)");
    // dihedral(2): pi about x, y, z
    rotations.push_back(axis_angle({0, 1, 0}, std::numbers::pi));
    rotations.push_back(axis_angle({0, 0, 1}, std::numbers::pi));
    const GroupLabel d2 = identify_group(rotations);
    CHECK(d2.cls == GroupClass::Dihedral);
    CHECK(d2.k == 2);
}

TEST_CASE("finite stabilizer of the worked states") {
    {
        const FiniteStabilizerReport report = finite_stabilizer(builtin_state("tau"));
        CHECK(report.order == 24);
        CHECK(report.label.cls == GroupClass::Octahedral);
        for (const auto& e : report.elements) {
            LocalUnitaryElement u;
            u.phase = e.phase;
            u.site.assign(6, e.g);
            const PureState psi = builtin_state("tau");
            CHECK((apply_group(u, psi).amp - psi.amp).norm() < 1e-8 * psi.norm());
            CHECK((rotation_from_su2(e.g) - e.rotation).norm() < 1e-8);
        }
    }
    {
        // regression: the isoceles stabilizer is exactly the order-2 group
        const FiniteStabilizerReport report = finite_stabilizer(builtin_state("isoceles"));
        CHECK(report.order == 2);
        CHECK(report.label.cls == GroupClass::Cyclic);
        CHECK(report.label.k == 2);
    }
    {
        // regression: the four-point state built from a, d, e, f
        const FiniteStabilizerReport report = finite_stabilizer(builtin_state("phi-prime"));
        CHECK(report.order == 3);
        CHECK(report.label.cls == GroupClass::Cyclic);
        CHECK(report.label.k == 3);
    }
}
