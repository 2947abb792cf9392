#include <doctest.h>

#include <random>
#include <sstream>

#include "lustab/state.hpp"

using namespace lustab;

TEST_CASE("weight and bit formatting") {
    CHECK(weight(0b0101u) == 2);
    CHECK(format_bits(0b011u, 3) == "011");
    CHECK(parse_bits("1010") == 0b1010u);
    CHECK_THROWS_AS(parse_bits("10a"), ParseError);
}

TEST_CASE("zero state rejected") {
    CHECK_THROWS_AS(PureState(2, Vec::Zero(4)), DimensionMismatchError);
    Vec wrong = Vec::Zero(3);
    wrong[0] = 1.0;
    CHECK_THROWS_AS(PureState(2, wrong), DimensionMismatchError);
}

TEST_CASE("dicke states") {
    const PureState d42 = dicke_state(4, 2);
    int support = 0;
    for (std::int64_t i = 0; i < d42.amp.size(); ++i) {
        if (std::abs(d42.amp[i]) > 0) {
            CHECK(weight(static_cast<MultiIndex>(i)) == 2);
            CHECK(d42.amp[i] == Complex(1.0, 0.0));
            ++support;
        }
    }
    CHECK(support == 6);
    CHECK_THROWS_AS(dicke_state(3, 4), DimensionMismatchError);
}

TEST_CASE("symmetry detection") {
    CHECK(is_symmetric(dicke_state(5, 2)));
    Vec amp = Vec::Zero(8);
    amp[1] = 1.0;  // |001>
    CHECK_FALSE(is_symmetric(PureState(3, amp)));
}

TEST_CASE("dicke expansion round trip") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    for (int n = 2; n <= 7; ++n) {
        DickeCoefficients d{n, Vec(n + 1)};
        for (int k = 0; k <= n; ++k) d.d[k] = Complex(gauss(rng), gauss(rng));
        const PureState psi = dicke_reconstruct(d);
        const DickeCoefficients back = dicke_expand(psi);
        CHECK((back.d - d.d).norm() < 1e-12 * d.d.norm());
    }
}

TEST_CASE("dicke expansion rejects asymmetric input") {
    Vec amp = Vec::Zero(4);
    amp[1] = 1.0;
    amp[2] = 2.0;
    CHECK_THROWS_AS(dicke_expand(PureState(2, amp)), NotSymmetricError);
}

TEST_CASE("permutations") {
    Vec amp = Vec::Zero(8);
    amp[parse_bits("011")] = 1.0;
    const PureState psi(3, amp);
    const PureState swapped = swap_qubits(psi, 1, 3);
    CHECK(std::abs(swapped.amp[parse_bits("110")] - Complex(1.0, 0.0)) < 1e-15);
    // cycle 1->2->3->1
    const PureState cycled = permute_qubits(psi, {2, 3, 1});
    CHECK(std::abs(cycled.amp[parse_bits("101")] - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("fidelity ignores scale and phase") {
    Vec u = Vec::Zero(2), v = Vec::Zero(2);
    u[0] = 1.0;
    v[0] = Complex(0.0, 3.0);
    CHECK(fidelity(u, v) == doctest::Approx(1.0));
    v[0] = 0.0;
    v[1] = 1.0;
    CHECK(fidelity(u, v) == doctest::Approx(0.0));
}

TEST_CASE("state file round trip") {
    const PureState psi = dicke_state(3, 1);
    std::stringstream buffer;
    write_state(buffer, psi);
    const PureState back = read_state(buffer);
    CHECK(back.n == 3);
    CHECK((back.amp - psi.amp).norm() < 1e-12);
}

TEST_CASE("state file parsing errors") {
    {
        std::stringstream bad("n=2\nformat=dense\n01 1 0\n01 2 0\n");
        CHECK_THROWS_AS(read_state(bad), ParseError);
    }
    {
        std::stringstream bad("format=dense\n01 1 0\n");
        CHECK_THROWS_AS(read_state(bad), ParseError);
    }
    {
        std::stringstream dicke("n=4\nformat=dicke\n2 1 0\n");
        const PureState psi = read_state(dicke);
        CHECK((psi.amp - dicke_state(4, 2).amp).norm() < 1e-12);
    }
}
