#include <doctest.h>

#include <set>

#include "lustab/chords.hpp"

using namespace lustab;

TEST_CASE("partition validation and formatting") {
    const PairPartition p({{2, 3}, {1, 4}});
    CHECK(p.str() == "1-4,2-3");
    CHECK(parse_partition("1-4,2-3") == p);
    CHECK_THROWS_AS(PairPartition({{1, 2}, {2, 3}}), ParseError);  // reused label
    CHECK_THROWS_AS(PairPartition({{1, 3}, {2, 5}}), ParseError);  // not 1..2m
    CHECK_THROWS_AS(parse_partition("1-4"), ParseError);
}

TEST_CASE("crossing detection") {
    CHECK_FALSE(has_crossing(parse_partition("1-2,3-4")));
    CHECK_FALSE(has_crossing(parse_partition("1-4,2-3")));
    CHECK(has_crossing(parse_partition("1-3,2-4")));
}

TEST_CASE("noncrossing enumeration matches Catalan numbers") {
    const int catalan[5] = {1, 1, 2, 5, 14};
    for (int m = 1; m <= 4; ++m) {
        const auto list = enumerate_noncrossing(m);
        CHECK(static_cast<int>(list.size()) == catalan[m]);
        std::set<PairPartition> unique(list.begin(), list.end());
        CHECK(unique.size() == list.size());
        for (const auto& p : list) CHECK_FALSE(has_crossing(p));
        // brute-force cross-check
        int count = 0;
        for (const auto& p : enumerate_all_matchings(m)) {
            if (!has_crossing(p)) ++count;
        }
        CHECK(count == catalan[m]);
    }
    CHECK(enumerate_all_matchings(3).size() == 15);  // (2m-1)!!
}

TEST_CASE("singlet products") {
    {
        const PureState s = singlet_product(parse_partition("1-2"));
        CHECK(std::abs(s.amp[parse_bits("01")] - Complex(1.0, 0.0)) < 1e-15);
        CHECK(std::abs(s.amp[parse_bits("10")] + Complex(1.0, 0.0)) < 1e-15);
    }
    {
        // sign structure: amplitude at the leading index is +1, the string
        // with every chord reversed carries (-1)^m
        for (const char* text : {"1-2,3-4", "1-4,2-3", "1-2,3-6,4-5"}) {
            const PairPartition p = parse_partition(text);
            const PureState s = singlet_product(p);
            const auto [lead, complement] = leading_index(p);
            CHECK(std::abs(s.amp[static_cast<std::int64_t>(lead)] - Complex(1.0, 0.0)) < 1e-15);
            const double sign = (p.m() % 2 == 0) ? 1.0 : -1.0;
            CHECK(std::abs(s.amp[static_cast<std::int64_t>(complement)] - Complex(sign, 0.0)) <
                  1e-15);
        }
    }
}

TEST_CASE("leading index") {
    const auto [lead, complement] = leading_index(parse_partition("1-4,2-3"));
    // 0 on the lower endpoints 1 and 2, 1 on the upper endpoints 3 and 4
    CHECK(format_bits(lead, 4) == "0011");
    CHECK(format_bits(complement, 4) == "1100");
    CHECK_THROWS_AS(leading_index(parse_partition("1-3,2-4")), ParseError);
}

TEST_CASE("leading-index structure is triangular in dictionary order") {
    // s_Q can hit |I_P> for Q != P (both orderings of {1-2,3-4} and
    // {1-4,2-3} share |0101>), but only with I_Q strictly below I_P; the
    // diagonal entry is always +1. This is what makes the coefficients
    // recoverable by forward substitution.
    for (int m = 2; m <= 4; ++m) {
        const auto list = enumerate_noncrossing(m);
        for (const auto& p : list) {
            const auto [lead, complement] = leading_index(p);
            (void)complement;
            for (const auto& q : list) {
                const PureState s = singlet_product(q);
                const Complex amp = s.amp[static_cast<std::int64_t>(lead)];
                if (p == q) {
                    CHECK(std::abs(amp - Complex(1.0, 0.0)) < 1e-15);
                } else if (std::abs(amp) > 0.5) {
                    CHECK(leading_index(q).first < lead);
                }
            }
        }
    }
}

TEST_CASE("singlet products are linearly independent for m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        const auto list = enumerate_noncrossing(m);
        const std::int64_t dim = std::int64_t{1} << (2 * m);
        Eigen::MatrixXcd gram(list.size(), list.size());
        std::vector<Vec> vecs;
        for (const auto& p : list) vecs.push_back(singlet_product(p).amp);
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            for (std::size_t j = 0; j < vecs.size(); ++j) {
                gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    vecs[i].dot(vecs[j]);
            }
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gram);
        CHECK(svd.singularValues().minCoeff() > 1e-8 * svd.singularValues().maxCoeff());
        (void)dim;
    }
}

TEST_CASE("hitting counts") {
    // I^ = 0^{m-1} 1 0 1^{m-1} at n = 8 is hit by exactly two partitions
    CHECK(count_partitions_hitting(8, parse_bits("00010111")) == 2);
    // the all-zero string is hit by none (chords need opposite bits)
    CHECK(count_partitions_hitting(4, parse_bits("0000")) == 0);
}

TEST_CASE("cdc expansion of a known combination") {
    const auto p1 = parse_partition("1-2,3-4");
    const auto p2 = parse_partition("1-4,2-3");
    const Vec amp = 2.0 * singlet_product(p1).amp + Complex(0.0, 1.0) * singlet_product(p2).amp;
    const CDCExpansion e = cdc_expand(PureState(4, amp));
    CHECK(e.residual < 1e-12);
    REQUIRE(e.partitions.size() == 2);
    for (std::size_t i = 0; i < e.partitions.size(); ++i) {
        if (e.partitions[i] == p1) CHECK(std::abs(e.coefficients[i] - Complex(2.0, 0.0)) < 1e-12);
        if (e.partitions[i] == p2) CHECK(std::abs(e.coefficients[i] - Complex(0.0, 1.0)) < 1e-12);
    }
}

TEST_CASE("M4 is a chord diagram construction but not symmetric") {
    const PureState m4 = construct_m4();
    const CDCExpansion e = cdc_expand(m4);
    CHECK(e.residual < 1e-12);
    CHECK_FALSE(is_symmetric(m4));
    const Complex omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    for (std::size_t i = 0; i < e.partitions.size(); ++i) {
        if (e.partitions[i] == parse_partition("1-2,3-4"))
            CHECK(std::abs(e.coefficients[i] - s6 * (1.0 + omega)) < 1e-12);
        if (e.partitions[i] == parse_partition("1-4,2-3"))
            CHECK(std::abs(e.coefficients[i] - Complex(s6, 0.0)) < 1e-12);
    }
}

TEST_CASE("no chord diagram construction is symmetric") {
    for (int n : {2, 4, 6}) {
        const SymmetricSpanReport report = verify_lemma1(n);
        CHECK_FALSE(report.in_span);
        CHECK(report.relative_residual > 0.1);
    }
}
