#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <strata/recursion.hpp>

using namespace strata;

TEST_CASE("small-genus intersection numbers are exact") {
    StrataSequences seq(3);
    CHECK(seq.a(1) == rat(1, 24));
    CHECK(seq.a(2) == rat(1, 640));
    CHECK(seq.a(3) == rat(305, 580608));
    CHECK(seq.d(1) == rat(1, 2));
    CHECK(seq.d(2) == rat(1, 48));
    CHECK(seq.d(3) == rat(91, 11520));
    CHECK(seq.b(0) == 1);
    CHECK(seq.b(2) == rat(7, 5760));
    CHECK_THROWS_AS(seq.a(4), std::out_of_range);
}

TEST_CASE("extension is incremental and consistent") {
    StrataSequences whole(9);
    StrataSequences grown(2);
    grown.extend(9);
    for (long g = 1; g <= 9; ++g) {
        CHECK(grown.a(g) == whole.a(g));
        CHECK(grown.d(g) == whole.d(g));
    }
}

TEST_CASE("adopting precomputed values reproduces the recursion") {
    StrataSequences computed(7);
    std::vector<Rational> a(computed.a_values().begin(), computed.a_values().end());
    std::vector<Rational> d(computed.d_values().begin(), computed.d_values().end());
    StrataSequences adopted(std::move(a), std::move(d));
    CHECK(adopted.g_max() == 7);
    adopted.extend(9);
    StrataSequences reference(9);
    CHECK(adopted.a(9) == reference.a(9));
    CHECK(adopted.d(9) == reference.d(9));
}

TEST_CASE("ordered compositions are enumerated completely") {
    long count = 0;
    Rational weighted(0);
    detail::for_each_composition(4, [&](const std::vector<long>& parts) {
        ++count;
        long s = 0;
        for (long p : parts) s += p;
        REQUIRE(s == 4);
        weighted += rat(1, static_cast<long>(parts.size()));
    });
    CHECK(count == 8);  // 2^{n-1} ordered compositions of n = 4
    // 1 of length 1, 3 of length 2, 3 of length 3, 1 of length 4
    CHECK(weighted == Rational(1) + rat(3, 2) + Rational(1) + rat(1, 4));
}

TEST_CASE("composition-sum oracles confirm the fast solvers") {
    StrataSequences seq(6);
    for (long g = 1; g <= 6; ++g) {
        CHECK(oracle_b_from_a(g, seq) == b_coeff(g));
        CHECK(oracle_rhs_d(g, seq) == b_coeff(g - 1) / 2);
    }
    const auto cc = cross_check(seq, 6);
    CHECK(cc.pass);
}

TEST_CASE("cross-check rejects perturbed data") {
    StrataSequences good(5);
    std::vector<Rational> a(good.a_values().begin(), good.a_values().end());
    std::vector<Rational> d(good.d_values().begin(), good.d_values().end());
    a[1] += rat(1, 1000000);  // corrupt a_2
    StrataSequences bad(std::move(a), std::move(d));
    const auto cc = cross_check(bad, 5);
    CHECK_FALSE(cc.pass);
    CHECK_FALSE(cc.report.empty());
}

TEST_CASE("exact inequalities and ratio windows hold") {
    StrataSequences seq(30);
    std::string why;
    CHECK(check_inequalities(seq, 30, &why));
    CHECK(why.empty());

    // the bounds are tight at leading order: ratios approach 1 from below
    const Rational r20 = seq.a(20) / (Rational(factorial(38)) * seq.b(20));
    const Rational r30 = seq.a(30) / (Rational(factorial(58)) * seq.b(30));
    CHECK(r20 < r30);
    CHECK(r30 < 1);
}

TEST_CASE("inequality checker names the violated bound") {
    StrataSequences good(4);
    std::vector<Rational> a(good.a_values().begin(), good.a_values().end());
    std::vector<Rational> d(good.d_values().begin(), good.d_values().end());
    a[3] = -a[3];
    StrataSequences bad(std::move(a), std::move(d));
    std::string why;
    CHECK_FALSE(check_inequalities(bad, 4, &why));
    CHECK(why.find("a_g > 0") != std::string::npos);
}
