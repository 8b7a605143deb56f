#include <catch2/catch_amalgamated.hpp>

#include <strata/invariants.hpp>

using namespace strata;

TEST_CASE("volume conversion hits the classical endpoints") {
    StrataSequences seq(3);
    const auto v1 = volume(1, seq.a(1));
    CHECK(v1.rational_part == rat(1, 3));
    CHECK(v1.pi_exponent == 2);
    CHECK(v1.to_string() == "1/3·pi^2");

    const auto v2 = volume(2, seq.a(2));
    CHECK(v2.rational_part == rat(1, 120));
    CHECK(v2.pi_exponent == 4);

    const auto v3 = volume(3, seq.a(3));
    CHECK(v3.rational_part == rat(61, 108864));
    CHECK(v3.pi_exponent == 6);
    CHECK(v3.to_string() == "61/108864·pi^6");
}

TEST_CASE("volume and sv conversions round-trip exactly") {
    StrataSequences seq(12);
    for (long g = 1; g <= 12; ++g) {
        const auto v = volume(g, seq.a(g));
        CHECK(v.pi_exponent == 2 * g);
        CHECK(v.rational_part * Rational(factorial(2 * g - 1)) / Rational(pow2(2 * g + 1)) ==
              seq.a(g));
        const auto c = c_area(g, seq.a(g), seq.d(g));
        CHECK(c.pi_exponent == -2);
        CHECK(c.rational_part * Rational(4) * seq.a(g) == seq.d(g));
    }
}

TEST_CASE("sv constants at small genus") {
    StrataSequences seq(3);
    CHECK(c_area(1, seq.a(1), seq.d(1)).rational_part == Rational(3));
    CHECK(c_area(2, seq.a(2), seq.d(2)).rational_part == rat(10, 3));
    CHECK(c_area(3, seq.a(3), seq.d(3)).rational_part == rat(5733, 1525));
    CHECK(c_area(1, seq.a(1), seq.d(1)).to_string() == "3·pi^-2");
    CHECK_THROWS_AS(c_area(1, Rational(0), seq.d(1)), std::invalid_argument);
}

TEST_CASE("conjecture residuals at controlled precision") {
    StrataSequences seq(3);
    const auto r1 = make_row(seq, 1, 256);
    // theorem normalization degenerates at g = 1: residual is exactly -1
    CHECK((r1.eps1_theorem + BigFloat::from(1L, 256)).is_zero());

    const auto r2 = make_row(seq, 2, 256);
    CHECK(r2.eps1_conjecture.to_double() == Catch::Approx(-0.3911931810374848).epsilon(1e-12));
    CHECK(r2.eps2.to_double() == Catch::Approx(-0.1622627211922074).epsilon(1e-12));
    CHECK(r2.vol_numeric.to_double() == Catch::Approx(0.8117424252833536).epsilon(1e-12));
}

TEST_CASE("rescaled residuals approach 1") {
    StrataSequences seq(20);
    const auto rows = make_rows(seq, 20, 256);
    const auto data = rescaled_residual_data(rows, 256);
    CHECK(data[1].g == 2);
    CHECK(data[1].eps1_conjecture_rescaled.to_double() ==
          Catch::Approx(0.9512677472527027).epsilon(1e-12));
    CHECK(data[1].eps2_rescaled.to_double() == Catch::Approx(1.2981017695376594).epsilon(1e-12));
    CHECK(data[2].eps1_conjecture_rescaled.to_double() > 0.5);
    CHECK(data[2].eps1_conjecture_rescaled.to_double() < 1.5);
    // by g = 20 the rescaled residuals sit near 1
    CHECK(data[19].eps1_conjecture_rescaled.to_double() == Catch::Approx(1.0).margin(0.1));
    CHECK(data[19].eps2_rescaled.to_double() == Catch::Approx(1.0).margin(0.15));
}

TEST_CASE("numeric evaluation is precision-stable") {
    StrataSequences seq(10);
    for (long g : {2L, 7L, 10L}) {
        const auto lo = make_row(seq, g, 128);
        const auto hi = make_row(seq, g, 256);
        BigFloat tol = hi.vol_numeric.abs();
        for (int i = 0; i < 120; ++i) tol = tol.div_long(2);  // 128 - 8
        CHECK((lo.vol_numeric - hi.vol_numeric).abs() < tol);
        CHECK((lo.c_area_numeric - hi.c_area_numeric).abs() < tol);
    }
}

TEST_CASE("eps2 stays negative over the computed range") {
    StrataSequences seq(20);
    for (long g = 1; g <= 20; ++g) {
        const auto row = make_row(seq, g, 128);
        CHECK(row.eps2.sign() < 0);
    }
}
