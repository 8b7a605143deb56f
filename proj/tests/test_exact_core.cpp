#include <catch2/catch_amalgamated.hpp>

#include <thread>
#include <vector>

#include <strata/bernoulli.hpp>
#include <strata/bigfloat.hpp>
#include <strata/rational.hpp>

using namespace strata;

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
    CHECK(binomial(5, 7) == 0);  // out of range yields zero, not an error
    CHECK(pow2(10) == 1024);
}

TEST_CASE("rational helpers") {
    CHECK(to_fraction_string(rat(3, 6)) == "1/2");
    CHECK(to_fraction_string(rat(-4, 2)) == "-2");
    CHECK(to_fraction_string(Rational(0)) == "0");
    CHECK(rat(1, -2) == rat(-1, 2));

    CHECK(is_canonical_integer_string("0"));
    CHECK(is_canonical_integer_string("12"));
    CHECK(is_canonical_integer_string("-5"));
    CHECK_FALSE(is_canonical_integer_string(""));
    CHECK_FALSE(is_canonical_integer_string("-0"));
    CHECK_FALSE(is_canonical_integer_string("01"));
    CHECK_FALSE(is_canonical_integer_string("+3"));
    CHECK_FALSE(is_canonical_integer_string("1 "));

    CHECK(parse_rational("7/3") == rat(7, 3));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS(parse_rational("2/4"));   // not lowest terms
    CHECK_THROWS(parse_rational("1/-2"));  // negative denominator
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("bernoulli numbers: exact values and recurrence residual") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(12) == rat(-691, 2730));
    for (long n = 3; n <= 41; n += 2) CHECK(bernoulli(n) == 0);

    // sum_{k=0}^{n} C(n+1,k) B_k = 0 for every n >= 1
    for (long n = 1; n <= 40; ++n) {
        Rational sum(0);
        for (long k = 0; k <= n; ++k) sum += Rational(binomial(n + 1, k)) * bernoulli(k);
        CHECK(sum == 0);
    }
}

TEST_CASE("b coefficients of (t/2)/sin(t/2)") {
    CHECK(b_coeff(0) == 1);
    CHECK(b_coeff(1) == rat(1, 24));
    CHECK(b_coeff(2) == rat(7, 5760));
    CHECK(b_coeff(3) == rat(31, 967680));
    for (long g = 1; g <= 30; ++g) CHECK(b_coeff(g) > 0);
    // decay: b_{g+1}/b_g -> 1/(2pi)^2 from above; < 1/30 everywhere, < 1/39 once g >= 3
    for (long g = 1; g <= 30; ++g) CHECK(b_coeff(g + 1) * 30 < b_coeff(g));
    for (long g = 3; g <= 30; ++g) CHECK(b_coeff(g + 1) * 39 < b_coeff(g));
}

TEST_CASE("bernoulli memo is safe under concurrent first use") {
    std::vector<std::thread> pool;
    std::vector<Rational> out(8);
    for (int i = 0; i < 8; ++i)
        pool.emplace_back([&out, i] { out[static_cast<std::size_t>(i)] = bernoulli(120 + (i % 3)); });
    for (auto& t : pool) t.join();
    for (int i = 0; i < 8; ++i) CHECK(out[static_cast<std::size_t>(i)] == bernoulli(120 + (i % 3)));
}

TEST_CASE("pi value validated against the embedded reference") {
    CHECK_THROWS_AS(pi_value(63), std::invalid_argument);
    const BigFloat p64 = pi_value(64);
    CHECK(p64.to_string(19).substr(0, 18) == "3.1415926535897932");
    const BigFloat p600 = pi_value(600);
    const BigFloat p1200 = pi_value(1200);
    // agreement to well below 2^-590
    BigFloat tol = BigFloat::from(1L, 64);
    for (int i = 0; i < 590; ++i) tol = tol.div_long(2);
    CHECK((p600 - p1200).abs() < tol);
}

TEST_CASE("big float arithmetic carries the larger precision") {
    const BigFloat a = BigFloat::from(rat(1, 3), 128);
    const BigFloat b = BigFloat::from(rat(1, 7), 256);
    CHECK((a + b).prec() == 256);
    CHECK((a * b).prec() == 256);
    CHECK((a - a).is_zero());
    CHECK(BigFloat::from(-5L, 64).abs().to_double() == 5.0);
    CHECK(BigFloat::from(8L, 64).log().to_double() == Catch::Approx(2.0794415416798357));
    CHECK(BigFloat::from(3L, 64).pow_ui(4).to_double() == 81.0);
    CHECK(BigFloat::from(10L, 64).mul_long(3).div_long(5).to_double() == 6.0);
    CHECK(BigFloat::from(1L, 64) < BigFloat::from(2L, 64));
    CHECK_THROWS_AS(BigFloat(63), std::invalid_argument);
}
