#include <catch2/catch_amalgamated.hpp>

#include <strata/asymp.hpp>
#include <strata/gratfunc.hpp>
#include <strata/qpoly.hpp>

using namespace strata;

TEST_CASE("polynomial arithmetic and normal form") {
    const QPoly x = QPoly::variable();
    const QPoly p = x * x + x.scale(Rational(2)) + QPoly(Rational(1));  // (x+1)^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(3)) == 16);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);

    const QPoly q{Rational(1), Rational(1)};  // 1 + x
    CHECK(q * q == p);
    CHECK(p.compose(q).eval(Rational(1)) == 9);  // ((x+1)+1)^2 at 1

    const auto [quot, rem] = p.divrem(q);
    CHECK(quot == q);
    CHECK(rem.is_zero());
    const auto [q2, r2] = p.divrem(QPoly{Rational(0), Rational(1)});  // divide by x
    CHECK(q2 == QPoly{Rational(2), Rational(1)});
    CHECK(r2 == QPoly(Rational(1)));
}

TEST_CASE("gcd reduces shared factors") {
    const QPoly x = QPoly::variable();
    const QPoly a = (x + QPoly(Rational(1))) * (x + QPoly(Rational(2)));
    const QPoly b = (x + QPoly(Rational(1))) * (x + QPoly(Rational(3)));
    const QPoly g = poly_gcd(a, b);
    CHECK(g == x + QPoly(Rational(1)));  // monic by construction
}

TEST_CASE("rational functions normalize to reduced monic-denominator form") {
    const QPoly x = QPoly::variable();
    const GRatFunc f((x + QPoly(Rational(1))) * x, (x + QPoly(Rational(1))).scale(Rational(3)));
    CHECK(f.num() == x.scale(rat(1, 3)));
    CHECK(f.den() == RingTraits<QPoly>::one());

    const GRatFunc u(QPoly(Rational(1)), x);
    CHECK((u + u) == GRatFunc(QPoly(Rational(2)), x));
    CHECK((u - u).is_zero());
    CHECK(u * GRatFunc(x) == GRatFunc(Rational(1)));
    CHECK(u.substitute(QPoly{Rational(-1), Rational(1)}) ==
          GRatFunc(QPoly(Rational(1)), QPoly{Rational(-1), Rational(1)}));
    CHECK(u.eval(Rational(4)) == rat(1, 4));
    CHECK_THROWS_AS(u.eval(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(u / GRatFunc(), std::domain_error);
}

TEST_CASE("expansion at infinity is exact power-series division") {
    const QPoly x = QPoly::variable();
    // 1/(x-1) = x^{-1} + x^{-2} + x^{-3} + ...
    const GRatFunc f(QPoly(Rational(1)), x - QPoly(Rational(1)));
    const auto e = f.expand_at_infinity(4);
    CHECK(e.lead == 1);
    for (int i = 0; i < 4; ++i) CHECK(e.coeffs[static_cast<std::size_t>(i)] == 1);

    // (2x^2+3)/x = 2x + 3/x: lead = -1, coefficients 2, 0, 3
    const GRatFunc h(QPoly{Rational(3), Rational(0), Rational(2)}, x);
    const auto e2 = h.expand_at_infinity(3);
    CHECK(e2.lead == -1);
    CHECK(e2.coeffs[0] == 2);
    CHECK(e2.coeffs[1] == 0);
    CHECK(e2.coeffs[2] == 3);
}

TEST_CASE("pi-laurent arithmetic prunes zeros and renders stably") {
    PiLaurent v(1, rat(-1, 12));
    v.add_term(2, rat(1, 288));
    CHECK(to_string(v) == "-1/12·pi^2 + 1/288·pi^4");
    CHECK(v.is_polynomial());
    PiLaurent w(-1, Rational(3));
    CHECK_FALSE(w.is_polynomial());
    CHECK(to_string(w) == "3·pi^-2");

    PiLaurent cancel = v + (-v);
    CHECK(cancel.is_zero());
    CHECK(to_string(cancel) == "0");

    const PiLaurent prod = PiLaurent(1, Rational(2)) * PiLaurent(-1, rat(1, 2));
    CHECK(prod == PiLaurent(0, Rational(1)));

    const BigFloat num = evaluate(PiLaurent(1, Rational(1)), 128);
    CHECK(num.to_double() == Catch::Approx(9.869604401089358));
}

TEST_CASE("asymptotic expansions track their exactness window") {
    // A = 1 - (1/2) g^{-1}, B = 1 + g^{-2} on [0, 2]
    AsympExpansion a(0, {PiLaurent(0, Rational(1)), PiLaurent(0, rat(-1, 2)), PiLaurent()});
    AsympExpansion b(0, {PiLaurent(0, Rational(1)), PiLaurent(), PiLaurent(0, Rational(1))});
    const auto sum = a + b;
    CHECK(sum.leading_order() == 0);
    CHECK(sum.coefficient_at(0) == PiLaurent(0, Rational(2)));
    CHECK(sum.coefficient_at(2) == PiLaurent(0, Rational(1)));

    const auto prod = a * b;
    CHECK(prod.coefficient_at(1) == PiLaurent(0, rat(-1, 2)));
    CHECK(prod.coefficient_at(2) == PiLaurent(0, Rational(1)));
    CHECK_THROWS_AS(prod.coefficient_at(3), std::out_of_range);
    CHECK(prod.coefficient_at(-5).is_zero());

    const auto q = (a * b) / a;
    for (long k = 0; k <= 2; ++k) CHECK(q.coefficient_at(k) == b.coefficient_at(k));

    // division demands an invertible monomial leading coefficient
    PiLaurent two_terms(0, Rational(1));
    two_terms.add_term(1, Rational(1));
    AsympExpansion c(0, {two_terms});
    CHECK_THROWS_AS(a / c, std::domain_error);

    // leading zeros collapse the window
    AsympExpansion z(0, {PiLaurent(), PiLaurent(0, Rational(5))});
    CHECK(z.leading_order() == 1);
}

TEST_CASE("window expansion demands cancellation below the window") {
    const QPoly x = QPoly::variable();
    PiRatFunc ok;
    ok.add_term(0, GRatFunc(QPoly(Rational(1)), x));        // 1/g
    ok.add_term(1, GRatFunc(QPoly(Rational(1)), x * x));    // P/g^2
    const auto e = expand_on_window(ok, 1, 3);
    CHECK(e.coefficient_at(1) == PiLaurent(0, Rational(1)));
    CHECK(e.coefficient_at(2) == PiLaurent(1, Rational(1)));

    PiRatFunc bad;
    bad.add_term(0, GRatFunc(x));  // grows like g: mass below any window
    CHECK_THROWS_AS(expand_on_window(bad, 0, 2), std::logic_error);

    // exact cancellation below the window is allowed
    PiRatFunc cancel;
    cancel.add_term(0, GRatFunc(x) - GRatFunc(x * x, x));  // identically zero
    CHECK(expand_on_window(cancel, 0, 2).is_zero());
}
