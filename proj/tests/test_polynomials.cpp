#include <catch2/catch_amalgamated.hpp>

#include <domino/domino.hpp>

using namespace domino;

TEST_CASE("gaussian integer arithmetic") {
    GaussInt i{0, 1};
    CHECK(i * i == GaussInt{-1, 0});
    CHECK(GaussInt{2, 3} * GaussInt{2, -3} == GaussInt{13, 0});
    CHECK(GaussInt{1, 1} + GaussInt{1, -1} == GaussInt{2, 0});
    CHECK(GaussInt{5, 0}.is_real());
    CHECK_FALSE(i.is_real());

    CHECK(GaussInt::i_pow(0) == GaussInt{1, 0});
    CHECK(GaussInt::i_pow(1) == GaussInt{0, 1});
    CHECK(GaussInt::i_pow(2) == GaussInt{-1, 0});
    CHECK(GaussInt::i_pow(3) == GaussInt{0, -1});
    CHECK(GaussInt::i_pow(4) == GaussInt{1, 0});
    CHECK(GaussInt::i_pow(-1) == GaussInt{0, -1});
    CHECK(GaussInt::i_pow(-2) == GaussInt{-1, 0});
}

TEST_CASE("laurent polynomial arithmetic and rendering") {
    LaurentPoly x = LaurentPoly::x(), y = LaurentPoly::y();
    LaurentPoly sq = (x + y) * (x + y);
    CHECK(sq.str() == "x^2 + 2*x*y + y^2");
    CHECK(sq.eval(GaussInt{1}, GaussInt{2}, GaussInt{1}, GaussInt{1}) == GaussInt{9});

    CHECK((LaurentPoly::term(GaussInt{2}, Monomial{}) * LaurentPoly::x()).str() == "2*x");
    CHECK((x - x).str() == "0");
    CHECK((x - x).is_zero());

    LaurentPoly inv = LaurentPoly::var_pow(kVarX, -2) * LaurentPoly::var_pow(kVarY, -1);
    CHECK(inv.str() == "x^-2*y^-1");
    CHECK((inv * LaurentPoly::var_pow(kVarX, 2) * LaurentPoly::y()).str() == "1");

    // Half powers print with an explicit fraction.
    CHECK(LaurentPoly::var_pow(kVarQ, 1, 2).str() == "q^1/2");
}

TEST_CASE("substitution handles half-integer exponents") {
    LaurentPoly half = LaurentPoly::var_pow(kVarQ, 1, 2);
    // q^(1/2) at q = -1 is i under the principal branch used throughout.
    CHECK(half.eval(GaussInt{1}, GaussInt{1}, GaussInt{1}, GaussInt{-1}) == GaussInt{0, 1});
    CHECK((half * half).eval(GaussInt{1}, GaussInt{1}, GaussInt{1}, GaussInt{-1}) == GaussInt{-1});
}

TEST_CASE("fractional exponents outside halves are rejected") {
    LaurentPoly half = LaurentPoly::var_pow(kVarQ, 1, 2);
    std::array<std::optional<LaurentPoly::Subst>, 4> repl{};
    repl[kVarQ] = LaurentPoly::Subst{GaussInt{1}, Monomial{{0, 0, 0, 1}}};
    CHECK_THROWS_AS(half.substitute(repl), std::invalid_argument);
}

TEST_CASE("q-analogues") {
    CHECK(q_int(0).str() == "0");
    CHECK(q_int(1).str() == "1");
    CHECK(q_int(3).str() == "1 + q + q^2");
    CHECK(q_factorial(3).str() == "1 + 2*q + 2*q^2 + q^3");
    CHECK(q_binomial(4, 2).str() == "1 + q + 2*q^2 + q^3 + q^4");
    CHECK(q_binomial(5, 0).str() == "1");
    CHECK(q_binomial(3, 5).is_zero());

    // q = 1 recovers ordinary binomials and factorials.
    for (int n = 0; n <= 7; ++n) {
        GaussInt fact = q_factorial(n).eval(GaussInt{1}, GaussInt{1}, GaussInt{1}, GaussInt{1});
        CHECK(fact == GaussInt{factorial(n)});
        for (int k = 0; k <= n; ++k) {
            GaussInt binom = q_binomial(n, k).eval(GaussInt{1}, GaussInt{1}, GaussInt{1}, GaussInt{1});
            CHECK(binom == GaussInt{binomial(n, k)});
        }
    }
}

TEST_CASE("binomials and factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("truncated series follow factorial-scaled semantics") {
    // Coefficient n of a series is n! times the usual power-series one,
    // so products use binomial convolution and exp(t) has all ones.
    TruncatedSeries t(6);
    t.set_coeff(1, LaurentPoly::term(GaussInt{1}, Monomial{}));
    TruncatedSeries e = t.exp();
    for (int n = 0; n <= 6; ++n) CHECK(e.coeff(n).str() == "1");

    TruncatedSeries e2 = e * e;
    for (int n = 0; n <= 6; ++n) {
        GaussInt v = e2.coeff(n).eval(GaussInt{1}, GaussInt{1}, GaussInt{1}, GaussInt{1});
        BigInt expect = 1;
        for (int k = 0; k < n; ++k) expect *= 2;
        CHECK(v == GaussInt{expect});
    }

    // exp(c*t) has coefficients c^n.
    TruncatedSeries ct(4);
    ct.set_coeff(1, LaurentPoly::x() + LaurentPoly::y());
    TruncatedSeries ec = ct.exp();
    CHECK(ec.coeff(2).str() == "x^2 + 2*x*y + y^2");
    CHECK(ec.coeff(3).str() == "x^3 + 3*x^2*y + 3*x*y^2 + y^3");

    TruncatedSeries bad(3);
    bad.set_coeff(0, LaurentPoly::term(GaussInt{1}, Monomial{}));
    CHECK_THROWS_AS(bad.exp(), std::invalid_argument);
}
