#include "doctest.h"
#include "test_support.hpp"

using namespace lftest;

TEST_SUITE("parser") {
    TEST_CASE("defining polynomial of the first example model") {
        auto ctx = make_context(4, 4);
        Polynomial p = P("~z3*z2 - ~z2*z3", ctx);
        Polynomial expected =
            Polynomial::variable(ctx, 6) * Polynomial::variable(ctx, 1) -
            Polynomial::variable(ctx, 5) * Polynomial::variable(ctx, 2); // w3 z2 - w2 z3
        CHECK(p == expected);
        CHECK(print_poly(p) == "w3*z2-w2*z3");
        CHECK(print_poly(p, true) == "~z3*z2-~z2*z3");
    }

    TEST_CASE("zero literal") {
        auto ctx = make_context(2);
        CHECK(P("0", ctx).is_zero());
        CHECK(print_poly(P("0", ctx)) == "0");
    }

    TEST_CASE("square expansion cross-checked against arithmetic") {
        auto ctx = make_context(1);
        Polynomial direct = P("(z1+i)^2", ctx);
        Polynomial via_ops = P("z1+i", ctx) * P("z1+i", ctx);
        CHECK(direct == via_ops);
        CHECK(direct == P("z1^2+2*i*z1-1", ctx));
    }

    TEST_CASE("precedence: caret binds above unary minus above star") {
        auto ctx = make_context(2);
        CHECK(P("-z1^2", ctx) == -P("z1^2", ctx));
        CHECK(P("-z1*z2", ctx) == -(P("z1", ctx) * P("z2", ctx)));
        CHECK(P("2*z1^3", ctx) == P("z1^3", ctx).scaled(GR(2)));
        CHECK(P("1/2*z1", ctx) == P("z1", ctx).scaled(GRq(1, 2)));
    }

    TEST_CASE("round trip on 200 random polynomials") {
        Rng rng(101);
        for (int k = 0; k < 200; ++k) {
            auto ctx = make_context(std::size_t(rng.integer(1, 3)), 0);
            if (rng.integer(0, 1)) ctx = make_context(std::size_t(rng.integer(1, 2)),
                                                      std::size_t(0));
            Polynomial p = rng.polynomial(ctx, 6, 9);
            CHECK(parse_poly(print_poly(p), ctx) == p);
        }
        // And with conjugate blocks in both display styles.
        for (int k = 0; k < 100; ++k) {
            auto ctx = make_context(2, 2);
            Polynomial p = rng.polynomial(ctx, 5, 8);
            CHECK(parse_poly(print_poly(p), ctx) == p);
            CHECK(parse_poly(print_poly(p, true), ctx) == p);
        }
    }

    TEST_CASE("diagnostics carry positions and never crash") {
        auto ctx = make_context(3, 3);
        auto expect_error = [&](const std::string& src) {
            try {
                parse_poly(src, ctx);
                FAIL_CHECK("expected ParseError for: " << src);
            } catch (const lf::ParseError& e) {
                CHECK(e.line() >= 1);
                CHECK(e.column() >= 1);
            }
        };
        expect_error("z1 z2");      // implicit multiplication
        expect_error("z9");         // unknown variable
        expect_error("q1+1");       // unknown identifier
        expect_error("z1^");        // missing exponent
        expect_error("z1^65");      // exponent cap
        expect_error("(z1");        // unbalanced parenthesis
        expect_error("");           // empty input
        expect_error("1/");         // missing denominator
        expect_error("1/0");        // zero denominator
        expect_error("~3");         // conjugate of a literal
        expect_error("z1++z2");     // stray operator
        expect_error("z1^2^3");     // non-associative power
    }

    TEST_CASE("conjugate tokens need a conjugate block") {
        auto ctx = make_context(2); // no w-block
        CHECK_THROWS_AS(P("~z1", ctx), lf::ParseError);
    }

    TEST_CASE("printing uses display names of derived contexts") {
        auto ctx = make_context(3, 0, {"z2", "z3", "z4"});
        Polynomial p = P("z4^2-z2", ctx);
        CHECK(print_poly(p) == "z4^2-z2");
        CHECK(parse_poly(print_poly(p), ctx) == p);
    }

    TEST_CASE("mixed coefficients parenthesize and round trip") {
        auto ctx = make_context(1);
        Polynomial p = P("z1", ctx).scaled(GRi(-1, -2)) + Polynomial::constant(ctx, GRi(1, 2));
        CHECK(parse_poly(print_poly(p), ctx) == p);
        CHECK(print_poly(P("z1-1-2*i", ctx)) == "z1-(1+2*i)");
    }
}
