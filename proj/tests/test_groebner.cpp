#include "doctest.h"
#include "leviflat/groebner.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace lftest;

namespace {

Ideal ideal_of(const std::vector<std::string>& srcs, const ContextPtr& ctx) {
    std::vector<Polynomial> gens;
    for (const auto& s : srcs) gens.push_back(P(s, ctx));
    return Ideal(ctx, std::move(gens));
}

} // namespace

TEST_SUITE("groebner") {
    TEST_CASE("already a basis") {
        auto ctx = make_context(2);
        Ideal I = ideal_of({"z1", "z2"}, ctx);
        const auto& gb = I.basis();
        REQUIRE(gb.elements.size() == 2);
        CHECK(gb.elements[0] == P("z2", ctx));
        CHECK(gb.elements[1] == P("z1", ctx));
        CHECK(buchberger_criterion_holds(gb, *ctx));
    }

    TEST_CASE("twisted cubic relation under lex") {
        auto ctx = make_context(3);
        Ideal I = ideal_of({"z1^2-z2", "z1^3-z3"}, ctx);
        const auto& gb = I.basis(TermOrder::lex());
        Polynomial rel = P("z2^3-z3^2", ctx);
        bool found = false;
        for (const auto& g : gb.elements)
            if (g == rel) found = true;
        CHECK(found);
        CHECK(normal_form(rel, I).is_zero());
        CHECK(buchberger_criterion_holds(gb, *ctx));

        // Independent check: the relation vanishes on the parameterization
        // (t^2, t^3) at 10 rational values of t.
        for (long n = -5; n < 5; ++n) {
            GaussianRational t = GRq(2 * n + 1, 2);
            CHECK(rel.evaluate({t, t * t, t * t * t}).is_zero());
        }
    }

    TEST_CASE("block elimination of the conjugate block") {
        auto ctx = make_context(4, 4);
        Ideal I = ideal_of({"~z3*z2-~z2*z3", "z4", "~z4"}, ctx);
        Ideal E = eliminate(I, lf::EliminationBlock::W);
        auto zctx = E.context();
        CHECK(!zctx->has_w_block());
        CHECK(ideal_equal(E, ideal_of({"z4"}, zctx)));
        // Elimination correctness: survivors lie in I and avoid the w-block.
        for (const auto& g : E.generators()) {
            CHECK(ideal_contains(I, embed_in_full(g, ctx)));
            for (std::size_t k = 0; k < zctx->size(); ++k) CHECK(!zctx->is_w(k));
        }
        // Survivors vanish along a w-parameterized family on the variety:
        // z = (s, t w2, t w3, 0) with w4 = 0 satisfies the generators.
        Rng rng(3);
        for (int k = 0; k < 10; ++k) {
            GaussianRational s = rng.coefficient(), t = rng.coefficient();
            GaussianRational w2 = rng.coefficient(), w3 = rng.coefficient();
            std::vector<GaussianRational> full = {s,
                                                  t * w2,
                                                  t * w3,
                                                  GaussianRational(),
                                                  rng.coefficient(),
                                                  w2,
                                                  w3,
                                                  GaussianRational()};
            for (const auto& g : I.generators()) REQUIRE(g.evaluate(full).is_zero());
            std::vector<GaussianRational> zpart(full.begin(), full.begin() + 4);
            for (const auto& g : E.generators()) CHECK(g.evaluate(zpart).is_zero());
        }
    }

    TEST_CASE("graph of the identity projects onto everything") {
        auto ctx = make_context(1, 1);
        Ideal I = ideal_of({"z1-~z1"}, ctx);
        Ideal E = eliminate(I, lf::EliminationBlock::W);
        CHECK(E.is_zero());
    }

    TEST_CASE("normal form basics") {
        auto ctx = make_context(2);
        Rng rng(7);
        Polynomial g = rng.nonzero_polynomial(ctx, 3, 4);
        CHECK(normal_form(g, Ideal(ctx, {g})).is_zero());
        CHECK(normal_form(P("1", ctx), ideal_of({"z1"}, ctx)) == P("1", ctx));
    }

    TEST_CASE("membership soundness for explicit combinations") {
        auto ctx = make_context(3);
        Rng rng(13);
        for (int k = 0; k < 15; ++k) {
            std::vector<Polynomial> gens{rng.nonzero_polynomial(ctx, 3, 3),
                                         rng.nonzero_polynomial(ctx, 3, 3)};
            Ideal I(ctx, gens);
            Polynomial f(ctx);
            for (const auto& g : gens) f = f + rng.polynomial(ctx, 2, 3) * g;
            CHECK(normal_form(f, I).is_zero());
        }
    }

    TEST_CASE("krull dimension, pinned cases") {
        auto c4 = make_context(4);
        CHECK(krull_dimension(ideal_of({"z4"}, c4)) == 3);
        CHECK(krull_dimension(ideal_of({"z2", "z3", "z4"}, c4)) == 1);
        auto c3 = make_context(3);
        CHECK(krull_dimension(ideal_of({"z1^2-z2", "z1^3-z3"}, c3)) == 1);
        CHECK(!krull_dimension(ideal_of({"z1", "z1-1"}, c3)).has_value()); // empty variety
        CHECK(krull_dimension(Ideal::zero(c3)) == 3);
    }

    TEST_CASE("saturation") {
        auto ctx = make_context(2);
        CHECK(ideal_equal(saturate(ideal_of({"z1*z2"}, ctx), P("z1", ctx)),
                          ideal_of({"z2"}, ctx)));
        Ideal I = ideal_of({"z1^2-z2"}, ctx);
        CHECK(ideal_equal(saturate(I, P("1", ctx)), I));
        CHECK(is_unit_ideal(saturate(ideal_of({"z1^2", "z1*z2"}, ctx), P("z1", ctx))));
    }

    TEST_CASE("saturation swallows cofactors") {
        auto ctx = make_context(2);
        Rng rng(19);
        for (int k = 0; k < 10; ++k) {
            Polynomial f = rng.nonzero_polynomial(ctx, 2, 2);
            Polynomial g = rng.nonzero_polynomial(ctx, 2, 2);
            Polynomial h = rng.nonzero_polynomial(ctx, 2, 2);
            // f g in <f g, h> so g must lie in the saturation by f.
            Ideal I(ctx, {f * g, h});
            Ideal S = saturate(I, f);
            CHECK(ideal_contains(S, g));
        }
    }

    TEST_CASE("basis computation is deterministic") {
        auto ctx = make_context(3);
        Ideal a = ideal_of({"z1^2-z2*z3", "z2^2-z1", "z3^2-z2"}, ctx);
        Ideal b = ideal_of({"z1^2-z2*z3", "z2^2-z1", "z3^2-z2"}, ctx);
        const auto& ga = a.basis();
        const auto& gb = b.basis();
        REQUIRE(ga.elements.size() == gb.elements.size());
        for (std::size_t k = 0; k < ga.elements.size(); ++k)
            CHECK(ga.elements[k] == gb.elements[k]);
        CHECK(buchberger_criterion_holds(ga, *ctx));
    }

    TEST_CASE("budget violations are loud") {
        auto ctx = make_context(3);
        Ideal I = ideal_of({"z1^2-z2*z3", "z2^3-z1*z3", "z3^3-z1*z2^2"}, ctx);
        GBOptions tiny;
        tiny.max_reductions = 3;
        CHECK_THROWS_AS(I.basis(TermOrder::grevlex(), tiny), lf::BudgetExceededError);
    }

    TEST_CASE("monomial ideal dimension agrees with grid point counting") {
        Rng rng(43);
        for (int k = 0; k < 12; ++k) {
            std::size_t n = std::size_t(rng.integer(2, 4));
            auto ctx = make_context(n);
            std::vector<Monomial> monos;
            std::vector<Polynomial> gens;
            int m = int(rng.integer(1, 3));
            for (int j = 0; j < m; ++j) {
                Monomial mono = rng.monomial(ctx, 3);
                if (mono.is_one()) mono[0] = 1;
                monos.push_back(mono);
                gens.push_back(Polynomial::term(ctx, mono, GR(1)));
            }
            auto via_gb = krull_dimension(Ideal(ctx, gens));
            auto via_grid = lforacle::grid_dimension_monomial(monos, n);
            REQUIRE(via_gb.has_value());
            REQUIRE(via_grid.has_value());
            CHECK(*via_gb == *via_grid);
        }
    }

    TEST_CASE("elimination of a parameterized curve matches the oracle") {
        // z = (t^2, t^3) with t in the conjugate block: the projection is the
        // cuspidal cubic.
        auto ctx = make_context(2, 2);
        Ideal I = ideal_of({"z1-~z1^2", "z2-~z1^3"}, ctx);
        Ideal E = eliminate(I, lf::EliminationBlock::W);
        auto zctx = E.context();
        CHECK(ideal_equal(E, ideal_of({"z2^2-z1^3"}, zctx)));
        // The oracle certifies the relation at degree six and everything it
        // finds lies in the computed ideal.
        Polynomial rel = P("z2^2-z1^3", ctx);
        CHECK(lforacle::macaulay_member(rel, I.generators(), 6));
        std::vector<bool> keep{true, true, false, false};
        auto oracle_rows = lforacle::macaulay_eliminate(I.generators(), keep, 6);
        CHECK(!oracle_rows.empty());
        for (const Polynomial& f : oracle_rows)
            CHECK(normal_form(restrict_to_z(f, zctx), E).is_zero());
    }

    TEST_CASE("term orders are total and compatible with multiplication") {
        auto ctx = make_context(2, 2);
        Rng rng(53);
        for (const TermOrder& ord : {TermOrder::grevlex(), TermOrder::lex(), TermOrder::elim_w(),
                                     TermOrder::elim_z()}) {
            MonomialCompare cmp(ord, *ctx);
            for (int k = 0; k < 40; ++k) {
                Monomial a = rng.monomial(ctx, 4);
                Monomial b = rng.monomial(ctx, 4);
                Monomial c = rng.monomial(ctx, 4);
                int ab = cmp.cmp(a, b);
                CHECK(ab == -cmp.cmp(b, a));
                CHECK((ab != 0 || a == b));
                // Multiplicative: the comparison survives a common factor.
                CHECK(cmp.cmp(a * c, b * c) == ab);
                // One is the minimum.
                CHECK(cmp.cmp(a * c, a) >= 0);
            }
        }
    }

    TEST_CASE("returned bases are reduced") {
        auto ctx = make_context(3);
        Rng rng(59);
        for (int k = 0; k < 6; ++k) {
            Ideal I(ctx, {rng.nonzero_polynomial(ctx, 3, 3), rng.nonzero_polynomial(ctx, 3, 3)});
            const auto& gb = I.basis();
            MonomialCompare cmp(gb.order, *ctx);
            for (std::size_t a = 0; a < gb.elements.size(); ++a) {
                auto [lm, lc] = gb.elements[a].leading_term(cmp);
                CHECK(lc.is_one());
                for (std::size_t b = 0; b < gb.elements.size(); ++b) {
                    if (a == b) continue;
                    const Monomial& lb = gb.elements[b].leading_monomial(cmp);
                    CHECK(!lb.divides(lm));
                    // Tails fully reduced: no term of a divisible by LT(b).
                    for (const auto& [m, c] : gb.elements[a].terms()) CHECK(!lb.divides(m));
                }
            }
        }
    }

    TEST_CASE("ideal equality is symmetric and transitive on tested triples") {
        auto ctx = make_context(2);
        Ideal A = ideal_of({"z1+z2", "z2^2"}, ctx);
        Ideal B = ideal_of({"z2^2", "z1+z2", "z1*z2+z2^2"}, ctx);
        Ideal C = ideal_of({"z1+z2-z2^2", "z2^2"}, ctx);
        CHECK(ideal_equal(A, B));
        CHECK(ideal_equal(B, A));
        CHECK(ideal_equal(B, C));
        CHECK(ideal_equal(A, C));
        Ideal D = ideal_of({"z1"}, ctx);
        CHECK(!ideal_equal(A, D));
    }

    TEST_CASE("all computed bases satisfy the Buchberger criterion") {
        Rng rng(47);
        for (int k = 0; k < 8; ++k) {
            auto ctx = make_context(3);
            Ideal I(ctx, {rng.nonzero_polynomial(ctx, 3, 3), rng.nonzero_polynomial(ctx, 3, 3)});
            const auto& gb = I.basis();
            CHECK(buchberger_criterion_holds(gb, *ctx));
        }
    }
}
