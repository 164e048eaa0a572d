#include "doctest.h"
#include "leviflat/segre.hpp"
#include "models.hpp"

using namespace lftest;

namespace {

Point pt4(long a, long b, long c, long d) { return {GR(a), GR(b), GR(c), GR(d)}; }

} // namespace

TEST_SUITE("segre") {
    TEST_CASE("degenerate point on the singular axis") {
        LeviFlatModel H = make_ex1();
        SegreResult r = segre_variety(H, pt4(1, 0, 0, 0));
        CHECK(r.classification == SegreClass::Degenerate);
        CHECK(r.codim_in_icomp == 0);
        // The slice equals the intrinsic complexification as an ideal.
        CHECK(ideal_equal(r.ideal, H.icomplexification()));
    }

    TEST_CASE("ordinary point carries the leaf through it") {
        LeviFlatModel H = make_ex1();
        Point p = pt4(0, 1, 1, 0);
        SegreResult r = segre_variety(H, p);
        CHECK(r.classification == SegreClass::Ordinary);
        CHECK(r.codim_in_icomp == 1);
        auto zctx = H.zcontext();
        CHECK(ideal_equal(r.ideal, Ideal(zctx, {P("z2-z3", zctx), P("z4", zctx)})));
        // The Segre slice contains the Levi leaf with parameter one.
        Ideal leaf(zctx, {P("z3-z2", zctx), P("z4", zctx)});
        CHECK(ideal_contains_ideal(leaf, r.ideal));
    }

    TEST_CASE("points on the intrinsic complexification but off the model") {
        LeviFlatModel H = make_ex1();
        Point p = {GR(0), GR(1), GaussianRational::i(), GR(0)};
        REQUIRE(vanishes_on_generators(H.icomplexification(), p));
        REQUIRE(!H.contains_point(p));
        // A point belongs to its own Segre variety exactly when it is on H.
        CHECK(!point_in_segre(H, p, p));
        CHECK(point_in_segre(H, pt4(0, 1, 1, 0), pt4(0, 1, 1, 0)));
    }

    TEST_CASE("points off the intrinsic complexification are rejected") {
        LeviFlatModel H = make_ex1();
        CHECK_THROWS_AS(segre_variety(H, pt4(0, 0, 0, 1)), lf::InputError);
    }

    TEST_CASE("classification, pinned cases") {
        LeviFlatModel H1 = make_ex1();
        CHECK(classify_point(H1, pt4(3, 0, 0, 0)).classification == SegreClass::Degenerate);
        auto c1 = classify_point(H1, pt4(0, 1, 2, 0));
        CHECK(c1.classification == SegreClass::Ordinary);
        CHECK(c1.codim_in_icomp == 1);

        LeviFlatModel H2 = make_ex2();
        auto c2 = classify_point(H2, pt4(1, 0, 0, 0));
        CHECK(c2.classification == SegreClass::Ordinary);
        CHECK(c2.codim_in_icomp == 1);
    }

    TEST_CASE("degenerate locus of the first example is the singular axis") {
        LeviFlatModel H = make_ex1();
        SdReport r = degenerate_locus(H);
        auto zctx = H.zcontext();
        CHECK(ideal_equal(r.ideal, Ideal(zctx, {P("z2", zctx), P("z3", zctx), P("z4", zctx)})));
        CHECK(r.dim == 1);
        CHECK(r.icomp_dim == 3);
        CHECK(r.codim() == 2);
        CHECK(r.codim_at_least_two);
        // Proper subset: strictly more equations than the icomp.
        CHECK(ideal_contains_ideal(r.ideal, H.icomplexification()));
        CHECK(!ideal_contains_ideal(H.icomplexification(), r.ideal));
    }

    TEST_CASE("a Levi-flat hyperplane has no degenerate points") {
        auto ctx = make_context(2, 2);
        // Im(z1) = 0 in C^2.
        LeviFlatModel H = LeviFlatModel::from_defining_polynomials(
            ctx, {P("z1-~z1", ctx)}, 1);
        SdReport r = degenerate_locus(H);
        CHECK(r.empty);
        CHECK(r.codim_at_least_two);
    }

    TEST_CASE("degenerate locus of the second example is the cone vertex") {
        LeviFlatModel H = make_ex2();
        SdReport r = degenerate_locus(H);
        CHECK(r.codim_at_least_two);
        CHECK(r.icomp_dim == 3);
        CHECK(r.dim <= 1);
        // The support collapses to z1 = z2 = z3 = z4 = 0.
        auto zctx = H.zcontext();
        Ideal axis(zctx, {P("z1", zctx), P("z2", zctx), P("z3", zctx), P("z4", zctx)});
        CHECK(ideal_contains_ideal(axis, r.ideal));
    }

    TEST_CASE("Segre symmetry on pinned pairs and random samples") {
        LeviFlatModel H = make_ex1();
        CHECK(segre_symmetry_check(H, pt4(0, 1, 1, 0), pt4(0, 2, 2, 0)));
        CHECK(point_in_segre(H, pt4(0, 1, 1, 0), pt4(0, 2, 2, 0)));
        CHECK(segre_symmetry_check(H, pt4(0, 1, 1, 0), pt4(0, 1, 1, 0)));

        // A degenerate p lies on every Segre variety.
        Point deg = pt4(5, 0, 0, 0);
        Rng rng(73);
        for (int k = 0; k < 20; ++k) {
            Point q = {rng.coefficient(), rng.coefficient(), rng.coefficient(), GR(0)};
            CHECK(point_in_segre(H, deg, q)); // q in Sigma_deg
            CHECK(point_in_segre(H, q, deg)); // and p in Sigma_q
            CHECK(segre_symmetry_check(H, deg, q));
        }

        // 100 random pairs on the intrinsic complexification.
        for (int k = 0; k < 100; ++k) {
            Point p = {rng.coefficient(), rng.coefficient(), rng.coefficient(), GR(0)};
            Point q = {rng.coefficient(), rng.coefficient(), rng.coefficient(), GR(0)};
            CHECK(segre_symmetry_check(H, p, q));
        }
    }

    TEST_CASE("codimension dichotomy on the intrinsic complexification") {
        LeviFlatModel H = make_ex1();
        Rng rng(79);
        SdReport sd = degenerate_locus(H);
        for (int k = 0; k < 25; ++k) {
            Point p = {rng.coefficient(), rng.coefficient(), rng.coefficient(), GR(0)};
            SegreResult r = segre_variety(H, p);
            bool on_sd = vanishes_on_generators(sd.ideal, p);
            if (on_sd) {
                CHECK(r.codim_in_icomp == 0);
                CHECK(ideal_equal(r.ideal, H.icomplexification()));
            } else {
                CHECK(r.codim_in_icomp == 1);
            }
        }
    }

    TEST_CASE("leaf verification for the line family") {
        LeviFlatModel H = make_ex1();
        auto zctx = H.zcontext();

        // c = 5: a genuine Levi leaf.
        Ideal leaf5(zctx, {P("z3-5*z2", zctx), P("z4", zctx)});
        LeafReport ok = verify_leaf(H, leaf5, pt4(0, 1, 5, 0));
        CHECK(ok.contained_in_model);
        CHECK(ok.contains_segre_slice);
        CHECK(ok.dimension_ok);
        CHECK(ok.leaf_dim == 2);
        CHECK(ok.icomp_dim == 3);
        CHECK(ok.ok());

        // c = i: a complex slice that is not a Levi leaf.
        Ideal leafi(zctx, {P("z3-i*z2", zctx), P("z4", zctx)});
        LeafReport bad = verify_leaf(H, leafi, pt4(0, 0, 0, 0));
        CHECK(!bad.contained_in_model);
        CHECK(!bad.containment_witness.empty());
        CHECK(!bad.ok());
    }

    TEST_CASE("leaf verification for the plane family") {
        LeviFlatModel H = make_ex2();
        auto zctx = H.zcontext();
        // c = 2: z1 + 2 z2 + 4 z3 = 0, pick the point (-6, 1, 1, 0).
        Ideal leaf(zctx, {P("z1+2*z2+4*z3", zctx), P("z4", zctx)});
        LeafReport r = verify_leaf(H, leaf, pt4(-6, 1, 1, 0));
        CHECK(r.contained_in_model);
        CHECK(r.contains_segre_slice);
        CHECK(r.dimension_ok);
        CHECK(r.ok());
    }

    TEST_CASE("every sampled Segre slice contains its Levi leaf") {
        LeviFlatModel H = make_ex1();
        auto zctx = H.zcontext();
        Rng rng(83);
        for (int k = 0; k < 10; ++k) {
            long num = rng.integer(-6, 6);
            long den = rng.integer(1, 3);
            std::string c = std::to_string(num) + "/" + std::to_string(den);
            Point p = {GR(rng.integer(-3, 3)), GR(den), GRq(num, 1), GR(0)};
            REQUIRE(H.contains_point(p));
            Ideal leaf(zctx, {P("z3-(" + c + ")*z2", zctx), P("z4", zctx)});
            REQUIRE(vanishes_on_generators(leaf, p));
            SegreResult sigma = segre_variety(H, p);
            CHECK(ideal_contains_ideal(leaf, sigma.ideal));
        }
    }
}
