#ifndef LF_TEST_MODELS_HPP
#define LF_TEST_MODELS_HPP

// Programmatic versions of the worked example models, shared by the module
// test suites.  The CLI fixtures mirror these in the model-file format.

#include "leviflat/foliation.hpp"
#include "leviflat/hermitian.hpp"
#include "leviflat/levicheck.hpp"
#include "test_support.hpp"

namespace lftest {

// Cone over a surface in projective 3-space, swept by the line family
// z3 = c z2 inside the hyperplane z4 = 0.
inline LeviFlatModel make_ex1() {
    auto ctx = make_context(4, 4);
    return LeviFlatModel::from_defining_polynomials(
        ctx, {P("~z3*z2-~z2*z3", ctx), P("z4", ctx)}, 2);
}

inline FoliationPresentation ex1_fields() {
    auto zctx = make_context(4);
    std::vector<VectorField> fields;
    fields.emplace_back(zctx, std::vector<Polynomial>{P("1", zctx), P("0", zctx), P("0", zctx),
                                                      P("0", zctx)});
    fields.emplace_back(zctx, std::vector<Polynomial>{P("0", zctx), P("z2", zctx), P("z3", zctx),
                                                      P("0", zctx)});
    return FoliationPresentation::from_fields(std::move(fields));
}

inline FoliationPresentation ex1_form() {
    auto zctx = make_context(4);
    DifferentialForm w(zctx, 1);
    w.add_term({2}, P("z2", zctx));  // z2 dz3
    w.add_term({1}, P("-z3", zctx)); // - z3 dz2
    return FoliationPresentation::from_forms({w});
}

inline LeafFamily ex1_family() {
    auto fctx = make_context(5, 0, {"z1", "z2", "z3", "z4", "c"});
    LeafFamily fam{fctx, 4, {}, {}};
    fam.members.push_back(P("z3-c*z2", fctx));
    fam.members.push_back(P("z4", fctx));
    return fam;
}

// Cone swept by the plane family z1 + c z2 + c^2 z3 = 0 in z4 = 0; the
// degree-(2,2) generator is the c-resultant of the family with its
// conjugate.
inline LeviFlatModel make_ex2() {
    auto ctx = make_context(4, 4);
    Polynomial gen = P(
        "z1^2*~z3^2-z1*~z3*z2*~z2+z1*z3*~z2^2-2*z1*~z1*z3*~z3"
        "+~z1*~z3*z2^2-z3*~z1*z2*~z2+z3^2*~z1^2",
        ctx);
    return LeviFlatModel::from_defining_polynomials(ctx, {gen, P("z4", ctx)}, 2);
}

inline LeafFamily ex2_family() {
    auto fctx = make_context(5, 0, {"z1", "z2", "z3", "z4", "c"});
    LeafFamily fam{fctx, 4, {}, {}};
    fam.members.push_back(P("z1+c*z2+c^2*z3", fctx));
    fam.members.push_back(P("z4", fctx));
    return fam;
}

// Candidate single foliations carved from one branch of the 2-web: the
// plane directions for a fixed parameter value.
inline FoliationPresentation ex2_branch_candidate(long c) {
    auto zctx = make_context(4);
    std::string cs = std::to_string(c);
    std::vector<VectorField> fields;
    fields.emplace_back(zctx, std::vector<Polynomial>{P(cs, zctx), P("-1", zctx), P("0", zctx),
                                                      P("0", zctx)});
    fields.emplace_back(zctx, std::vector<Polynomial>{P(cs + "*" + cs, zctx), P("0", zctx),
                                                      P("-1", zctx), P("0", zctx)});
    return FoliationPresentation::from_fields(std::move(fields));
}

// Quadric model: the circle-parameter plane family lifted to the cone over
// the quadric z1 z4 = z2 z3.
inline LeviFlatModel make_ex3() {
    auto ctx = make_context(4, 4);
    Polynomial gen = P("(z1*~z3-~z1*z3)^2+(~z1*z2-z1*~z2)^2-(z2*~z3-~z2*z3)^2", ctx);
    return LeviFlatModel::from_defining_polynomials(ctx, {gen, P("z1*z4-z2*z3", ctx)}, 2);
}

inline LeafFamily ex3_family() {
    auto fctx = make_context(6, 0, {"z1", "z2", "z3", "z4", "x", "y"});
    LeafFamily fam{fctx, 4, {}, {}};
    fam.members.push_back(P("z1-x*z2-y*z3", fctx));
    fam.members.push_back(P("z1*z4-z2*z3", fctx));
    fam.constraints.push_back(P("x^2+y^2-1", fctx));
    return fam;
}

} // namespace lftest

#endif
