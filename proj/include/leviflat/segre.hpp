#ifndef LEVIFLAT_SEGRE_HPP
#define LEVIFLAT_SEGRE_HPP

#include <string>

#include "leviflat/hermitian.hpp"

namespace lf {

enum class SegreClass { Ordinary, Degenerate };

inline const char* to_string(SegreClass c) {
    return c == SegreClass::Ordinary ? "ordinary" : "degenerate";
}

// Segre variety at a point of the intrinsic complexification: the slice
// {phi(z, conj p) = 0} intersected with H^i, represented by an ideal in the
// z-context that contains I(H^i).  The empty variety carries dimension -1.
struct SegreResult {
    Point point;
    Ideal ideal;
    int dim = 0;
    int icomp_dim = 0;
    int codim_in_icomp = 0;
    SegreClass classification = SegreClass::Ordinary;
};

// Whether p satisfies every generator of I; generators suffice.
bool vanishes_on_generators(const Ideal& I, const Point& p);

SegreResult segre_variety(const LeviFlatModel& H, const Point& p, const GBOptions& opts = {});

struct Classification {
    SegreClass classification;
    int codim_in_icomp;
};
Classification classify_point(const LeviFlatModel& H, const Point& p, const GBOptions& opts = {});

// Pointwise Segre membership q in Sigma_p, by exact evaluation.
bool point_in_segre(const LeviFlatModel& H, const Point& p, const Point& q);

// (q in Sigma_p) <=> (p in Sigma_q); returns the equivalence, which the
// symmetry property asserts always true.
bool segre_symmetry_check(const LeviFlatModel& H, const Point& p, const Point& q);

// The locus of Segre-degenerate points: reduce each complexified generator
// modulo I(H^i) with the w-variables as coefficients, collect the
// w-coefficient polynomials of the normal forms, mirror them into the
// z-block, and intersect with H^i (ideal sum).  Cached on the model.
struct SdReport {
    Ideal ideal;
    int dim = -1;        // -1 encodes the empty locus
    int icomp_dim = 0;
    bool empty = false;
    bool codim_at_least_two = false;
    int codim() const { return icomp_dim - dim; }
};
SdReport degenerate_locus(const LeviFlatModel& H, const GBOptions& opts = {});

// Verification report for a claimed Levi leaf through p, given as a complex
// ideal in the z-context.
struct LeafReport {
    bool contained_in_model = false;   // leaf, as a real set, lies in H
    std::string containment_witness;   // nonzero normal form when it fails
    bool contains_segre_slice = false; // I(Sigma_p) subset of I(leaf)
    std::string segre_witness;
    bool dimension_ok = false;         // dim leaf = dim H^i - 1
    int leaf_dim = -1;
    int icomp_dim = -1;
    bool ok() const { return contained_in_model && contains_segre_slice && dimension_ok; }
};
LeafReport verify_leaf(const LeviFlatModel& H, const Ideal& leaf, const Point& p,
                       const GBOptions& opts = {});

} // namespace lf

#endif
