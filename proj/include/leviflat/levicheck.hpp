#ifndef LEVIFLAT_LEVICHECK_HPP
#define LEVIFLAT_LEVICHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "leviflat/hermitian.hpp"
#include "leviflat/linalg.hpp"
#include "leviflat/segre.hpp"

namespace lf {

// Exact tangent-space data of the model at a rational point of H.
//
// leaf_tangent is T_pH intersected with J T_pH, the candidate Levi
// direction, computed as the kernel of the holomorphic differentials of the
// generators.  cr_dimension is the complex dimension of T_pH + J T_pH (the
// smallest complex subspace through the tangent space); at a regular point
// of a model of Levi dimension n it equals n + 1.
struct CRReport {
    Point point;
    int cr_dimension = 0;
    int leaf_tangent_dim = 0;
    Matrix leaf_tangent_basis; // complex kernel vectors, length n_z each
    int jacobian_rank = 0;
    std::optional<bool> regular; // set when the model declares its Levi dimension
};

CRReport cr_tangent(const LeviFlatModel& H, const Point& p);

// Leaf family: defining polynomials over a context of z-variables plus
// parameter variables, with optional polynomial constraints among the
// parameters alone (e.g. a parameter curve).
struct LeafFamily {
    ContextPtr family_ctx;              // z-block followed by parameter variables
    std::size_t n_ambient = 0;          // number of z-variables
    std::vector<Polynomial> members;    // may involve parameters
    std::vector<Polynomial> constraints; // parameters only

    std::size_t n_params() const { return family_ctx->size() - n_ambient; }

    // Leaf ideal at specific parameter values, over the given z-context.
    Ideal leaf_at(const std::vector<GaussianRational>& params, const ContextPtr& zctx) const;

    bool constraints_hold(const std::vector<GaussianRational>& params) const;
};

struct LeviSample {
    std::vector<GaussianRational> params;
    Point point;
};

struct SampleVerdict {
    LeviSample sample;
    bool params_on_constraints = false;
    bool point_on_model = false;
    bool point_on_leaf = false;
    LeafReport leaf;      // meaningful when the preconditions hold
    bool leaf_checked = false;
    bool leaf_dim_is_n = false;
    bool tangent_matches_cr = false;
    int cr_dimension = -1;
    std::string note;
    bool ok() const {
        return params_on_constraints && point_on_model && point_on_leaf && leaf_checked &&
               leaf.ok() && leaf_dim_is_n && tangent_matches_cr;
    }
};

struct LeviCheckReport {
    std::vector<SampleVerdict> samples;
    bool all_ok = true;
};

// Consistency of a claimed Levi foliation with the definition, sample by
// sample: containment in the model, correct leaf dimension, and exact
// equality of the leaf tangent with the CR tangent intersection.
LeviCheckReport check_levi_foliation(const LeviFlatModel& H, const LeafFamily& family,
                                     const std::vector<LeviSample>& samples,
                                     const GBOptions& opts = {});

// How many leaves of the family pass through p: solves the parameter
// conditions exactly and counts distinct real parameter solutions.
struct MultiLeafResult {
    bool degenerate = false; // p lies in the family base locus
    int real_count = 0;      // exact for one parameter; verified count otherwise
    bool may_have_more = false; // non-rational solutions were detected but not enumerated
    std::vector<std::vector<GaussianRational>> parameter_solutions; // rational ones
    std::vector<Ideal> leaves; // leaf ideals for the rational solutions
    std::vector<std::string> notes;
};

MultiLeafResult multi_leaf_detector(const LeviFlatModel& H, const LeafFamily& family,
                                    const Point& p, const GBOptions& opts = {});

} // namespace lf

#endif
