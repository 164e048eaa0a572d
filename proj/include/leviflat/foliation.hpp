#ifndef LEVIFLAT_FOLIATION_HPP
#define LEVIFLAT_FOLIATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leviflat/hermitian.hpp"

namespace lf {

// Polynomial vector field: one component per context variable.
class VectorField {
public:
    VectorField(ContextPtr ctx, std::vector<Polynomial> components);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& components() const { return comps_; }
    const Polynomial& component(std::size_t k) const { return comps_.at(k); }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    // Derivation: v(f) = sum_k v_k df/dx_k.
    Polynomial apply(const Polynomial& f) const;

    VectorField operator+(const VectorField& o) const;
    VectorField operator-() const;

private:
    ContextPtr ctx_;
    std::vector<Polynomial> comps_;
};

// [u, v](f) = u(v(f)) - v(u(f)), componentwise u(v_k) - v(u_k).
VectorField lie_bracket(const VectorField& u, const VectorField& v);

// The field v + v* on the (z, w) context: z-components are the components
// of v, w-components their mirrors.
VectorField complexified_double(const VectorField& v, const ContextPtr& full_ctx);

// Alternating polynomial form of fixed degree; coefficients are stored on
// strictly increasing index tuples, with sign normalization on insertion.
class DifferentialForm {
public:
    using IndexTuple = std::vector<std::size_t>;

    DifferentialForm(ContextPtr ctx, int degree);

    static DifferentialForm zero(ContextPtr ctx, int degree) { return DifferentialForm(ctx, degree); }

    const ContextPtr& context() const { return ctx_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<IndexTuple, Polynomial>& terms() const { return coeffs_; }

    Polynomial coefficient(const IndexTuple& sorted) const {
        auto it = coeffs_.find(sorted);
        return it == coeffs_.end() ? Polynomial(ctx_) : it->second;
    }

    // Add c * dx_{t0} ^ ... ^ dx_{tk}; the tuple may be unsorted and is
    // normalized (repeated indices vanish).
    void add_term(IndexTuple t, const Polynomial& c);

    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-() const;
    DifferentialForm scaled(const Polynomial& f) const;

    DifferentialForm wedge(const DifferentialForm& o) const;
    DifferentialForm exterior_derivative() const;

    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
        return a.degree_ == b.degree_ && same_context(a.ctx_, b.ctx_) && a.coeffs_ == b.coeffs_;
    }

private:
    ContextPtr ctx_;
    int degree_;
    std::map<IndexTuple, Polynomial> coeffs_;
};

// Distribution presented either by spanning vector fields or by degree-one
// forms cutting out its tangent spaces.
class FoliationPresentation {
public:
    enum class Kind { Fields, Forms };

    static FoliationPresentation from_fields(std::vector<VectorField> fields);
    static FoliationPresentation from_forms(std::vector<DifferentialForm> one_forms);

    Kind kind() const { return kind_; }
    const ContextPtr& context() const { return ctx_; }
    const std::vector<VectorField>& fields() const { return fields_; }
    const std::vector<DifferentialForm>& forms() const { return forms_; }

    // Spanning fields for membership-style tests.  A fields presentation
    // returns its own list; a single 1-form w = sum a_k dx_k is converted to
    // the kernel fields a_i d_j - a_j d_i.  Multiple forms have no general
    // conversion here and raise InputError.
    std::vector<VectorField> spanning_fields() const;

private:
    FoliationPresentation(Kind k, ContextPtr ctx) : kind_(k), ctx_(std::move(ctx)) {}

    Kind kind_;
    ContextPtr ctx_;
    std::vector<VectorField> fields_;
    std::vector<DifferentialForm> forms_;
};

// Frobenius integrability.  Fields: every Lie bracket stays in the generic
// span (all (r+1)-minors with the fields vanish identically, r the generic
// rank).  Forms w_1..w_k: dw_i ^ w_1 ^ ... ^ w_k = 0 for each i.
bool is_integrable(const FoliationPresentation& F);

// Ideal of the locus where the presentation drops rank: maximal minors of
// the component matrix for fields, all coefficients for forms.  Reports the
// codimension-two convention check.
struct SingularLocusReport {
    Ideal ideal;
    bool empty = false;
    int dim = -1; // -1 when empty
    int ambient_dim = 0;
    bool codim_at_least_two = false;
    int codim() const { return ambient_dim - dim; }
};
SingularLocusReport singular_locus(const FoliationPresentation& F, const GBOptions& opts = {});

// v(g) in I for every spanning field v and generator g.
bool is_invariant(const Ideal& I, const FoliationPresentation& F, const GBOptions& opts = {});

// Mirror presentation: every component/coefficient polynomial mirrored and
// re-indexed to the w-block of the complexified context.
FoliationPresentation mirror_foliation(const FoliationPresentation& F);

// Tangency test through the product foliation: for every field v, the
// doubled field v + v* maps every generator of I(H^C) into I(H^C).
struct TangencyReport {
    bool tangent = false;
    std::string witness; // nonzero normal form when not tangent
};
TangencyReport tangent_to_leviflat(const FoliationPresentation& F, const LeviFlatModel& H,
                                   const GBOptions& opts = {});

// den * v(num) - num * v(den) in ambient for every spanning field v,
// i.e. v(num/den) = 0 on the ambient variety.
struct FirstIntegralReport {
    bool ok = false;
    bool constant = false; // degenerate: num/den is a constant
    std::string witness;
};
FirstIntegralReport verify_first_integral(const Polynomial& num, const Polynomial& den,
                                          const FoliationPresentation& F, const Ideal& ambient,
                                          const GBOptions& opts = {});

// Containment of H in the closure of R^{-1}(S) for a rational map
// R = num/den and a real curve S given by a hermitian polynomial in one
// variable pair (u, ~u): substitute u := R, clear denominators and test the
// cleared polynomial against I(H^C).
struct LevelSetReport {
    bool contained = false;
    std::string witness;
};
LevelSetReport verify_level_set_containment(const LeviFlatModel& H, const Polynomial& num,
                                            const Polynomial& den, const HermitianPoly& curve,
                                            const GBOptions& opts = {});

// Implicit equation of the web swept by a parameterized family: the
// resultant in the parameter of the family and its differential.  The
// equation lives in a dedicated context carrying dz-symbols.
struct WebResult {
    ContextPtr web_ctx;     // z1..zN, dz1..dzN
    Polynomial equation;    // homogeneous of degree `order` in the dz-block
    int order = 0;          // parameter degree of the family
};
WebResult web_from_family(const Polynomial& family, std::size_t param_index);

// Substitute one variable out along a linear hyperplane h = 0 (the pivot is
// the highest-priority variable with nonzero linear coefficient).
struct RestrictedIdeal {
    Ideal ideal;
    std::size_t dropped_var;
};
RestrictedIdeal restrict_to_hyperplane(const Ideal& I, const Polynomial& hyperplane,
                                       const GBOptions& opts = {});

struct RestrictedFoliation {
    FoliationPresentation foliation;
    SingularLocusReport singular;
    bool generic; // restricted singular locus keeps codimension >= 2
    std::size_t dropped_var;
};
RestrictedFoliation restrict_to_hyperplane(const FoliationPresentation& F,
                                           const Polynomial& hyperplane, const GBOptions& opts = {});

} // namespace lf

#endif
