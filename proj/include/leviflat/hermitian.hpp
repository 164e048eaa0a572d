#ifndef LEVIFLAT_HERMITIAN_HPP
#define LEVIFLAT_HERMITIAN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leviflat/groebner.hpp"
#include "leviflat/polynomial.hpp"

namespace lf {

using Point = std::vector<GaussianRational>;

// Polynomial in (z, w) with w read as the conjugate of z: a real-analytic
// polynomial function of z.  Carries a reality certificate: the function is
// real-valued iff the coefficient table satisfies a(mu,nu) = conj(a(nu,mu)),
// i.e. iff the body is fixed by its mirror.
class HermitianPoly {
public:
    explicit HermitianPoly(Polynomial body) : body_(std::move(body)) {
        if (!body_.context()->has_w_block())
            throw InputError("hermitian polynomial requires a (z, w) context");
        is_real_ = body_ == body_.mirror();
    }

    const Polynomial& body() const { return body_; }
    const ContextPtr& context() const { return body_.context(); }
    bool is_real() const { return is_real_; }
    bool is_zero() const { return body_.is_zero(); }

    // Value of the function at z = p, i.e. the body at (p, conj p).
    GaussianRational evaluate_at(const Point& p) const {
        const auto& ctx = body_.context();
        if (p.size() != ctx->n_z()) throw InputError("evaluate_at: point length must be n_z");
        Point full = p;
        full.reserve(ctx->size());
        for (const auto& c : p) full.push_back(c.conj());
        return body_.evaluate(full);
    }

    // Real and imaginary hermitian parts, both certified real.
    std::pair<HermitianPoly, HermitianPoly> split_real_imaginary() const {
        Polynomial m = body_.mirror();
        GaussianRational half(mpq_class(1, 2));
        GaussianRational minus_half_i(mpq_class(0), mpq_class(-1, 2));
        Polynomial re = (body_ + m).scaled(half);
        Polynomial im = (body_ - m).scaled(minus_half_i);
        return {HermitianPoly(std::move(re)), HermitianPoly(std::move(im))};
    }

    friend bool operator==(const HermitianPoly& a, const HermitianPoly& b) {
        return a.body_ == b.body_;
    }

private:
    Polynomial body_;
    bool is_real_;
};

// Mirror image phi*: conjugated coefficients with the z/w roles exchanged.
inline HermitianPoly mirror(const HermitianPoly& p) { return HermitianPoly(p.body().mirror()); }

// Formal substitution conj(z) -> w.  On this representation the
// complexification is the body itself, now read as a holomorphic function
// of the 2N independent variables (z, w).  Callers surface a warning when
// the input is not certified real.
inline Polynomial complexify(const HermitianPoly& p) { return p.body(); }

// Inverse reading: fold the w-block back onto conjugates (substitute
// w := conj z symbolically).
inline HermitianPoly diagonal_restrict(const Polynomial& p) { return HermitianPoly(p); }

// Decomposition into bihomogeneous components, sorted by bidegree.
std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, HermitianPoly>>
bihomogeneous_components(const HermitianPoly& p);

// Ideal of the complexified variety in the (z, w) context, generated by the
// complexifications of the (real) generators.
Ideal complexify_variety(const std::vector<HermitianPoly>& gens);

// Real-algebraic model of a Levi-flat subset: a generating map of certified
// real polynomials plus write-once caches for the derived ideals.
class LeviFlatModel {
public:
    LeviFlatModel(ContextPtr full_ctx, std::vector<HermitianPoly> gens,
                  std::optional<int> levi_dim = std::nullopt);

    // Split arbitrary (possibly complex-valued) defining polynomials into
    // real/imaginary hermitian pairs and keep the nonzero parts.  Complex
    // equations like z4 = 0 thus contribute the pair Re z4, Im z4.
    static LeviFlatModel from_defining_polynomials(ContextPtr full_ctx, std::vector<Polynomial> raw,
                                                   std::optional<int> levi_dim = std::nullopt);

    const ContextPtr& context() const { return ctx_; }
    const ContextPtr& zcontext() const { return zctx_; }
    const std::vector<HermitianPoly>& generators() const { return gens_; }
    std::optional<int> levi_dimension() const { return levi_dim_; }

    // Whether all generators vanish at z = p.
    bool contains_point(const Point& p) const;

    // I(H^C), cached.
    const Ideal& complexified(const GBOptions& opts = {}) const;

    // I(H^i): w-block elimination of I(H^C), in the z-subcontext, cached.
    const Ideal& icomplexification(const GBOptions& opts = {}) const;

    // Cache slot for the Segre-degenerate locus (filled by the segre module).
    const std::optional<Ideal>& degenerate_locus_cache() const { return sd_; }
    void store_degenerate_locus(Ideal sd) const { sd_ = std::move(sd); }

private:
    ContextPtr ctx_;
    ContextPtr zctx_;
    std::vector<HermitianPoly> gens_;
    std::optional<int> levi_dim_;
    mutable std::optional<Ideal> complexified_;
    mutable std::optional<Ideal> icomp_;
    mutable std::optional<Ideal> sd_;
};

// Intrinsic complexification with its dimension report.  The dimension must
// equal levi dimension + 1 when the latter is declared; the mismatch is
// reported, not enforced.
struct IcompReport {
    Ideal ideal;
    std::optional<int> dim;
    std::optional<int> expected_dim;
    bool dim_matches() const { return !dim || !expected_dim || *dim == *expected_dim; }
};
IcompReport intrinsic_complexification(const LeviFlatModel& H, const GBOptions& opts = {});

// Projective-cone certification: every generator must be bihomogeneous of
// balanced bidegree (d, d), or a conjugate pair of components (d,0), (0,d)
// as produced by splitting a homogeneous complex equation.
struct ConeCheck {
    struct GeneratorVerdict {
        bool ok;
        std::optional<std::uint64_t> degree;
        std::string reason; // empty when ok
    };
    std::vector<GeneratorVerdict> generators;
    bool accepted;
};
ConeCheck projective_cone_check(const std::vector<HermitianPoly>& gens);

// Checked constructor: certifies the cone condition and builds the model.
// Throws InputError when a generator is rejected.
LeviFlatModel projective_cone(ContextPtr full_ctx, std::vector<HermitianPoly> gens,
                              std::optional<int> levi_dim = std::nullopt);

} // namespace lf

#endif
