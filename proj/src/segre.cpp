#include "leviflat/segre.hpp"

#include <map>

#include "leviflat/parser.hpp"

namespace lf {

bool vanishes_on_generators(const Ideal& I, const Point& p) {
    for (const Polynomial& g : I.generators())
        if (!g.evaluate(p).is_zero()) return false;
    return true;
}

namespace {

Point conjugate(const Point& p) {
    Point q;
    q.reserve(p.size());
    for (const auto& c : p) q.push_back(c.conj());
    return q;
}

void require_on_icomp(const LeviFlatModel& H, const Point& p, const GBOptions& opts) {
    if (p.size() != H.zcontext()->size())
        throw InputError("point length does not match the ambient dimension");
    if (!vanishes_on_generators(H.icomplexification(opts), p))
        throw InputError("point is not on the intrinsic complexification");
}

int dimension_or_empty(const Ideal& I, const GBOptions& opts) {
    auto d = krull_dimension(I, opts);
    return d ? *d : -1;
}

// Substituted slice generators phi^C(z, conj p).
std::vector<Polynomial> slice_generators(const LeviFlatModel& H, const Point& p) {
    Point wbar = conjugate(p);
    std::vector<Polynomial> out;
    out.reserve(H.generators().size());
    for (const HermitianPoly& g : H.generators())
        out.push_back(substitute_w_point(g.body(), wbar, H.zcontext()));
    return out;
}

} // namespace

SegreResult segre_variety(const LeviFlatModel& H, const Point& p, const GBOptions& opts) {
    require_on_icomp(H, p, opts);
    const Ideal& icomp = H.icomplexification(opts);

    std::vector<Polynomial> gens = icomp.generators();
    for (Polynomial& s : slice_generators(H, p)) gens.push_back(std::move(s));
    Ideal sigma(H.zcontext(), std::move(gens));

    auto icomp_dim = krull_dimension(icomp, opts);
    if (!icomp_dim) throw InputError("intrinsic complexification is empty");
    int dim = dimension_or_empty(sigma, opts);
    int codim = *icomp_dim - dim;
    SegreClass cls = codim == 0 ? SegreClass::Degenerate : SegreClass::Ordinary;
    return SegreResult{p, std::move(sigma), dim, *icomp_dim, codim, cls};
}

Classification classify_point(const LeviFlatModel& H, const Point& p, const GBOptions& opts) {
    SegreResult r = segre_variety(H, p, opts);
    return {r.classification, r.codim_in_icomp};
}

bool point_in_segre(const LeviFlatModel& H, const Point& p, const Point& q) {
    if (!vanishes_on_generators(H.icomplexification(), q)) return false;
    Point full = q;
    for (const auto& c : conjugate(p)) full.push_back(c);
    for (const HermitianPoly& g : H.generators())
        if (!g.body().evaluate(full).is_zero()) return false;
    return true;
}

bool segre_symmetry_check(const LeviFlatModel& H, const Point& p, const Point& q) {
    require_on_icomp(H, p, {});
    require_on_icomp(H, q, {});
    return point_in_segre(H, p, q) == point_in_segre(H, q, p);
}

SdReport degenerate_locus(const LeviFlatModel& H, const GBOptions& opts) {
    const Ideal& icomp = H.icomplexification(opts);

    auto icomp_dim = krull_dimension(icomp, opts);
    if (!icomp_dim) throw InputError("intrinsic complexification is empty");

    if (!H.degenerate_locus_cache()) {
        // The z-block basis of I(H^i), embedded in the full context, is a
        // basis for the block order with the z-block leading, so normal
        // forms reduce the z-part fully and leave w-coefficients intact.
        const GroebnerBasis& zgb = icomp.basis(TermOrder::grevlex(), opts);
        std::vector<Polynomial> embedded;
        embedded.reserve(zgb.elements.size());
        for (const Polynomial& g : zgb.elements) embedded.push_back(embed_in_full(g, H.context()));
        GroebnerBasis full_basis{std::move(embedded), TermOrder::elim_z()};

        std::vector<Polynomial> sd_gens = icomp.generators();
        ReductionBudget budget(opts.max_reductions);
        for (const HermitianPoly& g : H.generators()) {
            Polynomial nf = normal_form(g.body(), full_basis, budget);
            // Coefficients of the z-monomials are polynomials in w.
            std::map<Monomial, Polynomial> coeffs;
            std::size_t n = H.context()->n_z();
            for (const auto& [m, c] : nf.terms()) {
                Monomial zpart(m.nvars()), wpart(m.nvars());
                for (std::size_t k = 0; k < m.nvars(); ++k) (k < n ? zpart[k] : wpart[k]) = m[k];
                auto it = coeffs.find(zpart);
                if (it == coeffs.end()) it = coeffs.emplace(zpart, Polynomial(H.context())).first;
                it->second.add_term(wpart, c);
            }
            for (auto& [zm, cw] : coeffs) {
                // Mirror the w-coefficient into the z-block of the z-context.
                Polynomial mirrored = restrict_to_z(cw.mirror(), H.zcontext());
                sd_gens.push_back(std::move(mirrored));
            }
        }
        // Present the locus through its reduced basis.
        Ideal raw(H.zcontext(), std::move(sd_gens));
        const GroebnerBasis& gb = raw.basis(TermOrder::grevlex(), opts);
        H.store_degenerate_locus(Ideal(H.zcontext(), gb.elements));
    }

    Ideal sd = *H.degenerate_locus_cache();
    auto sd_dim = krull_dimension(sd, opts);
    bool empty = !sd_dim.has_value();
    int dim = sd_dim ? *sd_dim : -1;
    bool codim_ok = empty || (*icomp_dim - dim) >= 2;
    return SdReport{std::move(sd), dim, *icomp_dim, empty, codim_ok};
}

LeafReport verify_leaf(const LeviFlatModel& H, const Ideal& leaf, const Point& p,
                       const GBOptions& opts) {
    require_same_context(leaf.context(), H.zcontext(), "verify_leaf");
    if (p.size() != H.zcontext()->size())
        throw InputError("point length does not match the ambient dimension");
    if (!vanishes_on_generators(leaf, p)) throw InputError("point is not on the claimed leaf");
    require_on_icomp(H, p, opts);

    LeafReport r;

    // (a) The leaf lies in H as a real set: every generator's
    // complexification is in leaf(z) + mirror(leaf)(w).
    std::vector<Polynomial> prod_gens;
    for (const Polynomial& g : leaf.generators()) {
        prod_gens.push_back(embed_in_full(g, H.context()));
        prod_gens.push_back(mirror_into_w(g, H.context()));
    }
    Ideal leaf_times_mirror(H.context(), std::move(prod_gens));
    r.contained_in_model = true;
    for (const HermitianPoly& g : H.generators()) {
        Polynomial nf = normal_form(g.body(), leaf_times_mirror, opts);
        if (!nf.is_zero()) {
            r.contained_in_model = false;
            r.containment_witness = print_poly(nf);
            break;
        }
    }

    // (b) The leaf lies in the Segre variety at p: I(Sigma_p) in I(leaf).
    SegreResult sigma = segre_variety(H, p, opts);
    r.contains_segre_slice = true;
    for (const Polynomial& g : sigma.ideal.generators()) {
        Polynomial nf = normal_form(g, leaf, opts);
        if (!nf.is_zero()) {
            r.contains_segre_slice = false;
            r.segre_witness = print_poly(nf);
            break;
        }
    }

    // (c) Dimension count: a leaf has codimension one in H^i.
    r.icomp_dim = sigma.icomp_dim;
    r.leaf_dim = dimension_or_empty(leaf, opts);
    r.dimension_ok = r.leaf_dim == r.icomp_dim - 1;
    return r;
}

} // namespace lf
