#include "leviflat/hermitian.hpp"

#include <algorithm>
#include <map>

#include "leviflat/parser.hpp"

namespace lf {

std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, HermitianPoly>>
bihomogeneous_components(const HermitianPoly& p) {
    const auto& ctx = p.context();
    std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial> parts;
    for (const auto& [m, c] : p.body().terms()) {
        auto bd = m.bidegree(ctx->n_z());
        auto it = parts.find(bd);
        if (it == parts.end()) it = parts.emplace(bd, Polynomial(ctx)).first;
        it->second.add_term(m, c);
    }
    std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, HermitianPoly>> out;
    out.reserve(parts.size());
    for (auto& [bd, poly] : parts) out.emplace_back(bd, HermitianPoly(std::move(poly)));
    return out;
}

Ideal complexify_variety(const std::vector<HermitianPoly>& gens) {
    if (gens.empty()) throw InputError("complexify_variety: empty generator list");
    const ContextPtr& ctx = gens.front().context();
    std::vector<Polynomial> cgens;
    cgens.reserve(gens.size());
    for (const HermitianPoly& g : gens) {
        require_same_context(ctx, g.context(), "complexify_variety");
        if (!g.is_real())
            throw InputError("complexify_variety: generator " + print_poly(g.body(), true) +
                             " is not real-valued");
        cgens.push_back(complexify(g));
    }
    return Ideal(ctx, std::move(cgens));
}

LeviFlatModel::LeviFlatModel(ContextPtr full_ctx, std::vector<HermitianPoly> gens,
                             std::optional<int> levi_dim)
    : ctx_(std::move(full_ctx)), gens_(std::move(gens)), levi_dim_(levi_dim) {
    if (!ctx_->has_w_block()) throw InputError("Levi-flat model requires a (z, w) context");
    zctx_ = z_subcontext(ctx_);
    for (const auto& g : gens_) {
        require_same_context(ctx_, g.context(), "Levi-flat model generator");
        if (!g.is_real())
            throw InputError("model generator " + print_poly(g.body(), true) + " is not real-valued");
    }
    if (gens_.empty()) throw InputError("Levi-flat model requires at least one generator");
}

LeviFlatModel LeviFlatModel::from_defining_polynomials(ContextPtr full_ctx,
                                                       std::vector<Polynomial> raw,
                                                       std::optional<int> levi_dim) {
    std::vector<HermitianPoly> gens;
    for (Polynomial& p : raw) {
        if (p.is_zero()) continue;
        HermitianPoly h(std::move(p));
        auto [re, im] = h.split_real_imaginary();
        if (!re.is_zero()) gens.push_back(std::move(re));
        if (!im.is_zero()) gens.push_back(std::move(im));
    }
    return LeviFlatModel(std::move(full_ctx), std::move(gens), levi_dim);
}

bool LeviFlatModel::contains_point(const Point& p) const {
    for (const auto& g : gens_)
        if (!g.evaluate_at(p).is_zero()) return false;
    return true;
}

const Ideal& LeviFlatModel::complexified(const GBOptions& opts) const {
    (void)opts;
    if (!complexified_) complexified_ = complexify_variety(gens_);
    return *complexified_;
}

const Ideal& LeviFlatModel::icomplexification(const GBOptions& opts) const {
    if (!icomp_) icomp_ = eliminate(complexified(opts), EliminationBlock::W, opts);
    return *icomp_;
}

IcompReport intrinsic_complexification(const LeviFlatModel& H, const GBOptions& opts) {
    const Ideal& icomp = H.icomplexification(opts);
    std::optional<int> dim = krull_dimension(icomp, opts);
    std::optional<int> expected;
    if (H.levi_dimension()) expected = *H.levi_dimension() + 1;
    return IcompReport{icomp, dim, expected};
}

ConeCheck projective_cone_check(const std::vector<HermitianPoly>& gens) {
    ConeCheck out;
    out.accepted = true;
    for (const HermitianPoly& g : gens) {
        ConeCheck::GeneratorVerdict v{false, std::nullopt, ""};
        auto comps = bihomogeneous_components(g);
        if (comps.empty()) {
            v.reason = "zero generator";
        } else if (comps.size() == 1) {
            auto [dz, dw] = comps[0].first;
            if (dz == dw) {
                v.ok = true;
                v.degree = dz;
            } else {
                v.reason = "bidegree (" + std::to_string(dz) + "," + std::to_string(dw) +
                           ") is not balanced";
            }
        } else if (comps.size() == 2) {
            auto a = comps[0].first;
            auto b = comps[1].first;
            // Conjugate pair (d,0), (0,d) from a homogeneous complex equation,
            // in either component order.
            bool pair_da = a.second == 0 && b.first == 0 && a.first == b.second && a.first > 0;
            bool pair_bd = b.second == 0 && a.first == 0 && b.first == a.second && b.first > 0;
            if (pair_da || pair_bd) {
                v.ok = true;
                v.degree = pair_da ? a.first : b.first;
            } else {
                v.reason = "mixed bidegrees (" + std::to_string(a.first) + "," +
                           std::to_string(a.second) + "),(" + std::to_string(b.first) + "," +
                           std::to_string(b.second) + ")";
            }
        } else {
            std::string ds;
            for (const auto& [bd, c] : comps) {
                if (!ds.empty()) ds += ",";
                ds += "(" + std::to_string(bd.first) + "," + std::to_string(bd.second) + ")";
            }
            v.reason = "mixed bidegrees " + ds;
        }
        if (!v.ok) out.accepted = false;
        out.generators.push_back(std::move(v));
    }
    return out;
}

LeviFlatModel projective_cone(ContextPtr full_ctx, std::vector<HermitianPoly> gens,
                              std::optional<int> levi_dim) {
    ConeCheck check = projective_cone_check(gens);
    if (!check.accepted) {
        std::string why;
        for (std::size_t k = 0; k < check.generators.size(); ++k) {
            if (check.generators[k].ok) continue;
            if (!why.empty()) why += "; ";
            why += "generator " + std::to_string(k + 1) + ": " + check.generators[k].reason;
        }
        throw InputError("projective cone rejected: " + why);
    }
    return LeviFlatModel(std::move(full_ctx), std::move(gens), levi_dim);
}

} // namespace lf
