#include "leviflat/groebner.hpp"

#include <algorithm>
#include <functional>
#include <list>
#include <tuple>

namespace lf {

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_context(ctx_, g.context(), "ideal generator");
        gens_.push_back(std::move(g));
    }
}

namespace {

Polynomial make_monic(const Polynomial& p, const MonomialCompare& cmp) {
    auto [m, c] = p.leading_term(cmp);
    if (c.is_one()) return p;
    return p.scaled(GaussianRational(1) / c);
}

// Full division remainder; every coefficient step charges the budget.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialCompare& cmp, ReductionBudget& budget) {
    Polynomial p = f;
    Polynomial r(f.context());
    while (!p.is_zero()) {
        auto [lm, lc] = p.leading_term(cmp);
        bool reduced = false;
        for (const Polynomial& g : basis) {
            const Monomial& gm = g.leading_monomial(cmp);
            if (!gm.divides(lm)) continue;
            budget.charge();
            GaussianRational factor = lc / g.terms().at(gm);
            Monomial shift = lm / gm;
            for (const auto& [m, c] : g.terms()) p.add_term(m * shift, -(c * factor));
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(lm, lc);
            p.add_term(lm, -lc);
        }
    }
    return r;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

// Buchberger's algorithm with the Gebauer-Moeller pair update.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialCompare& cmp,
                                   ReductionBudget& budget) {
    std::vector<Polynomial> basis;
    std::vector<Monomial> lts;
    std::list<Pair> pairs;

    auto add_element = [&](const Polynomial& p) {
        std::size_t t = basis.size();
        Monomial lt = p.leading_monomial(cmp);

        // B criterion: drop an old pair when the new leading term divides
        // its lcm and neither replacing pair shares that lcm.
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Monomial& l = it->lcm;
            if (lt.divides(l) && lts[it->i].lcm(lt) != l && lts[it->j].lcm(lt) != l) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }

        // Candidate pairs with the new element.
        std::vector<Pair> cand;
        cand.reserve(t);
        for (std::size_t i = 0; i < t; ++i) cand.push_back({i, t, lts[i].lcm(lt)});

        // M criterion: discard a candidate whose lcm is properly divisible
        // by another candidate's lcm.
        std::vector<bool> drop(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm) {
                    drop[a] = true;
                    break;
                }
            }
        }
        // F criterion: among equal lcms keep the first.
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                if (!drop[b] && cand[b].lcm == cand[a].lcm) drop[b] = true;
            }
        }
        // Product criterion: coprime leading terms reduce to zero.
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (!drop[a] && lts[cand[a].i].coprime(lt)) drop[a] = true;
        }

        for (std::size_t a = 0; a < cand.size(); ++a)
            if (!drop[a]) pairs.push_back(std::move(cand[a]));

        basis.push_back(make_monic(p, cmp));
        lts.push_back(std::move(lt));
    };

    for (const Polynomial& g : gens) {
        if (!g.is_zero()) add_element(g);
    }

    while (!pairs.empty()) {
        // Normal selection: smallest lcm in the order, ties by index.
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            int c = cmp.cmp(it->lcm, best->lcm);
            if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
        }
        Pair pr = *best;
        pairs.erase(best);

        Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], cmp);
        Polynomial h = reduce_full(s, basis, cmp, budget);
        if (!h.is_zero()) add_element(h);
    }
    return basis;
}

std::vector<Polynomial> autoreduce(std::vector<Polynomial> basis, const MonomialCompare& cmp,
                                   ReductionBudget& budget) {
    // Remove elements whose leading term another element's leading term
    // divides.
    std::vector<Polynomial> kept;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const Monomial& la = basis[a].leading_monomial(cmp);
        bool redundant = false;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (a == b) continue;
            const Monomial& lb = basis[b].leading_monomial(cmp);
            if (lb.divides(la) && (lb != la || b < a)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(basis[a]);
    }
    // Fully reduce each tail against the others.
    std::vector<Polynomial> reduced;
    for (std::size_t a = 0; a < kept.size(); ++a) {
        std::vector<Polynomial> others;
        for (std::size_t b = 0; b < kept.size(); ++b)
            if (b != a) others.push_back(kept[b]);
        Polynomial r = reduce_full(kept[a], others, cmp, budget);
        if (!r.is_zero()) reduced.push_back(make_monic(r, cmp));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x, const Polynomial& y) {
        int c = cmp.cmp(x.leading_monomial(cmp), y.leading_monomial(cmp));
        if (c != 0) return c < 0;
        return x.cmp(y) < 0;
    });
    return reduced;
}

} // namespace

const GroebnerBasis& Ideal::basis(const TermOrder& order, const GBOptions& opts) const {
    if (cache_->gb && cache_->gb->order == order) return *cache_->gb;
    MonomialCompare cmp(order, *ctx_);
    ReductionBudget budget(opts.max_reductions);
    auto raw = buchberger(gens_, cmp, budget);
    GroebnerBasis gb{autoreduce(std::move(raw), cmp, budget), order};
    cache_->gb = std::move(gb);
    return *cache_->gb;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialCompare& cmp) {
    auto [mf, cf] = f.leading_term(cmp);
    auto [mg, cg] = g.leading_term(cmp);
    Monomial l = mf.lcm(mg);
    Polynomial a = f.scaled(GaussianRational(1) / cf);
    Polynomial b = g.scaled(GaussianRational(1) / cg);
    Polynomial sf(f.context()), sg(g.context());
    Monomial qa = l / mf, qb = l / mg;
    for (const auto& [m, c] : a.terms()) sf.add_term(m * qa, c);
    for (const auto& [m, c] : b.terms()) sg.add_term(m * qb, c);
    return sf - sg;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis, ReductionBudget& budget) {
    MonomialCompare cmp(basis.order, *f.context());
    return reduce_full(f, basis.elements, cmp, budget);
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const GBOptions& opts) {
    require_same_context(f.context(), I.context(), "normal form");
    const GroebnerBasis* gb = I.cached_basis();
    if (!gb) gb = &I.basis(opts.default_order, opts);
    ReductionBudget budget(opts.max_reductions);
    return normal_form(f, *gb, budget);
}

bool ideal_contains(const Ideal& I, const Polynomial& f, const GBOptions& opts) {
    if (f.is_zero()) return true;
    return normal_form(f, I, opts).is_zero();
}

bool ideal_contains_ideal(const Ideal& I, const Ideal& J, const GBOptions& opts) {
    for (const Polynomial& g : J.generators())
        if (!ideal_contains(I, g, opts)) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GBOptions& opts) {
    return ideal_contains_ideal(I, J, opts) && ideal_contains_ideal(J, I, opts);
}

bool is_unit_ideal(const Ideal& I, const GBOptions& opts) {
    return ideal_contains(I, Polynomial::constant(I.context(), GaussianRational(1)), opts);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_context(I.context(), J.context(), "ideal sum");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.context(), std::move(gens));
}

bool buchberger_criterion_holds(const GroebnerBasis& basis, const VarContext& ctx,
                                const GBOptions& opts) {
    MonomialCompare cmp(basis.order, ctx);
    ReductionBudget budget(opts.max_reductions);
    const auto& els = basis.elements;
    for (std::size_t i = 0; i < els.size(); ++i) {
        for (std::size_t j = i + 1; j < els.size(); ++j) {
            Polynomial s = s_polynomial(els[i], els[j], cmp);
            if (!reduce_full(s, els, cmp, budget).is_zero()) return false;
        }
    }
    return true;
}

Ideal eliminate(const Ideal& I, EliminationBlock block, const GBOptions& opts) {
    const ContextPtr& ctx = I.context();
    if (!ctx->has_w_block()) throw InputError("eliminate requires a two-block context");
    TermOrder order = block == EliminationBlock::W ? TermOrder::elim_w() : TermOrder::elim_z();
    const GroebnerBasis& gb = I.basis(order, opts);

    std::size_t n = ctx->n_z();
    ContextPtr sub;
    std::vector<std::size_t> map(ctx->size());
    if (block == EliminationBlock::W) {
        sub = z_subcontext(ctx);
        for (std::size_t k = 0; k < ctx->size(); ++k) map[k] = k < n ? k : sub->size();
    } else {
        std::vector<std::string> names(ctx->names().begin() + n, ctx->names().end());
        sub = make_context(ctx->n_w(), 0, std::move(names));
        for (std::size_t k = 0; k < ctx->size(); ++k) map[k] = k < n ? sub->size() : k - n;
    }

    std::vector<Polynomial> survivors;
    for (const Polynomial& g : gb.elements) {
        bool keep = true;
        for (std::size_t k = 0; k < ctx->size() && keep; ++k) {
            bool eliminated = (block == EliminationBlock::W) ? ctx->is_w(k) : !ctx->is_w(k);
            if (eliminated && g.depends_on(k)) keep = false;
        }
        if (keep) survivors.push_back(g.remap(sub, map));
    }
    return Ideal(sub, std::move(survivors));
}

namespace {

// Largest subset of variables meeting no leading-term support.
int max_independent_set(const std::vector<std::vector<std::size_t>>& supports, std::size_t nvars) {
    int best = 0;
    std::vector<bool> in_set(nvars, false);
    // Depth-first over variables; prune when even taking everything left
    // cannot beat the best found so far.
    auto feasible = [&]() {
        for (const auto& s : supports) {
            bool inside = true;
            for (std::size_t v : s)
                if (!in_set[v]) {
                    inside = false;
                    break;
                }
            if (inside) return false;
        }
        return true;
    };
    std::function<void(std::size_t, int)> go = [&](std::size_t var, int count) {
        if (count + int(nvars - var) <= best) return;
        if (var == nvars) {
            if (count > best) best = count;
            return;
        }
        in_set[var] = true;
        if (feasible()) go(var + 1, count + 1);
        in_set[var] = false;
        go(var + 1, count);
    };
    go(0, 0);
    return best;
}

} // namespace

std::optional<int> krull_dimension(const Ideal& I, const GBOptions& opts) {
    const ContextPtr& ctx = I.context();
    if (I.is_zero()) return int(ctx->size());
    const GroebnerBasis* gb = I.cached_basis();
    if (!gb) gb = &I.basis(opts.default_order, opts);
    MonomialCompare cmp(gb->order, *ctx);

    std::vector<std::vector<std::size_t>> supports;
    for (const Polynomial& g : gb->elements) {
        const Monomial& lt = g.leading_monomial(cmp);
        if (lt.is_one()) return std::nullopt; // unit ideal: empty variety
        std::vector<std::size_t> s;
        for (std::size_t k = 0; k < ctx->size(); ++k)
            if (lt[k]) s.push_back(k);
        supports.push_back(std::move(s));
    }
    return max_independent_set(supports, ctx->size());
}

Ideal saturate(const Ideal& I, const Polynomial& f, const GBOptions& opts) {
    require_same_context(I.context(), f.context(), "saturate");
    if (f.is_zero()) throw InputError("saturate: f must be nonzero");
    if (f.is_constant()) return I;

    const ContextPtr& ctx = I.context();
    std::size_t n = ctx->size();
    std::vector<std::string> names = ctx->names();
    names.push_back("_t");
    ContextPtr ext = make_context(n + 1, 0, std::move(names));

    std::vector<std::size_t> up(n);
    for (std::size_t k = 0; k < n; ++k) up[k] = k;

    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators()) gens.push_back(g.remap(ext, up));
    Polynomial t = Polynomial::variable(ext, n);
    gens.push_back(Polynomial::constant(ext, GaussianRational(1)) - t * f.remap(ext, up));

    Ideal J(ext, std::move(gens));
    const GroebnerBasis& gb = J.basis(TermOrder::elim_set({n}), opts);

    std::vector<std::size_t> down(n + 1, ctx->size());
    for (std::size_t k = 0; k < n; ++k) down[k] = k;
    std::vector<Polynomial> survivors;
    for (const Polynomial& g : gb.elements)
        if (!g.depends_on(n)) survivors.push_back(g.remap(ctx, down));
    return Ideal(ctx, std::move(survivors));
}

} // namespace lf
