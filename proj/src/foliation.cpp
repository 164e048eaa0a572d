#include "leviflat/foliation.hpp"

#include <algorithm>

#include "leviflat/parser.hpp"

namespace lf {

VectorField::VectorField(ContextPtr ctx, std::vector<Polynomial> components)
    : ctx_(std::move(ctx)), comps_(std::move(components)) {
    if (comps_.size() != ctx_->size())
        throw InputError("vector field needs one component per context variable");
    for (const auto& c : comps_) require_same_context(ctx_, c.context(), "vector field component");
}

Polynomial VectorField::apply(const Polynomial& f) const {
    require_same_context(ctx_, f.context(), "vector field application");
    Polynomial r(ctx_);
    for (std::size_t k = 0; k < comps_.size(); ++k) {
        if (comps_[k].is_zero()) continue;
        r = r + comps_[k] * f.derivative(k);
    }
    return r;
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_same_context(ctx_, o.ctx_, "vector field addition");
    std::vector<Polynomial> c;
    c.reserve(comps_.size());
    for (std::size_t k = 0; k < comps_.size(); ++k) c.push_back(comps_[k] + o.comps_[k]);
    return VectorField(ctx_, std::move(c));
}

VectorField VectorField::operator-() const {
    std::vector<Polynomial> c;
    c.reserve(comps_.size());
    for (const auto& p : comps_) c.push_back(-p);
    return VectorField(ctx_, std::move(c));
}

VectorField lie_bracket(const VectorField& u, const VectorField& v) {
    require_same_context(u.context(), v.context(), "Lie bracket");
    std::vector<Polynomial> c;
    c.reserve(u.components().size());
    for (std::size_t k = 0; k < u.components().size(); ++k)
        c.push_back(u.apply(v.component(k)) - v.apply(u.component(k)));
    return VectorField(u.context(), std::move(c));
}

VectorField complexified_double(const VectorField& v, const ContextPtr& full_ctx) {
    if (v.context()->has_w_block())
        throw InputError("complexified_double expects a field over the z-context");
    if (full_ctx->n_z() != v.context()->n_z())
        throw InputError("complexified_double: z-block size mismatch");
    std::size_t n = full_ctx->n_z();
    std::vector<Polynomial> comps;
    comps.reserve(full_ctx->size());
    for (std::size_t k = 0; k < n; ++k) comps.push_back(embed_in_full(v.component(k), full_ctx));
    for (std::size_t k = 0; k < n; ++k) comps.push_back(mirror_into_w(v.component(k), full_ctx));
    return VectorField(full_ctx, std::move(comps));
}

// Degrees above the variable count are allowed; such forms are identically
// zero because every index tuple repeats.
DifferentialForm::DifferentialForm(ContextPtr ctx, int degree)
    : ctx_(std::move(ctx)), degree_(degree) {
    if (degree < 0) throw InputError("form degree out of range");
}

namespace {

// Sort an index tuple, returning the permutation sign; 0 on repeats.
int normalize_tuple(DifferentialForm::IndexTuple& t) {
    int sign = 1;
    for (std::size_t a = 0; a + 1 < t.size(); ++a) {
        for (std::size_t b = 0; b + 1 < t.size() - a; ++b) {
            if (t[b] == t[b + 1]) return 0;
            if (t[b] > t[b + 1]) {
                std::swap(t[b], t[b + 1]);
                sign = -sign;
            }
        }
    }
    for (std::size_t a = 0; a + 1 < t.size(); ++a)
        if (t[a] == t[a + 1]) return 0;
    return sign;
}

} // namespace

void DifferentialForm::add_term(IndexTuple t, const Polynomial& c) {
    if (int(t.size()) != degree_) throw InputError("index tuple does not match form degree");
    require_same_context(ctx_, c.context(), "form coefficient");
    if (c.is_zero()) return;
    for (std::size_t idx : t)
        if (idx >= ctx_->size()) throw InputError("form index out of range");
    int sign = normalize_tuple(t);
    if (sign == 0) return;
    Polynomial add = sign == 1 ? c : -c;
    auto it = coeffs_.find(t);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(t), std::move(add));
        return;
    }
    it->second = it->second + add;
    if (it->second.is_zero()) coeffs_.erase(it);
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    if (degree_ != o.degree_) throw InputError("form degrees differ");
    DifferentialForm r = *this;
    for (const auto& [t, c] : o.coeffs_) r.add_term(t, c);
    return r;
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm r(ctx_, degree_);
    for (const auto& [t, c] : coeffs_) r.coeffs_.emplace(t, -c);
    return r;
}

DifferentialForm DifferentialForm::scaled(const Polynomial& f) const {
    DifferentialForm r(ctx_, degree_);
    if (f.is_zero()) return r;
    for (const auto& [t, c] : coeffs_) {
        Polynomial p = c * f;
        if (!p.is_zero()) r.coeffs_.emplace(t, std::move(p));
    }
    return r;
}

DifferentialForm DifferentialForm::wedge(const DifferentialForm& o) const {
    require_same_context(ctx_, o.ctx_, "wedge product");
    DifferentialForm r(ctx_, degree_ + o.degree_);
    for (const auto& [ta, ca] : coeffs_) {
        for (const auto& [tb, cb] : o.coeffs_) {
            IndexTuple t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            r.add_term(std::move(t), ca * cb);
        }
    }
    return r;
}

DifferentialForm DifferentialForm::exterior_derivative() const {
    DifferentialForm r(ctx_, degree_ + 1);
    for (const auto& [t, c] : coeffs_) {
        for (std::size_t k = 0; k < ctx_->size(); ++k) {
            Polynomial d = c.derivative(k);
            if (d.is_zero()) continue;
            IndexTuple t2;
            t2.reserve(t.size() + 1);
            t2.push_back(k);
            t2.insert(t2.end(), t.begin(), t.end());
            r.add_term(std::move(t2), d);
        }
    }
    return r;
}

FoliationPresentation FoliationPresentation::from_fields(std::vector<VectorField> fields) {
    if (fields.empty()) throw InputError("foliation needs at least one field");
    FoliationPresentation F(Kind::Fields, fields.front().context());
    for (const auto& v : fields) require_same_context(F.ctx_, v.context(), "foliation field");
    F.fields_ = std::move(fields);
    return F;
}

FoliationPresentation FoliationPresentation::from_forms(std::vector<DifferentialForm> one_forms) {
    if (one_forms.empty()) throw InputError("foliation needs at least one form");
    FoliationPresentation F(Kind::Forms, one_forms.front().context());
    for (const auto& w : one_forms) {
        require_same_context(F.ctx_, w.context(), "foliation form");
        if (w.degree() != 1) throw InputError("foliation forms must have degree one");
    }
    F.forms_ = std::move(one_forms);
    return F;
}

std::vector<VectorField> FoliationPresentation::spanning_fields() const {
    if (kind_ == Kind::Fields) return fields_;
    if (forms_.size() != 1)
        throw InputError("no field conversion for a presentation by several forms");
    // Kernel fields of a single 1-form: a_i d_j - a_j d_i.
    const DifferentialForm& w = forms_.front();
    std::size_t n = ctx_->size();
    std::vector<Polynomial> a(n, Polynomial(ctx_));
    for (const auto& [t, c] : w.terms()) a[t[0]] = c;
    std::vector<VectorField> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[i].is_zero() && a[j].is_zero()) continue;
            std::vector<Polynomial> comps(n, Polynomial(ctx_));
            comps[j] = a[i];
            comps[i] = -a[j];
            VectorField v(ctx_, std::move(comps));
            if (!v.is_zero()) out.push_back(std::move(v));
        }
    }
    if (out.empty()) throw InputError("zero form has no kernel fields");
    return out;
}

namespace {

// Determinant by cofactor expansion; rows/cols index into the component
// matrix.  Sizes stay small (<= 6) at the scales this library targets.
Polynomial poly_det(const std::vector<std::vector<const Polynomial*>>& m, const ContextPtr& ctx) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(ctx, GaussianRational(1));
    if (n == 1) return *m[0][0];
    Polynomial acc(ctx);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j]->is_zero()) continue;
        std::vector<std::vector<const Polynomial*>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<const Polynomial*> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial minor = poly_det(sub, ctx);
        Polynomial contrib = *m[0][j] * minor;
        acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

// All k x k minors of a polynomial matrix given by row pointers.
std::vector<Polynomial> minors(const std::vector<const VectorField*>& rows, std::size_t k,
                               const ContextPtr& ctx) {
    std::vector<Polynomial> out;
    std::size_t nr = rows.size();
    std::size_t nc = ctx->size();
    for (const auto& ri : combinations(nr, k)) {
        for (const auto& ci : combinations(nc, k)) {
            std::vector<std::vector<const Polynomial*>> m(k, std::vector<const Polynomial*>(k));
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) m[a][b] = &rows[ri[a]]->component(ci[b]);
            out.push_back(poly_det(m, ctx));
        }
    }
    return out;
}

std::size_t generic_rank(const std::vector<const VectorField*>& rows, const ContextPtr& ctx) {
    std::size_t cap = std::min(rows.size(), ctx->size());
    for (std::size_t k = cap; k >= 1; --k) {
        for (const Polynomial& m : minors(rows, k, ctx))
            if (!m.is_zero()) return k;
    }
    return 0;
}

std::vector<const VectorField*> row_pointers(const std::vector<VectorField>& fields) {
    std::vector<const VectorField*> rows;
    rows.reserve(fields.size());
    for (const auto& v : fields) rows.push_back(&v);
    return rows;
}

} // namespace

bool is_integrable(const FoliationPresentation& F) {
    if (F.kind() == FoliationPresentation::Kind::Forms) {
        for (const DifferentialForm& w : F.forms()) {
            DifferentialForm test = w.exterior_derivative();
            for (const DifferentialForm& u : F.forms()) test = test.wedge(u);
            if (!test.is_zero()) return false;
        }
        return true;
    }
    const auto& fields = F.fields();
    auto rows = row_pointers(fields);
    std::size_t r = generic_rank(rows, F.context());
    if (r == 0) return true;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        for (std::size_t j = i + 1; j < fields.size(); ++j) {
            VectorField b = lie_bracket(fields[i], fields[j]);
            if (b.is_zero()) continue;
            auto stacked = rows;
            stacked.push_back(&b);
            for (const Polynomial& m : minors(stacked, r + 1, F.context()))
                if (!m.is_zero()) return false;
        }
    }
    return true;
}

SingularLocusReport singular_locus(const FoliationPresentation& F, const GBOptions& opts) {
    std::vector<Polynomial> gens;
    if (F.kind() == FoliationPresentation::Kind::Fields) {
        auto rows = row_pointers(F.fields());
        std::size_t r = generic_rank(rows, F.context());
        if (r == 0) {
            gens.push_back(Polynomial(F.context()));
        } else {
            for (Polynomial& m : minors(rows, r, F.context()))
                if (!m.is_zero()) gens.push_back(std::move(m));
        }
    } else {
        for (const DifferentialForm& w : F.forms())
            for (const auto& [t, c] : w.terms()) gens.push_back(c);
    }
    Ideal I(F.context(), std::move(gens));
    auto dim = krull_dimension(I, opts);
    bool empty = !dim.has_value();
    int d = dim ? *dim : -1;
    int ambient = int(F.context()->size());
    bool codim_ok = empty || (ambient - d) >= 2;
    return SingularLocusReport{std::move(I), empty, d, ambient, codim_ok};
}

bool is_invariant(const Ideal& I, const FoliationPresentation& F, const GBOptions& opts) {
    require_same_context(I.context(), F.context(), "invariance test");
    for (const VectorField& v : F.spanning_fields()) {
        for (const Polynomial& g : I.generators()) {
            if (!ideal_contains(I, v.apply(g), opts)) return false;
        }
    }
    return true;
}

FoliationPresentation mirror_foliation(const FoliationPresentation& F) {
    const ContextPtr& ctx = F.context();
    ContextPtr full = ctx->has_w_block() ? ctx : complexified_context(ctx);
    std::size_t n = full->n_z();

    auto mirror_poly = [&](const Polynomial& p) {
        return ctx->has_w_block() ? p.mirror() : mirror_into_w(p, full);
    };
    auto mirror_index = [&](std::size_t k) {
        return ctx->has_w_block() ? full->partner(k) : n + k;
    };

    if (F.kind() == FoliationPresentation::Kind::Fields) {
        std::vector<VectorField> out;
        for (const VectorField& v : F.fields()) {
            std::vector<Polynomial> comps(full->size(), Polynomial(full));
            for (std::size_t k = 0; k < v.components().size(); ++k) {
                if (v.component(k).is_zero()) continue;
                comps[mirror_index(k)] = mirror_poly(v.component(k));
            }
            out.emplace_back(full, std::move(comps));
        }
        return FoliationPresentation::from_fields(std::move(out));
    }
    std::vector<DifferentialForm> out;
    for (const DifferentialForm& w : F.forms()) {
        DifferentialForm m(full, w.degree());
        for (const auto& [t, c] : w.terms()) {
            DifferentialForm::IndexTuple t2;
            t2.reserve(t.size());
            for (std::size_t idx : t) t2.push_back(mirror_index(idx));
            m.add_term(std::move(t2), mirror_poly(c));
        }
        out.push_back(std::move(m));
    }
    return FoliationPresentation::from_forms(std::move(out));
}

TangencyReport tangent_to_leviflat(const FoliationPresentation& F, const LeviFlatModel& H,
                                   const GBOptions& opts) {
    if (F.kind() != FoliationPresentation::Kind::Fields)
        throw InputError("tangency test requires a fields presentation");
    require_same_context(F.context(), H.zcontext(), "tangency test");
    const Ideal& hc = H.complexified(opts);
    for (const VectorField& v : F.fields()) {
        VectorField vv = complexified_double(v, H.context());
        for (const Polynomial& g : hc.generators()) {
            Polynomial nf = normal_form(vv.apply(g), hc, opts);
            if (!nf.is_zero()) return {false, print_poly(nf)};
        }
    }
    return {true, ""};
}

namespace {

// Proportionality over Q(i): q = c * p for a constant c.
bool proportional(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return true;
    if (p.terms().size() != q.terms().size()) return false;
    auto a = p.terms().begin();
    auto b = q.terms().begin();
    GaussianRational ratio = b->second / a->second;
    for (; a != p.terms().end(); ++a, ++b) {
        if (a->first != b->first) return false;
        if (b->second != a->second * ratio) return false;
    }
    return true;
}

} // namespace

FirstIntegralReport verify_first_integral(const Polynomial& num, const Polynomial& den,
                                          const FoliationPresentation& F, const Ideal& ambient,
                                          const GBOptions& opts) {
    require_same_context(num.context(), F.context(), "first integral");
    require_same_context(den.context(), F.context(), "first integral");
    require_same_context(ambient.context(), F.context(), "first integral ambient");
    if (den.is_zero()) throw InputError("first integral: zero denominator");

    FirstIntegralReport r;
    r.constant = proportional(num, den);
    r.ok = true;
    for (const VectorField& v : F.spanning_fields()) {
        Polynomial cross = den * v.apply(num) - num * v.apply(den);
        if (cross.is_zero()) continue;
        Polynomial nf = ambient.is_zero() ? cross : normal_form(cross, ambient, opts);
        if (!nf.is_zero()) {
            r.ok = false;
            r.witness = print_poly(nf);
            return r;
        }
    }
    return r;
}

LevelSetReport verify_level_set_containment(const LeviFlatModel& H, const Polynomial& num,
                                            const Polynomial& den, const HermitianPoly& curve,
                                            const GBOptions& opts) {
    require_same_context(num.context(), H.zcontext(), "level set containment");
    require_same_context(den.context(), H.zcontext(), "level set containment");
    if (curve.context()->n_z() != 1)
        throw InputError("level curve must live in one variable pair (u, ~u)");
    if (den.is_zero() || ideal_contains(H.icomplexification(opts), den, opts))
        throw InputError("denominator vanishes identically on the intrinsic complexification");

    const ContextPtr& full = H.context();
    Polynomial nz = embed_in_full(num, full);
    Polynomial dz = embed_in_full(den, full);
    Polynomial nw = mirror_into_w(num, full);
    Polynomial dw = mirror_into_w(den, full);

    auto [a, b] = curve.body().max_bidegree(); // u-degree, ~u-degree bounds

    // Clear denominators of s(num/den, mirror) with den^a * mirror(den)^b.
    Polynomial cleared(full);
    for (const auto& [m, c] : curve.body().terms()) {
        std::uint32_t j = m[0], k = m[1];
        Polynomial t = Polynomial::constant(full, c);
        t = t * nz.pow(j) * dz.pow(std::uint32_t(a) - j);
        t = t * nw.pow(k) * dw.pow(std::uint32_t(b) - k);
        cleared = cleared + t;
    }

    Polynomial nf = normal_form(cleared, H.complexified(opts), opts);
    if (nf.is_zero()) return {true, ""};
    return {false, print_poly(nf)};
}

WebResult web_from_family(const Polynomial& family, std::size_t param_index) {
    const ContextPtr& ctx = family.context();
    if (ctx->has_w_block()) throw InputError("web family must live in a plain context");
    if (param_index >= ctx->size()) throw InputError("parameter index out of range");
    std::uint32_t d = family.degree_in(param_index);
    if (d == 0) throw InputError("family does not depend on its parameter");

    // Web context: the non-parameter variables plus their dz-symbols.
    std::vector<std::string> names;
    std::vector<std::size_t> zvars;
    for (std::size_t k = 0; k < ctx->size(); ++k) {
        if (k == param_index) continue;
        zvars.push_back(k);
        names.push_back(ctx->name(k));
    }
    for (std::size_t k : zvars) names.push_back("d" + ctx->name(k));
    std::size_t n = zvars.size();
    ContextPtr wctx = make_context(2 * n, 0, std::move(names));

    // Index maps: old var -> web ctx position (parameter handled separately).
    std::vector<std::size_t> to_web(ctx->size(), wctx->size());
    for (std::size_t i = 0; i < zvars.size(); ++i) to_web[zvars[i]] = i;

    // family = sum_e f_e * c^e with f_e over the web context.
    std::vector<Polynomial> f_coeffs;
    for (const Polynomial& fc : family.coefficients_in(param_index))
        f_coeffs.push_back(fc.remap(wctx, to_web));

    // The differential sum_k (dfamily/dz_k) dz_k, again as a polynomial in c.
    std::vector<Polynomial> g_coeffs(std::size_t(d) + 1, Polynomial(wctx));
    for (std::size_t i = 0; i < zvars.size(); ++i) {
        Polynomial dk = family.derivative(zvars[i]);
        auto dk_coeffs = dk.coefficients_in(param_index);
        for (std::size_t e = 0; e < dk_coeffs.size(); ++e) {
            if (dk_coeffs[e].is_zero()) continue;
            Polynomial dz = Polynomial::variable(wctx, n + i);
            g_coeffs[e] = g_coeffs[e] + dk_coeffs[e].remap(wctx, to_web) * dz;
        }
    }
    while (f_coeffs.size() > 1 && f_coeffs.back().is_zero()) f_coeffs.pop_back();
    while (g_coeffs.size() > 1 && g_coeffs.back().is_zero()) g_coeffs.pop_back();
    std::size_t df = f_coeffs.size() - 1;
    std::size_t dg = g_coeffs.size() - 1;
    if (dg == 0 && g_coeffs[0].is_zero())
        throw InputError("degenerate family: identically zero differential");

    // Sylvester matrix of the two c-polynomials.
    std::size_t size = df + dg;
    std::vector<std::vector<Polynomial>> syl(size, std::vector<Polynomial>(size, Polynomial(wctx)));
    for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t j = 0; j <= df; ++j) syl[r][r + j] = f_coeffs[df - j];
    for (std::size_t r = 0; r < df; ++r)
        for (std::size_t j = 0; j <= dg; ++j) syl[dg + r][r + j] = g_coeffs[dg - j];

    std::vector<std::vector<const Polynomial*>> rows(size, std::vector<const Polynomial*>(size));
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) rows[r][c] = &syl[r][c];
    Polynomial res = poly_det(rows, wctx);
    if (res.is_zero()) throw InputError("degenerate family: identically zero resultant");
    return WebResult{wctx, std::move(res), int(d)};
}

namespace {

struct Pivot {
    std::size_t var;
    Polynomial solved; // substitution polynomial for the pivot variable
};

Pivot solve_hyperplane(const Polynomial& h) {
    const ContextPtr& ctx = h.context();
    if (h.is_zero() || h.total_degree() > 1) throw InputError("hyperplane must be linear and nonzero");
    // Highest display priority variable with nonzero coefficient.
    for (std::size_t idx : display_priority(*ctx)) {
        Monomial m(ctx->size());
        m[idx] = 1;
        GaussianRational a = h.coefficient(m);
        if (a.is_zero()) continue;
        // x = x - h/a eliminates x.
        Polynomial solved = Polynomial::variable(ctx, idx) - h.scaled(GaussianRational(1) / a);
        return {idx, std::move(solved)};
    }
    throw InputError("hyperplane has no variable term");
}

ContextPtr drop_variable(const ContextPtr& ctx, std::size_t var, std::vector<std::size_t>& map) {
    if (ctx->has_w_block()) throw InputError("hyperplane restriction expects a plain context");
    std::vector<std::string> names;
    map.assign(ctx->size(), 0);
    std::size_t next = 0;
    for (std::size_t k = 0; k < ctx->size(); ++k) {
        if (k == var) continue;
        names.push_back(ctx->name(k));
        map[k] = next++;
    }
    map[var] = next; // out of range: the pivot must not survive substitution
    return make_context(next, 0, std::move(names));
}

} // namespace

RestrictedIdeal restrict_to_hyperplane(const Ideal& I, const Polynomial& hyperplane,
                                       const GBOptions& opts) {
    require_same_context(I.context(), hyperplane.context(), "hyperplane restriction");
    if (ideal_contains(I, hyperplane, opts))
        throw InputError("hyperplane is contained in the variety; restriction is not a proper section");
    Pivot p = solve_hyperplane(hyperplane);
    std::vector<std::size_t> map;
    ContextPtr sub = drop_variable(I.context(), p.var, map);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators()) gens.push_back(g.substitute(p.var, p.solved).remap(sub, map));
    return RestrictedIdeal{Ideal(sub, std::move(gens)), p.var};
}

RestrictedFoliation restrict_to_hyperplane(const FoliationPresentation& F,
                                           const Polynomial& hyperplane, const GBOptions& opts) {
    require_same_context(F.context(), hyperplane.context(), "hyperplane restriction");
    Pivot p = solve_hyperplane(hyperplane);
    std::vector<std::size_t> map;
    ContextPtr sub = drop_variable(F.context(), p.var, map);

    auto push_down = [&](const Polynomial& q) { return q.substitute(p.var, p.solved).remap(sub, map); };

    std::optional<FoliationPresentation> out;
    if (F.kind() == FoliationPresentation::Kind::Fields) {
        std::vector<VectorField> fields;
        for (const VectorField& v : F.fields()) {
            std::vector<Polynomial> comps;
            for (std::size_t k = 0; k < v.components().size(); ++k) {
                if (k == p.var) continue;
                comps.push_back(push_down(v.component(k)));
            }
            VectorField rv(sub, std::move(comps));
            if (!rv.is_zero()) fields.push_back(std::move(rv));
        }
        if (fields.empty()) throw InputError("restriction annihilates the foliation fields");
        out = FoliationPresentation::from_fields(std::move(fields));
    } else {
        // dx_pivot rewrites to the differential of the solved expression.
        std::vector<DifferentialForm> forms;
        for (const DifferentialForm& w : F.forms()) {
            DifferentialForm rw(sub, 1);
            for (const auto& [t, c] : w.terms()) {
                std::size_t idx = t[0];
                Polynomial coeff = push_down(c);
                if (coeff.is_zero()) continue;
                if (idx != p.var) {
                    rw.add_term({map[idx]}, coeff);
                } else {
                    for (std::size_t k = 0; k < F.context()->size(); ++k) {
                        if (k == p.var) continue;
                        Polynomial dk = p.solved.derivative(k);
                        if (dk.is_zero()) continue;
                        rw.add_term({map[k]}, coeff * push_down(dk));
                    }
                }
            }
            if (!rw.is_zero()) forms.push_back(std::move(rw));
        }
        if (forms.empty()) throw InputError("restriction annihilates the foliation forms");
        out = FoliationPresentation::from_forms(std::move(forms));
    }

    SingularLocusReport sing = singular_locus(*out, opts);
    bool generic = sing.codim_at_least_two;
    return RestrictedFoliation{std::move(*out), std::move(sing), generic, p.var};
}

} // namespace lf
