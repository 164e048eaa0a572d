#include "leviflat/levicheck.hpp"

#include <algorithm>

#include "leviflat/parser.hpp"
#include "leviflat/sturm.hpp"

namespace lf {

namespace {

Point with_conjugates(const Point& p) {
    Point full = p;
    for (const auto& c : p) full.push_back(c.conj());
    return full;
}

} // namespace

CRReport cr_tangent(const LeviFlatModel& H, const Point& p) {
    const std::size_t n = H.zcontext()->size();
    if (p.size() != n) throw InputError("point length does not match the ambient dimension");
    if (!H.contains_point(p)) throw InputError("point is not on the model");

    Point full = with_conjugates(p);

    // Holomorphic differentials of the (real) generators at (p, conj p).
    Matrix holo;
    for (const HermitianPoly& g : H.generators()) {
        Row row(n);
        for (std::size_t k = 0; k < n; ++k) row[k] = g.body().derivative(k).evaluate(full);
        holo.push_back(std::move(row));
    }

    CRReport r;
    r.point = p;
    r.leaf_tangent_basis = kernel_basis(holo);
    r.leaf_tangent_dim = int(r.leaf_tangent_basis.size());

    // Real Jacobian in coordinates x1..xN, y1..yN: for a real-valued
    // generator, d/dx_k = 2 Re(d/dz_k) and d/dy_k = -2 Im(d/dz_k).
    Matrix real_jac;
    for (const Row& row : holo) {
        Row rr(2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            rr[k] = GaussianRational(row[k].re() * 2);
            rr[n + k] = GaussianRational(row[k].im() * -2);
        }
        real_jac.push_back(std::move(rr));
    }
    r.jacobian_rank = int(matrix_rank(real_jac));

    // T + JT: stack the kernel with its image under J and halve the rank.
    std::vector<Row> kernel = kernel_basis(real_jac);
    Matrix stacked = kernel;
    for (const Row& v : kernel) {
        Row jv(2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            jv[k] = -v[n + k];
            jv[n + k] = v[k];
        }
        stacked.push_back(std::move(jv));
    }
    r.cr_dimension = int(matrix_rank(stacked)) / 2;

    if (H.levi_dimension()) {
        int expected_rank = int(2 * n) - (2 * *H.levi_dimension() + 1);
        r.regular = (r.jacobian_rank == expected_rank);
    }
    return r;
}

Ideal LeafFamily::leaf_at(const std::vector<GaussianRational>& params, const ContextPtr& zctx) const {
    if (params.size() != n_params()) throw InputError("parameter tuple has the wrong length");
    std::vector<std::pair<std::size_t, GaussianRational>> subs;
    for (std::size_t k = 0; k < params.size(); ++k) subs.emplace_back(n_ambient + k, params[k]);
    std::vector<std::size_t> map(family_ctx->size(), zctx->size());
    for (std::size_t k = 0; k < n_ambient; ++k) map[k] = k;
    std::vector<Polynomial> gens;
    for (const Polynomial& m : members) gens.push_back(m.substitute_values(subs).remap(zctx, map));
    return Ideal(zctx, std::move(gens));
}

bool LeafFamily::constraints_hold(const std::vector<GaussianRational>& params) const {
    if (params.size() != n_params()) throw InputError("parameter tuple has the wrong length");
    Point full(family_ctx->size(), GaussianRational());
    for (std::size_t k = 0; k < params.size(); ++k) full[n_ambient + k] = params[k];
    for (const Polynomial& c : constraints)
        if (!c.evaluate(full).is_zero()) return false;
    return true;
}

LeviCheckReport check_levi_foliation(const LeviFlatModel& H, const LeafFamily& family,
                                     const std::vector<LeviSample>& samples, const GBOptions& opts) {
    if (family.n_ambient != H.zcontext()->size())
        throw InputError("family ambient dimension does not match the model");
    LeviCheckReport report;
    for (const LeviSample& s : samples) {
        SampleVerdict v;
        v.sample = s;
        try {
            v.params_on_constraints = family.constraints_hold(s.params);
            v.point_on_model = H.contains_point(s.point);
            Ideal leaf = family.leaf_at(s.params, H.zcontext());
            v.point_on_leaf = vanishes_on_generators(leaf, s.point);
            if (v.params_on_constraints && v.point_on_model && v.point_on_leaf) {
                v.leaf = verify_leaf(H, leaf, s.point, opts);
                v.leaf_checked = true;

                auto leaf_dim = krull_dimension(leaf, opts);
                v.leaf_dim_is_n = H.levi_dimension() && leaf_dim &&
                                  *leaf_dim == *H.levi_dimension();

                // Leaf tangent at the point vs. the CR intersection.
                CRReport cr = cr_tangent(H, s.point);
                v.cr_dimension = cr.cr_dimension;
                Matrix leaf_jac;
                for (const Polynomial& g : leaf.generators()) {
                    Row row(H.zcontext()->size());
                    for (std::size_t k = 0; k < row.size(); ++k)
                        row[k] = g.derivative(k).evaluate(s.point);
                    leaf_jac.push_back(std::move(row));
                }
                Matrix leaf_tangent = kernel_basis(leaf_jac);
                v.tangent_matches_cr = same_row_span(leaf_tangent, cr.leaf_tangent_basis);
            }
        } catch (const Error& e) {
            v.note = e.what();
        }
        if (!v.ok()) report.all_ok = false;
        report.samples.push_back(std::move(v));
    }
    return report;
}

namespace {

// Dense univariate coefficients over Q(i) of a one-variable polynomial.
std::vector<GaussianRational> univariate_coefficients(const Polynomial& p, std::size_t var) {
    std::vector<GaussianRational> out(p.degree_in(var) + 1, GaussianRational());
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t k = 0; k < m.nvars(); ++k)
            if (k != var && m[k] != 0) throw InputError("polynomial is not univariate");
        out[m[var]] += c;
    }
    return out;
}

void split_real_imaginary(const std::vector<GaussianRational>& coeffs, UnivariateQ& re,
                          UnivariateQ& im) {
    re.clear();
    im.clear();
    for (const auto& c : coeffs) {
        re.push_back(c.re());
        im.push_back(c.im());
    }
    re = u_normalize(std::move(re));
    im = u_normalize(std::move(im));
}

// Polynomial over Q whose real zeros are the common real zeros of the
// system of one-variable polynomials over Q(i).  Empty means identically
// zero (every real value is a solution).
UnivariateQ common_real_zero_poly(const std::vector<Polynomial>& system, std::size_t var) {
    UnivariateQ acc; // gcd accumulator, empty = zero polynomial
    for (const Polynomial& p : system) {
        if (p.is_zero()) continue;
        UnivariateQ re, im;
        split_real_imaginary(univariate_coefficients(p, var), re, im);
        for (UnivariateQ* part : {&re, &im}) {
            if (part->empty()) continue;
            acc = acc.empty() ? *part : u_gcd(acc, *part);
        }
    }
    return acc;
}

struct ParamSolve {
    bool more = false;
    std::vector<std::vector<GaussianRational>> solutions;
    std::vector<std::string> notes;
};

// Back-substitution over the parameter block, last variable first.  The
// basis is expected to triangularize (lex order); non-rational real roots
// are counted at the deepest level and flagged above it.
void solve_parameters(const std::vector<Polynomial>& system, const ContextPtr& pctx,
                      std::size_t depth, std::vector<GaussianRational>& partial, ParamSolve& out) {
    std::size_t nvars = pctx->size();
    if (depth == nvars) {
        for (const Polynomial& p : system)
            if (!p.is_constant() || !p.constant_coefficient().is_zero()) return;
        std::vector<GaussianRational> sol(partial.rbegin(), partial.rend());
        out.solutions.push_back(std::move(sol));
        return;
    }
    std::size_t var = nvars - 1 - depth; // solve from the last variable up

    std::vector<Polynomial> involved;
    for (const Polynomial& p : system)
        if (!p.is_zero() && p.depends_on(var)) involved.push_back(p);

    if (involved.empty()) {
        out.notes.push_back("parameter " + pctx->name(var) + " is unconstrained");
        out.more = true;
        return;
    }
    for (const Polynomial& p : involved) {
        for (std::size_t k = 0; k < var; ++k)
            if (p.depends_on(k)) {
                out.notes.push_back("system is not triangular in the parameters");
                out.more = true;
                return;
            }
    }

    UnivariateQ g = common_real_zero_poly(involved, var);
    if (g.empty()) {
        out.notes.push_back("parameter " + pctx->name(var) + " is unconstrained over the reals");
        out.more = true;
        return;
    }
    int nroots = count_real_roots(g);
    std::vector<mpq_class> rational = rational_roots(g);
    if (int(rational.size()) < nroots) {
        out.more = true;
        for (const auto& [lo, hi] : isolate_real_roots(g)) {
            bool is_rational = false;
            for (const auto& r : rational)
                if (lo < r && r <= hi) is_rational = true;
            if (!is_rational)
                out.notes.push_back("non-rational real root of " + pctx->name(var) + " in (" +
                                    lo.get_str() + ", " + hi.get_str() + "]");
        }
    }
    for (const mpq_class& r : rational) {
        GaussianRational val{r};
        std::vector<Polynomial> next;
        for (const Polynomial& p : system) next.push_back(p.substitute_values({{var, val}}));
        partial.push_back(val);
        solve_parameters(next, pctx, depth + 1, partial, out);
        partial.pop_back();
    }
}

} // namespace

MultiLeafResult multi_leaf_detector(const LeviFlatModel& H, const LeafFamily& family,
                                    const Point& p, const GBOptions& opts) {
    if (family.n_ambient != H.zcontext()->size())
        throw InputError("family ambient dimension does not match the model");
    if (p.size() != family.n_ambient)
        throw InputError("point length does not match the ambient dimension");
    if (!H.contains_point(p)) throw InputError("point is not on the model");

    std::size_t n_params = family.n_params();
    std::vector<std::string> pnames(family.family_ctx->names().begin() + long(family.n_ambient),
                                    family.family_ctx->names().end());
    ContextPtr pctx = make_context(n_params, 0, std::move(pnames));
    std::vector<std::size_t> to_params(family.family_ctx->size(), pctx->size());
    for (std::size_t k = 0; k < n_params; ++k) to_params[family.n_ambient + k] = k;

    std::vector<std::pair<std::size_t, GaussianRational>> subs;
    for (std::size_t k = 0; k < p.size(); ++k) subs.emplace_back(k, p[k]);

    MultiLeafResult result;
    std::vector<Polynomial> system;
    bool any_member_nonzero = false;
    for (const Polynomial& m : family.members) {
        Polynomial q = m.substitute_values(subs).remap(pctx, to_params);
        if (!q.is_zero()) any_member_nonzero = true;
        system.push_back(std::move(q));
    }
    if (!any_member_nonzero) {
        result.degenerate = true;
        result.notes.push_back("point lies in the base locus of the family");
        return result;
    }
    for (const Polynomial& c : family.constraints) system.push_back(c.remap(pctx, to_params));

    // Triangularize multi-parameter systems through a lex basis.
    std::vector<Polynomial> solved_system = system;
    if (n_params > 1) {
        Ideal sys(pctx, system);
        if (is_unit_ideal(sys, opts)) {
            result.real_count = 0;
            return result;
        }
        solved_system = sys.basis(TermOrder::lex(), opts).elements;
    }

    ParamSolve ps;
    std::vector<GaussianRational> partial;
    solve_parameters(solved_system, pctx, 0, partial, ps);

    // Solutions of the triangular pass are candidates; keep those where the
    // original system and the constraints really vanish.
    for (auto& sol : ps.solutions) {
        bool genuine = true;
        Point full(pctx->size());
        for (std::size_t k = 0; k < sol.size(); ++k) full[k] = sol[k];
        for (const Polynomial& q : system)
            if (!q.evaluate(full).is_zero()) genuine = false;
        if (!genuine) continue;
        Ideal leaf = family.leaf_at(sol, H.zcontext());
        result.parameter_solutions.push_back(sol);
        result.leaves.push_back(std::move(leaf));
    }

    // With a single parameter the Sturm count is exact even when roots are
    // not rational.
    if (n_params == 1) {
        UnivariateQ g = common_real_zero_poly(system, 0);
        if (!g.empty()) {
            int exact = count_real_roots(g);
            result.real_count = exact;
            result.may_have_more = exact > int(result.parameter_solutions.size());
        } else {
            result.degenerate = true;
        }
    } else {
        result.real_count = int(result.parameter_solutions.size());
        result.may_have_more = ps.more;
    }
    result.notes.insert(result.notes.end(), ps.notes.begin(), ps.notes.end());
    return result;
}

} // namespace lf
