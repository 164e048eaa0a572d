#ifndef LEVIFLAT_POLYNOMIAL_HPP
#define LEVIFLAT_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "leviflat/context.hpp"
#include "leviflat/monomial.hpp"
#include "leviflat/order.hpp"
#include "leviflat/rational.hpp"

namespace lf {

// Sparse multivariate polynomial over Q(i) in a fixed variable context.
// Terms are kept in a canonical map with zero coefficients pruned, so
// equal polynomials compare equal structurally.  Values are immutable in
// spirit: all operations return new polynomials.
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }

    static Polynomial constant(ContextPtr ctx, const GaussianRational& c) {
        Polynomial p(std::move(ctx));
        if (!c.is_zero()) p.terms_.emplace(Monomial(p.ctx_->size()), c);
        return p;
    }

    static Polynomial variable(ContextPtr ctx, std::size_t idx) {
        if (idx >= ctx->size()) throw InputError("variable index out of range");
        Monomial m(ctx->size());
        m[idx] = 1;
        Polynomial p(std::move(ctx));
        p.terms_.emplace(std::move(m), GaussianRational(1));
        return p;
    }

    static Polynomial term(ContextPtr ctx, Monomial m, const GaussianRational& c) {
        if (m.nvars() != ctx->size()) throw InputError("monomial size does not match context");
        Polynomial p(std::move(ctx));
        if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
        return p;
    }

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    // Constant term (zero if absent).
    GaussianRational constant_coefficient() const {
        auto it = terms_.find(Monomial(ctx_->size()));
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    GaussianRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) {
            std::uint64_t t = m.total_degree();
            if (t > d) d = t;
        }
        return d;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_)
            if (m[var] > d) d = m[var];
        return d;
    }

    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

    // Maximal (z-degree, w-degree) over the support, componentwise.
    std::pair<std::uint64_t, std::uint64_t> max_bidegree() const {
        std::uint64_t dz = 0, dw = 0;
        for (const auto& [m, c] : terms_) {
            auto [a, b] = m.bidegree(ctx_->n_z());
            if (a > dz) dz = a;
            if (b > dw) dw = b;
        }
        return {dz, dw};
    }

    // Bidegree when bihomogeneous; nullopt otherwise.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> bidegree_if_bihomogeneous() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator*(const Polynomial& q) const;

    Polynomial scaled(const GaussianRational& c) const;
    Polynomial pow(std::uint32_t e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Deterministic total order for stable sorting of polynomial lists.
    int cmp(const Polynomial& q) const;

    // Formal partial derivative with respect to variable var.
    Polynomial derivative(std::size_t var) const;

    // Exact evaluation at a full point (one value per context variable).
    GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

    // Substitute a polynomial for one variable.
    Polynomial substitute(std::size_t var, const Polynomial& value) const;

    // Substitute exact values for a subset of variables; the result stays in
    // the same context (the substituted variables simply no longer occur).
    Polynomial substitute_values(const std::vector<std::pair<std::size_t, GaussianRational>>& values) const;

    // Coefficients of powers of one variable: result[e] = coefficient of
    // var^e, with var deleted from each term.  result.size() = deg+1.
    std::vector<Polynomial> coefficients_in(std::size_t var) const;

    // Coefficient-wise complex conjugation.
    Polynomial conj_coefficients() const;

    // Exchange the z- and w-exponent blocks (requires a w-block).
    Polynomial swap_blocks() const;

    // Mirror image: conjugated coefficients with the z/w roles exchanged.
    // For a context without a w-block the variables themselves are re-read
    // as mirror coordinates, so only coefficients are conjugated.
    Polynomial mirror() const { return ctx_->has_w_block() ? conj_coefficients().swap_blocks() : conj_coefficients(); }

    // Transport into another context along an index map (old -> new).
    Polynomial remap(ContextPtr new_ctx, const std::vector<std::size_t>& index_map) const;

    // Leading monomial/term with respect to an order.
    const Monomial& leading_monomial(const MonomialCompare& cmp) const;
    std::pair<Monomial, GaussianRational> leading_term(const MonomialCompare& cmp) const;

    // Terms sorted descending under an order.
    std::vector<std::pair<Monomial, GaussianRational>> sorted_terms(const MonomialCompare& cmp) const;

    // In-place helpers used by the arithmetic kernels.
    void add_term(const Monomial& m, const GaussianRational& c);

private:
    ContextPtr ctx_;
    TermMap terms_;
};

// Convenience free functions used throughout the higher level modules.

// Embed a z-only polynomial into the matching full (z, w) context.
Polynomial embed_in_full(const Polynomial& p, const ContextPtr& full);

// Embed the mirror of a z-only polynomial into the w-block of a full
// context: z^mu -> conj(coeff) * w^mu.
Polynomial mirror_into_w(const Polynomial& p, const ContextPtr& full);

// Restrict a full-context polynomial containing no w-variable to the
// z-subcontext.
Polynomial restrict_to_z(const Polynomial& p, const ContextPtr& zctx);

// Substitute w := value (one value per w-variable) and return the result
// in the z-subcontext.
Polynomial substitute_w_point(const Polynomial& p, const std::vector<GaussianRational>& w_values,
                              const ContextPtr& zctx);

} // namespace lf

#endif
