#include "leviflat/polynomial.hpp"

#include <algorithm>

namespace lf {

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> Polynomial::bidegree_if_bihomogeneous() const {
    std::optional<std::pair<std::uint64_t, std::uint64_t>> bd;
    for (const auto& [m, c] : terms_) {
        auto d = m.bidegree(ctx_->n_z());
        if (!bd) {
            bd = d;
        } else if (*bd != d) {
            return std::nullopt;
        }
    }
    return bd;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    require_same_context(ctx_, q.ctx_, "polynomial addition");
    Polynomial r = *this;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
    require_same_context(ctx_, q.ctx_, "polynomial subtraction");
    Polynomial r = *this;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    require_same_context(ctx_, q.ctx_, "polynomial multiplication");
    Polynomial r(ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : q.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial acc = Polynomial::constant(ctx_, GaussianRational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

int Polynomial::cmp(const Polynomial& q) const {
    auto a = terms_.begin();
    auto b = q.terms_.begin();
    for (; a != terms_.end() && b != q.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first ? -1 : 1;
        int c = a->second.cmp(b->second);
        if (c != 0) return c;
    }
    if (a != terms_.end()) return 1;
    if (b != q.terms_.end()) return -1;
    return 0;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ctx_->size()) throw InputError("derivative: variable index out of range");
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * GaussianRational(long(m[var])));
    }
    return r;
}

GaussianRational Polynomial::evaluate(const std::vector<GaussianRational>& point) const {
    if (point.size() != ctx_->size()) throw InputError("evaluate: point length does not match context");
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t k = 0; k < point.size(); ++k) {
            for (std::uint32_t e = 0; e < m[k]; ++e) t *= point[k];
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
    require_same_context(ctx_, value.ctx_, "substitute");
    std::vector<Polynomial> coeffs = coefficients_in(var);
    Polynomial r(ctx_);
    Polynomial p = Polynomial::constant(ctx_, GaussianRational(1));
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (!coeffs[e].is_zero()) r = r + coeffs[e] * p;
        if (e + 1 < coeffs.size()) p = p * value;
    }
    return r;
}

Polynomial Polynomial::substitute_values(
    const std::vector<std::pair<std::size_t, GaussianRational>>& values) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        GaussianRational k = c;
        Monomial rm = m;
        for (const auto& [var, val] : values) {
            for (std::uint32_t e = 0; e < m[var]; ++e) k *= val;
            rm[var] = 0;
        }
        r.add_term(rm, k);
    }
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    std::uint32_t d = degree_in(var);
    std::vector<Polynomial> out(std::size_t(d) + 1, Polynomial(ctx_));
    for (const auto& [m, c] : terms_) {
        Monomial rm = m;
        std::uint32_t e = rm[var];
        rm[var] = 0;
        out[e].add_term(rm, c);
    }
    return out;
}

Polynomial Polynomial::conj_coefficients() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
    return r;
}

Polynomial Polynomial::swap_blocks() const {
    if (!ctx_->has_w_block()) throw InputError("swap_blocks requires a w-block");
    std::size_t n = ctx_->n_z();
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        Monomial s(m.nvars());
        for (std::size_t k = 0; k < n; ++k) {
            s[k] = m[n + k];
            s[n + k] = m[k];
        }
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

Polynomial Polynomial::remap(ContextPtr new_ctx, const std::vector<std::size_t>& index_map) const {
    if (index_map.size() != ctx_->size()) throw InputError("remap: index map size mismatch");
    Polynomial r(new_ctx);
    for (const auto& [m, c] : terms_) {
        Monomial t(new_ctx->size());
        for (std::size_t k = 0; k < index_map.size(); ++k) {
            if (m[k] == 0) continue;
            if (index_map[k] >= new_ctx->size())
                throw InputError("remap: variable " + ctx_->name(k) + " has no image");
            t[index_map[k]] += m[k];
        }
        r.add_term(t, c);
    }
    return r;
}

const Monomial& Polynomial::leading_monomial(const MonomialCompare& cmp) const {
    if (terms_.empty()) throw InputError("leading monomial of the zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || cmp.greater(m, *best)) best = &m;
    return *best;
}

std::pair<Monomial, GaussianRational> Polynomial::leading_term(const MonomialCompare& cmp) const {
    const Monomial& m = leading_monomial(cmp);
    return {m, terms_.at(m)};
}

std::vector<std::pair<Monomial, GaussianRational>> Polynomial::sorted_terms(
    const MonomialCompare& cmp) const {
    std::vector<std::pair<Monomial, GaussianRational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [&](const auto& a, const auto& b) { return cmp.greater(a.first, b.first); });
    return v;
}

Polynomial embed_in_full(const Polynomial& p, const ContextPtr& full) {
    if (p.context()->has_w_block()) throw InputError("embed_in_full expects a z-only polynomial");
    if (full->n_z() != p.context()->n_z()) throw InputError("embed_in_full: z-block size mismatch");
    std::vector<std::size_t> map(p.context()->size());
    for (std::size_t k = 0; k < map.size(); ++k) map[k] = k;
    return p.remap(full, map);
}

Polynomial mirror_into_w(const Polynomial& p, const ContextPtr& full) {
    if (p.context()->has_w_block()) throw InputError("mirror_into_w expects a z-only polynomial");
    if (full->n_z() != p.context()->n_z()) throw InputError("mirror_into_w: z-block size mismatch");
    std::vector<std::size_t> map(p.context()->size());
    for (std::size_t k = 0; k < map.size(); ++k) map[k] = full->n_z() + k;
    return p.conj_coefficients().remap(full, map);
}

Polynomial restrict_to_z(const Polynomial& p, const ContextPtr& zctx) {
    const auto& full = p.context();
    if (zctx->n_z() != full->n_z()) throw InputError("restrict_to_z: z-block size mismatch");
    std::vector<std::size_t> map(full->size(), zctx->size());
    for (std::size_t k = 0; k < full->n_z(); ++k) map[k] = k;
    return p.remap(zctx, map); // throws if a w-variable actually occurs
}

Polynomial substitute_w_point(const Polynomial& p, const std::vector<GaussianRational>& w_values,
                              const ContextPtr& zctx) {
    const auto& full = p.context();
    if (w_values.size() != full->n_w()) throw InputError("substitute_w_point: value count mismatch");
    std::vector<std::pair<std::size_t, GaussianRational>> subs;
    subs.reserve(w_values.size());
    for (std::size_t k = 0; k < w_values.size(); ++k) subs.emplace_back(full->n_z() + k, w_values[k]);
    return restrict_to_z(p.substitute_values(subs), zctx);
}

} // namespace lf
