#include "leviflat/order.hpp"

#include <algorithm>

namespace lf {

std::vector<std::size_t> display_priority(const VarContext& ctx) {
    std::vector<std::size_t> seq;
    seq.reserve(ctx.size());
    for (std::size_t k = 0; k < ctx.n_w(); ++k) seq.push_back(ctx.n_z() + k);
    for (std::size_t k = 0; k < ctx.n_z(); ++k) seq.push_back(k);
    return seq;
}

MonomialCompare::MonomialCompare(const TermOrder& order, const VarContext& ctx)
    : kind_(order.kind), priority_(display_priority(ctx)) {
    switch (order.kind) {
        case TermOrder::Kind::Grevlex:
        case TermOrder::Kind::Lex:
            break;
        case TermOrder::Kind::ElimW: {
            for (std::size_t k = 0; k < ctx.n_w(); ++k) front_.push_back(ctx.n_z() + k);
            for (std::size_t k = 0; k < ctx.n_z(); ++k) back_.push_back(k);
            break;
        }
        case TermOrder::Kind::ElimZ: {
            for (std::size_t k = 0; k < ctx.n_z(); ++k) front_.push_back(k);
            for (std::size_t k = 0; k < ctx.n_w(); ++k) back_.push_back(ctx.n_z() + k);
            break;
        }
        case TermOrder::Kind::ElimSet: {
            front_ = order.elim;
            for (std::size_t k : priority_)
                if (std::find(front_.begin(), front_.end(), k) == front_.end()) back_.push_back(k);
            break;
        }
    }
}

int MonomialCompare::grevlex_cmp(const Monomial& a, const Monomial& b,
                                 const std::vector<std::size_t>& seq) {
    std::int64_t da = 0, db = 0;
    for (std::size_t idx : seq) {
        da += a[idx];
        db += b[idx];
    }
    if (da != db) return da < db ? -1 : 1;
    // Same degree: the monomial with the smaller exponent on the lowest
    // priority variable that differs is the larger one.
    for (std::size_t k = seq.size(); k-- > 0;) {
        std::int64_t d = std::int64_t(a[seq[k]]) - std::int64_t(b[seq[k]]);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

int MonomialCompare::lex_cmp(const Monomial& a, const Monomial& b,
                             const std::vector<std::size_t>& seq) {
    for (std::size_t idx : seq) {
        std::int64_t d = std::int64_t(a[idx]) - std::int64_t(b[idx]);
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

int MonomialCompare::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case TermOrder::Kind::Grevlex: return grevlex_cmp(a, b, priority_);
        case TermOrder::Kind::Lex: return lex_cmp(a, b, priority_);
        default: {
            int c = grevlex_cmp(a, b, front_);
            if (c != 0) return c;
            return grevlex_cmp(a, b, back_);
        }
    }
}

} // namespace lf
