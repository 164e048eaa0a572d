#ifndef LEVIFLAT_CONTEXT_HPP
#define LEVIFLAT_CONTEXT_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "leviflat/errors.hpp"

namespace lf {

// Declared variable universe for polynomials: a z-block of holomorphic
// coordinates and an optional w-block representing their conjugates.
// Storage indices run z1..zN first, then w1..wN.  The w-block is either
// empty or the same size as the z-block.
//
// Comparison orders (printing, Groebner bases) rank the w-block above the
// z-block, matching the convention of writing conjugated factors first.
class VarContext {
public:
    VarContext(std::size_t n_z, std::size_t n_w) : n_z_(n_z), n_w_(n_w) {
        if (n_w != 0 && n_w != n_z) throw InputError("w-block must be empty or match the z-block");
        names_.reserve(n_z + n_w);
        for (std::size_t k = 1; k <= n_z; ++k) names_.push_back("z" + std::to_string(k));
        for (std::size_t k = 1; k <= n_w; ++k) names_.push_back("w" + std::to_string(k));
    }

    VarContext(std::size_t n_z, std::size_t n_w, std::vector<std::string> names)
        : n_z_(n_z), n_w_(n_w), names_(std::move(names)) {
        if (n_w != 0 && n_w != n_z) throw InputError("w-block must be empty or match the z-block");
        if (names_.size() != n_z + n_w) throw InputError("name list does not match variable count");
    }

    std::size_t n_z() const { return n_z_; }
    std::size_t n_w() const { return n_w_; }
    std::size_t size() const { return n_z_ + n_w_; }
    bool has_w_block() const { return n_w_ != 0; }

    bool is_w(std::size_t idx) const { return idx >= n_z_; }

    // Index of the conjugate partner (zk <-> wk).  Requires a w-block.
    std::size_t partner(std::size_t idx) const {
        return is_w(idx) ? idx - n_z_ : idx + n_z_;
    }

    const std::string& name(std::size_t idx) const { return names_.at(idx); }
    const std::vector<std::string>& names() const { return names_; }

    // Name lookup; returns size() when not found.
    std::size_t index_of(const std::string& name) const {
        for (std::size_t k = 0; k < names_.size(); ++k)
            if (names_[k] == name) return k;
        return names_.size();
    }

    friend bool operator==(const VarContext& a, const VarContext& b) {
        return a.n_z_ == b.n_z_ && a.n_w_ == b.n_w_ && a.names_ == b.names_;
    }
    friend bool operator!=(const VarContext& a, const VarContext& b) { return !(a == b); }

private:
    std::size_t n_z_;
    std::size_t n_w_;
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline ContextPtr make_context(std::size_t n_z, std::size_t n_w = 0) {
    return std::make_shared<const VarContext>(n_z, n_w);
}

inline ContextPtr make_context(std::size_t n_z, std::size_t n_w, std::vector<std::string> names) {
    return std::make_shared<const VarContext>(n_z, n_w, std::move(names));
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* what) {
    if (!same_context(a, b)) throw ContextMismatchError(std::string(what) + ": variable contexts differ");
}

// The z-block of a full (z, w) context, names preserved.
inline ContextPtr z_subcontext(const ContextPtr& full) {
    std::vector<std::string> names(full->names().begin(), full->names().begin() + full->n_z());
    return make_context(full->n_z(), 0, std::move(names));
}

// A full (z, w) context over the same z-block names.
inline ContextPtr complexified_context(const ContextPtr& zctx) {
    if (zctx->has_w_block()) return zctx;
    std::vector<std::string> names = zctx->names();
    for (std::size_t k = 1; k <= zctx->n_z(); ++k) names.push_back("w" + std::to_string(k));
    return make_context(zctx->n_z(), zctx->n_z(), std::move(names));
}

} // namespace lf

#endif
