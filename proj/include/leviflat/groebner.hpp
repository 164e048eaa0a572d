#ifndef LEVIFLAT_GROEBNER_HPP
#define LEVIFLAT_GROEBNER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "leviflat/polynomial.hpp"

namespace lf {

// Resource limits and defaults for basis computations.  Exceeding the
// budget raises BudgetExceededError; results are never silently truncated.
// The default order applies where an operation needs some basis and the
// caller did not fix one; elimination steps always use block orders.
struct GBOptions {
    std::uint64_t max_reductions = 200000;
    TermOrder default_order = TermOrder::grevlex();
};

// Counts elementary reduction steps against a hard cap.
class ReductionBudget {
public:
    explicit ReductionBudget(std::uint64_t limit) : limit_(limit) {}
    void charge() {
        if (++used_ > limit_)
            throw BudgetExceededError("S-pair reduction budget exceeded (" + std::to_string(limit_) +
                                      " steps)");
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

// A reduced Groebner basis: monic elements, pairwise non-divisible leading
// terms, fully reduced tails, sorted ascending by leading monomial.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    TermOrder order;
};

// Finitely generated ideal in a variable context, with a one-slot cache for
// the most recently computed basis.
class Ideal {
public:
    Ideal(ContextPtr ctx, std::vector<Polynomial> gens);

    static Ideal zero(ContextPtr ctx) { return Ideal(std::move(ctx), {}); }

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }

    // Reduced Groebner basis under the given order, cached.
    const GroebnerBasis& basis(const TermOrder& order = TermOrder::grevlex(),
                               const GBOptions& opts = {}) const;

    const GroebnerBasis* cached_basis() const { return cache_->gb ? &*cache_->gb : nullptr; }

private:
    struct Cache {
        std::optional<GroebnerBasis> gb;
    };

    ContextPtr ctx_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

// Remainder of multivariate division by a basis; fully reduced (no term of
// the result is divisible by a leading term of the basis).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis, ReductionBudget& budget);

// Same, against an ideal: uses the cached basis when present, otherwise
// computes one under grevlex.  Zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const Ideal& I, const GBOptions& opts = {});

bool ideal_contains(const Ideal& I, const Polynomial& f, const GBOptions& opts = {});

// J subset of I, tested generator by generator.
bool ideal_contains_ideal(const Ideal& I, const Ideal& J, const GBOptions& opts = {});

// Equality by mutual membership of generators.
bool ideal_equal(const Ideal& I, const Ideal& J, const GBOptions& opts = {});

bool is_unit_ideal(const Ideal& I, const GBOptions& opts = {});

Ideal ideal_sum(const Ideal& I, const Ideal& J);

// S-polynomial of two nonzero polynomials under an order.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialCompare& cmp);

// Post-hoc Buchberger criterion: every S-polynomial of the basis reduces to
// zero.  Used by the test suites on every basis they compute.
bool buchberger_criterion_holds(const GroebnerBasis& basis, const VarContext& ctx,
                                const GBOptions& opts = {});

enum class EliminationBlock { Z, W };

// Block elimination: the ideal of polynomials of I involving only the
// surviving block, returned over the surviving subcontext (names kept).
Ideal eliminate(const Ideal& I, EliminationBlock block, const GBOptions& opts = {});

// Dimension of the vanishing set, computed from the leading-term ideal as
// the largest variable subset containing no leading-term support.
// nullopt encodes the empty variety (unit ideal).  The zero ideal has the
// ambient dimension.
std::optional<int> krull_dimension(const Ideal& I, const GBOptions& opts = {});

// I : f^infinity via the extra-variable trick followed by elimination.
Ideal saturate(const Ideal& I, const Polynomial& f, const GBOptions& opts = {});

} // namespace lf

#endif
