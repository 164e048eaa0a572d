#ifndef LF_TEST_SUPPORT_HPP
#define LF_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "leviflat/parser.hpp"
#include "leviflat/polynomial.hpp"

namespace lftest {

using namespace lf;

inline Polynomial P(const std::string& src, const ContextPtr& ctx) { return parse_poly(src, ctx); }

inline GaussianRational GR(long n) { return GaussianRational(n); }
inline GaussianRational GRq(long num, long den) { return GaussianRational(mpq_class(num, den)); }
inline GaussianRational GRi(long re, long im) {
    return GaussianRational(mpq_class(re), mpq_class(im));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    GaussianRational coefficient() {
        // Small-height values, sometimes complex, sometimes fractional.
        long re = integer(-4, 4);
        long im = integer(0, 3) == 0 ? integer(-3, 3) : 0;
        long den = integer(0, 3) == 0 ? integer(2, 3) : 1;
        if (re == 0 && im == 0) re = 1;
        return GaussianRational(mpq_class(re, den), mpq_class(im, den));
    }

    Monomial monomial(const ContextPtr& ctx, unsigned max_total_degree) {
        Monomial m(ctx->size());
        unsigned d = unsigned(integer(0, long(max_total_degree)));
        for (unsigned k = 0; k < d; ++k) m[std::size_t(integer(0, long(ctx->size()) - 1))] += 1;
        return m;
    }

    Polynomial polynomial(const ContextPtr& ctx, unsigned max_total_degree, unsigned max_terms) {
        Polynomial p(ctx);
        unsigned nt = unsigned(integer(1, long(max_terms)));
        for (unsigned k = 0; k < nt; ++k) p.add_term(monomial(ctx, max_total_degree), coefficient());
        return p;
    }

    Polynomial nonzero_polynomial(const ContextPtr& ctx, unsigned deg, unsigned terms) {
        for (int tries = 0; tries < 50; ++tries) {
            Polynomial p = polynomial(ctx, deg, terms);
            if (!p.is_zero()) return p;
        }
        return Polynomial::variable(ctx, 0);
    }

    std::vector<GaussianRational> point(std::size_t n) {
        std::vector<GaussianRational> out;
        for (std::size_t k = 0; k < n; ++k)
            out.push_back(GaussianRational(mpq_class(integer(-5, 5), integer(1, 3))));
        return out;
    }

    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace lftest

#endif
