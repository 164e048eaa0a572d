#ifndef LEVIFLAT_MONOMIAL_HPP
#define LEVIFLAT_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "leviflat/errors.hpp"

namespace lf {

// Exponent vector of a power product, length n_z + n_w of its context.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t k) const { return e_[k]; }
    std::uint32_t& operator[](std::size_t k) { return e_[k]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    bool is_one() const {
        for (auto x : e_)
            if (x) return false;
        return true;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    // (z-block degree, w-block degree).
    std::pair<std::uint64_t, std::uint64_t> bidegree(std::size_t n_z) const {
        std::uint64_t dz = 0, dw = 0;
        for (std::size_t k = 0; k < e_.size(); ++k) (k < n_z ? dz : dw) += e_[k];
        return {dz, dw};
    }

    bool divides(const Monomial& m) const {
        for (std::size_t k = 0; k < e_.size(); ++k)
            if (e_[k] > m.e_[k]) return false;
        return true;
    }

    Monomial lcm(const Monomial& m) const {
        Monomial r(e_.size());
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] > m.e_[k] ? e_[k] : m.e_[k];
        return r;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(e_.size());
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + m.e_[k];
        return r;
    }

    // Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const {
        Monomial r(e_.size());
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - m.e_[k];
        return r;
    }

    bool coprime(const Monomial& m) const {
        for (std::size_t k = 0; k < e_.size(); ++k)
            if (e_[k] && m.e_[k]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

    // Storage order for term maps: plain vector comparison.  This is a
    // deterministic total order, not a monomial order; term orders live in
    // TermOrder.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    std::vector<std::uint32_t> e_;
};

} // namespace lf

#endif
