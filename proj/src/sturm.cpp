#include "leviflat/sturm.hpp"

#include <algorithm>

namespace lf {

UnivariateQ u_normalize(UnivariateQ p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool u_is_zero(const UnivariateQ& p) { return p.empty(); }

int u_degree(const UnivariateQ& p) { return int(p.size()) - 1; }

UnivariateQ u_derivative(const UnivariateQ& p) {
    UnivariateQ d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * long(k));
    return u_normalize(std::move(d));
}

UnivariateQ u_add(const UnivariateQ& a, const UnivariateQ& b) {
    UnivariateQ r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    return u_normalize(std::move(r));
}

UnivariateQ u_scale(const UnivariateQ& a, const mpq_class& c) {
    if (c == 0) return {};
    UnivariateQ r = a;
    for (auto& x : r) x *= c;
    return r;
}

UnivariateQ u_mul(const UnivariateQ& a, const UnivariateQ& b) {
    if (a.empty() || b.empty()) return {};
    UnivariateQ r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return u_normalize(std::move(r));
}

UnivariateQ u_rem(UnivariateQ a, const UnivariateQ& b) {
    if (b.empty()) throw std::invalid_argument("u_rem: division by the zero polynomial");
    a = u_normalize(std::move(a));
    while (!a.empty() && a.size() >= b.size()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        a = u_normalize(std::move(a));
    }
    return a;
}

UnivariateQ u_gcd(UnivariateQ a, UnivariateQ b) {
    a = u_normalize(std::move(a));
    b = u_normalize(std::move(b));
    while (!b.empty()) {
        UnivariateQ r = u_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        mpq_class lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

mpq_class u_eval(const UnivariateQ& p, const mpq_class& x) {
    mpq_class acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

namespace {

int sign_of(const mpq_class& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Sturm chain of the squarefree part.
std::vector<UnivariateQ> sturm_chain(const UnivariateQ& p) {
    UnivariateQ sf = p;
    UnivariateQ g = u_gcd(p, u_derivative(p));
    if (u_degree(g) > 0) {
        // Exact division p / g via repeated leading-term elimination.
        UnivariateQ q(p.size() - g.size() + 1, mpq_class(0));
        UnivariateQ rem = p;
        while (!rem.empty() && rem.size() >= g.size()) {
            mpq_class f = rem.back() / g.back();
            std::size_t shift = rem.size() - g.size();
            q[shift] = f;
            for (std::size_t k = 0; k < g.size(); ++k) rem[shift + k] -= f * g[k];
            rem = u_normalize(std::move(rem));
        }
        sf = u_normalize(std::move(q));
    }
    std::vector<UnivariateQ> chain;
    chain.push_back(sf);
    chain.push_back(u_derivative(sf));
    while (!chain.back().empty() && u_degree(chain.back()) >= 0) {
        UnivariateQ r = u_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations_at(const std::vector<UnivariateQ>& chain, const mpq_class& x) {
    int var = 0, last = 0;
    for (const auto& q : chain) {
        int s = sign_of(u_eval(q, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int variations_at_infinity(const std::vector<UnivariateQ>& chain, int dir) {
    int var = 0, last = 0;
    for (const auto& q : chain) {
        if (q.empty()) continue;
        int s = sign_of(q.back());
        if (dir < 0 && u_degree(q) % 2 == 1) s = -s;
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

// Cauchy bound: all real roots lie in (-B, B).
mpq_class root_bound(const UnivariateQ& p) {
    mpq_class b(0);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        mpq_class q = abs(p[k] / p.back());
        if (q > b) b = q;
    }
    return b + 1;
}

} // namespace

int count_real_roots(const UnivariateQ& p) {
    UnivariateQ q = u_normalize(p);
    if (q.empty()) return -1; // identically zero: infinitely many
    if (u_degree(q) == 0) return 0;
    auto chain = sturm_chain(q);
    return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

int count_real_roots_between(const UnivariateQ& p, const mpq_class& lo, const mpq_class& hi) {
    UnivariateQ q = u_normalize(p);
    if (q.empty()) return -1;
    if (u_degree(q) == 0) return 0;
    auto chain = sturm_chain(q);
    return variations_at(chain, lo) - variations_at(chain, hi);
}

std::vector<mpq_class> rational_roots(const UnivariateQ& p) {
    UnivariateQ q = u_normalize(p);
    std::vector<mpq_class> roots;
    if (q.empty() || u_degree(q) == 0) return roots;

    // Strip powers of the variable.
    std::size_t low = 0;
    while (low < q.size() && q[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(mpq_class(0));
        q.erase(q.begin(), q.begin() + long(low));
    }
    if (u_degree(q) < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    // Clear denominators to an integer polynomial.
    mpz_class lcm_den(1);
    for (const auto& c : q) {
        mpz_class d = c.get_den();
        lcm_den = lcm_den / gcd(lcm_den, d) * d;
    }
    std::vector<mpz_class> zp;
    zp.reserve(q.size());
    for (const auto& c : q) zp.push_back(mpz_class(c * lcm_den));

    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> out;
        mpz_class a = abs(n);
        for (mpz_class d(1); d * d <= a; ++d) {
            if (a % d == 0) {
                out.push_back(d);
                if (d * d != a) out.push_back(a / d);
            }
        }
        return out;
    };

    for (const mpz_class& num : divisors(zp.front())) {
        for (const mpz_class& den : divisors(zp.back())) {
            for (int s = -1; s <= 1; s += 2) {
                mpq_class cand(s * num, den);
                cand.canonicalize();
                if (u_eval(q, cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const UnivariateQ& p) {
    std::vector<std::pair<mpq_class, mpq_class>> out;
    UnivariateQ q = u_normalize(p);
    if (q.empty() || u_degree(q) == 0) return out;
    auto chain = sturm_chain(q);
    mpq_class bound = root_bound(q);

    std::vector<std::pair<mpq_class, mpq_class>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int n = variations_at(chain, lo) - variations_at(chain, hi);
        if (n <= 0) continue;
        if (n == 1) {
            out.emplace_back(lo, hi);
            continue;
        }
        mpq_class mid = (lo + hi) / 2;
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace lf
