#ifndef LEVIFLAT_STURM_HPP
#define LEVIFLAT_STURM_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace lf {

// Dense univariate polynomial over Q, coefficients low to high, no trailing
// zeros.  The zero polynomial is the empty vector.
using UnivariateQ = std::vector<mpq_class>;

UnivariateQ u_normalize(UnivariateQ p);
bool u_is_zero(const UnivariateQ& p);
int u_degree(const UnivariateQ& p); // -1 for zero
UnivariateQ u_derivative(const UnivariateQ& p);
UnivariateQ u_add(const UnivariateQ& a, const UnivariateQ& b);
UnivariateQ u_scale(const UnivariateQ& a, const mpq_class& c);
UnivariateQ u_mul(const UnivariateQ& a, const UnivariateQ& b);
// Euclidean remainder a mod b (b nonzero).
UnivariateQ u_rem(UnivariateQ a, const UnivariateQ& b);
UnivariateQ u_gcd(UnivariateQ a, UnivariateQ b); // monic gcd
mpq_class u_eval(const UnivariateQ& p, const mpq_class& x);

// Number of distinct real roots (Sturm's theorem over the whole line).
int count_real_roots(const UnivariateQ& p);
int count_real_roots_between(const UnivariateQ& p, const mpq_class& lo, const mpq_class& hi);

// All rational roots, ascending.
std::vector<mpq_class> rational_roots(const UnivariateQ& p);

// Isolating intervals (lo, hi] for every distinct real root, bisected until
// each interval holds exactly one root.
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const UnivariateQ& p);

} // namespace lf

#endif
