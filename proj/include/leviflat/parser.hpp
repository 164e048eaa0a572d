#ifndef LEVIFLAT_PARSER_HPP
#define LEVIFLAT_PARSER_HPP

#include <memory>
#include <string>
#include <vector>

#include "leviflat/polynomial.hpp"

namespace lf {

// Abstract syntax for the textual polynomial language.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' INT)?
//   atom   := INT ('/' INT)? | 'i' | VAR | '~' VAR | '(' expr ')'
//
// VAR is any declared variable name (z3, w2, dz1, c, ...); '~zk' denotes the
// conjugate of zk and resolves to the w-block.  Implicit multiplication is
// not accepted and exponents are capped at 64.
struct Expr {
    enum class Kind { Number, Imaginary, Variable, Neg, Add, Sub, Mul, Pow };

    Kind kind;
    mpq_class number;            // Number
    std::size_t var = 0;         // Variable (resolved context index)
    std::uint32_t exponent = 0;  // Pow
    std::unique_ptr<Expr> lhs;
    std::unique_ptr<Expr> rhs;
};

// Parse source text into an AST over the given context.  Throws ParseError
// with a 1-based source position on malformed input, unknown variables and
// exponent overflow.
std::unique_ptr<Expr> parse_expr(const std::string& src, const ContextPtr& ctx);

// Lower an AST to a polynomial.
Polynomial lower(const Expr& e, const ContextPtr& ctx);

// parse_expr + lower.
Polynomial parse_poly(const std::string& src, const ContextPtr& ctx);

// Canonical text form; round-trips through parse_poly.  Terms are emitted
// in descending grevlex order (w-block ranked first).  With conjugate_style
// set, w-block variables print as ~zk instead of wk.
std::string print_poly(const Polynomial& p, bool conjugate_style = false);

// Render a single coefficient the way print_poly would (used by reports).
std::string print_coefficient(const GaussianRational& c);

} // namespace lf

#endif
