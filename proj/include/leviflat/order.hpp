#ifndef LEVIFLAT_ORDER_HPP
#define LEVIFLAT_ORDER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "leviflat/context.hpp"
#include "leviflat/monomial.hpp"

namespace lf {

// Monomial order descriptor.  Variable priority is always w-block first
// (w1 > ... > wN > z1 > ... > zN); contexts without a w-block fall back to
// the natural z1 > ... > zN.
//
//   grevlex  - graded reverse lexicographic over all variables (default)
//   lex      - lexicographic over all variables
//   elim_w   - block order w-block >> z-block, grevlex inside each block;
//              an elimination order for the w-block
//   elim_z   - block order z-block >> w-block
//   elim_set - custom front block (used internally, e.g. for saturation)
struct TermOrder {
    enum class Kind { Grevlex, Lex, ElimW, ElimZ, ElimSet };

    Kind kind = Kind::Grevlex;
    std::vector<std::size_t> elim; // populated for ElimSet only

    static TermOrder grevlex() { return {Kind::Grevlex, {}}; }
    static TermOrder lex() { return {Kind::Lex, {}}; }
    static TermOrder elim_w() { return {Kind::ElimW, {}}; }
    static TermOrder elim_z() { return {Kind::ElimZ, {}}; }
    static TermOrder elim_set(std::vector<std::size_t> vars) { return {Kind::ElimSet, std::move(vars)}; }

    std::string str() const {
        switch (kind) {
            case Kind::Grevlex: return "grevlex";
            case Kind::Lex: return "lex";
            case Kind::ElimW: return "elim_w";
            case Kind::ElimZ: return "elim_z";
            case Kind::ElimSet: {
                std::string s = "elim{";
                for (std::size_t k = 0; k < elim.size(); ++k) {
                    if (k) s += ",";
                    s += std::to_string(elim[k]);
                }
                return s + "}";
            }
        }
        return "?";
    }

    friend bool operator==(const TermOrder& a, const TermOrder& b) {
        return a.kind == b.kind && a.elim == b.elim;
    }
    friend bool operator!=(const TermOrder& a, const TermOrder& b) { return !(a == b); }
};

// Concrete comparator: a TermOrder bound to a context.
class MonomialCompare {
public:
    MonomialCompare(const TermOrder& order, const VarContext& ctx);

    // -1 / 0 / +1 with +1 meaning a is the larger monomial.
    int cmp(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    // Variable indices in descending display priority.
    const std::vector<std::size_t>& priority() const { return priority_; }

private:
    static int grevlex_cmp(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& seq);
    static int lex_cmp(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& seq);

    TermOrder::Kind kind_;
    std::vector<std::size_t> priority_; // full priority sequence
    std::vector<std::size_t> front_;    // elimination block, priority order
    std::vector<std::size_t> back_;     // remaining variables, priority order
};

// Canonical display priority for a context: w-block before z-block.
std::vector<std::size_t> display_priority(const VarContext& ctx);

} // namespace lf

#endif
