#include "leviflat/parser.hpp"

#include <cctype>

namespace lf {

namespace {

struct Token {
    enum class Kind { Int, Ident, Tilde, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_space();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::Kind::End, "", line, col};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                t += src_[pos_];
                advance();
            }
            return {Token::Kind::Int, t, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                t += src_[pos_];
                advance();
            }
            return {Token::Kind::Ident, t, line, col};
        }
        advance();
        switch (c) {
            case '~': return {Token::Kind::Tilde, "~", line, col};
            case '+': return {Token::Kind::Plus, "+", line, col};
            case '-': return {Token::Kind::Minus, "-", line, col};
            case '*': return {Token::Kind::Star, "*", line, col};
            case '^': return {Token::Kind::Caret, "^", line, col};
            case '/': return {Token::Kind::Slash, "/", line, col};
            case '(': return {Token::Kind::LParen, "(", line, col};
            case ')': return {Token::Kind::RParen, ")", line, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    void skip_space() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r' || src_[pos_] == '\n')) {
            advance();
        }
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

constexpr std::uint32_t kExponentCap = 64;

class Parser {
public:
    Parser(const std::string& src, const ContextPtr& ctx) : lexer_(src), ctx_(ctx) { shift(); }

    std::unique_ptr<Expr> parse() {
        auto e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    void shift() { tok_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, tok_.line, tok_.col); }

    void expect(Token::Kind k, const char* what) {
        if (tok_.kind != k) fail(std::string("expected ") + what);
        if (k != Token::Kind::End) shift();
    }

    static std::unique_ptr<Expr> node(Expr::Kind k) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        return e;
    }

    std::unique_ptr<Expr> expr() {
        auto e = term();
        while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
            auto k = tok_.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
            shift();
            auto n = node(k);
            n->lhs = std::move(e);
            n->rhs = term();
            e = std::move(n);
        }
        return e;
    }

    std::unique_ptr<Expr> term() {
        auto e = factor();
        while (tok_.kind == Token::Kind::Star) {
            shift();
            auto n = node(Expr::Kind::Mul);
            n->lhs = std::move(e);
            n->rhs = factor();
            e = std::move(n);
        }
        return e;
    }

    std::unique_ptr<Expr> factor() {
        if (tok_.kind == Token::Kind::Minus) {
            shift();
            auto n = node(Expr::Kind::Neg);
            n->lhs = factor();
            return n;
        }
        return power();
    }

    std::unique_ptr<Expr> power() {
        auto base = atom();
        if (tok_.kind == Token::Kind::Caret) {
            shift();
            if (tok_.kind != Token::Kind::Int) fail("expected integer exponent after '^'");
            mpz_class e(tok_.text);
            if (e > kExponentCap) fail("exponent overflow (cap " + std::to_string(kExponentCap) + ")");
            auto n = node(Expr::Kind::Pow);
            n->exponent = std::uint32_t(e.get_ui());
            n->lhs = std::move(base);
            shift();
            return n;
        }
        return base;
    }

    std::unique_ptr<Expr> atom() {
        switch (tok_.kind) {
            case Token::Kind::Int: {
                mpz_class num(tok_.text);
                shift();
                mpz_class den(1);
                if (tok_.kind == Token::Kind::Slash) {
                    shift();
                    if (tok_.kind != Token::Kind::Int) fail("expected integer denominator");
                    den = mpz_class(tok_.text);
                    if (den == 0) fail("zero denominator");
                    shift();
                }
                auto n = node(Expr::Kind::Number);
                n->number = mpq_class(num, den);
                n->number.canonicalize();
                return n;
            }
            case Token::Kind::Ident: {
                if (tok_.text == "i") {
                    shift();
                    return node(Expr::Kind::Imaginary);
                }
                return variable(tok_.text, false);
            }
            case Token::Kind::Tilde: {
                shift();
                if (tok_.kind != Token::Kind::Ident) fail("expected variable after '~'");
                return variable(tok_.text, true);
            }
            case Token::Kind::LParen: {
                shift();
                auto e = expr();
                expect(Token::Kind::RParen, "')'");
                return e;
            }
            default:
                fail("unexpected token '" + tok_.text + "'");
        }
    }

    std::unique_ptr<Expr> variable(const std::string& name, bool conjugated) {
        std::size_t idx = ctx_->index_of(name);
        if (idx == ctx_->size()) fail("unknown variable '" + (conjugated ? "~" + name : name) + "'");
        if (conjugated) {
            if (!ctx_->has_w_block()) fail("'~' conjugate used in a context without a conjugate block");
            idx = ctx_->partner(idx);
        }
        auto n = node(Expr::Kind::Variable);
        n->var = idx;
        shift();
        return n;
    }

    Lexer lexer_;
    ContextPtr ctx_;
    Token tok_;
};

} // namespace

std::unique_ptr<Expr> parse_expr(const std::string& src, const ContextPtr& ctx) {
    return Parser(src, ctx).parse();
}

Polynomial lower(const Expr& e, const ContextPtr& ctx) {
    switch (e.kind) {
        case Expr::Kind::Number: return Polynomial::constant(ctx, GaussianRational(e.number));
        case Expr::Kind::Imaginary: return Polynomial::constant(ctx, GaussianRational::i());
        case Expr::Kind::Variable: return Polynomial::variable(ctx, e.var);
        case Expr::Kind::Neg: return -lower(*e.lhs, ctx);
        case Expr::Kind::Add: return lower(*e.lhs, ctx) + lower(*e.rhs, ctx);
        case Expr::Kind::Sub: return lower(*e.lhs, ctx) - lower(*e.rhs, ctx);
        case Expr::Kind::Mul: return lower(*e.lhs, ctx) * lower(*e.rhs, ctx);
        case Expr::Kind::Pow: return lower(*e.lhs, ctx).pow(e.exponent);
    }
    throw Error("unreachable expression kind");
}

Polynomial parse_poly(const std::string& src, const ContextPtr& ctx) {
    return lower(*parse_expr(src, ctx), ctx);
}

std::string print_coefficient(const GaussianRational& c) {
    if (c.re() != 0 && c.im() != 0) return "(" + c.str() + ")";
    return c.str();
}

namespace {

bool negative_ish(const GaussianRational& c) {
    if (c.re() != 0) return c.re() < 0;
    return c.im() < 0;
}

std::string monomial_text(const Monomial& m, const VarContext& ctx,
                          const std::vector<std::size_t>& priority, bool conjugate_style) {
    std::string out;
    for (std::size_t idx : priority) {
        std::uint32_t e = m[idx];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        if (conjugate_style && ctx.is_w(idx)) {
            out += "~" + ctx.name(ctx.partner(idx));
        } else {
            out += ctx.name(idx);
        }
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace

std::string print_poly(const Polynomial& p, bool conjugate_style) {
    if (p.is_zero()) return "0";
    const VarContext& ctx = *p.context();
    MonomialCompare cmp(TermOrder::grevlex(), ctx);
    auto terms = p.sorted_terms(cmp);
    auto priority = display_priority(ctx);

    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        GaussianRational coeff = c;
        if (first) {
            if (negative_ish(coeff)) {
                out += "-";
                coeff = -coeff;
            }
            first = false;
        } else {
            if (negative_ish(coeff)) {
                out += "-";
                coeff = -coeff;
            } else {
                out += "+";
            }
        }
        std::string mono = monomial_text(m, ctx, priority, conjugate_style);
        if (mono.empty()) {
            out += print_coefficient(coeff);
        } else if (coeff.is_one()) {
            out += mono;
        } else {
            out += print_coefficient(coeff) + "*" + mono;
        }
    }
    return out;
}

} // namespace lf
