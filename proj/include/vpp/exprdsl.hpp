#ifndef VPP_EXPRDSL_HPP
#define VPP_EXPRDSL_HPP

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "formulas.hpp"
#include "polyring.hpp"
#include "ratfunc.hpp"

// A small language of rational-function expressions in t with integer genus
// parameters g, g1, g2.
//
//   expr    := term (("+"|"-") term)*
//   term    := unary (("*"|"/") unary)*
//   unary   := "-" unary | power
//   power   := atom ("^" iatom)?
//   atom    := INT | "t" | "g" | "g1" | "g2" | "(" expr ")"
//   intexpr := iterm (("+"|"-") iterm)*
//   iterm   := iatom ("*" iatom)*
//   iatom   := INT | "g" | "g1" | "g2" | "(" intexpr ")" | "-" iatom
//
// An exponent is a single iatom, so `t^2 + t` is (t^2) + t and compound
// exponents are parenthesized: `(1+t)^(2*g-2)`.
namespace vpp::dsl
{

struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &message, SourceSpan span)
        : std::runtime_error(message + " at " + std::to_string(span.start) + ".." + std::to_string(span.end)),
          span_(span)
    {
    }

    SourceSpan span() const noexcept
    {
        return span_;
    }

private:
    SourceSpan span_;
};

class EvalError : public std::runtime_error
{
public:
    EvalError(const std::string &message, SourceSpan span) : std::runtime_error(message), span_(span)
    {
    }

    SourceSpan span() const noexcept
    {
        return span_;
    }

private:
    SourceSpan span_;
};

enum class Param { G, G1, G2 };

inline std::string_view param_name(Param p)
{
    switch (p) {
    case Param::G:
        return "g";
    case Param::G1:
        return "g1";
    default:
        return "g2";
    }
}

struct IntExpr;
using IntExprPtr = std::shared_ptr<const IntExpr>;

struct IntExpr {
    enum class Kind { Literal, Param, Neg, Add, Sub, Mul };
    Kind kind;
    long value = 0;
    Param param = Param::G;
    IntExprPtr lhs;
    IntExprPtr rhs;
    SourceSpan span;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { IntLiteral, Param, Var, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    mpz_class literal;
    Param param = Param::G;
    ExprPtr lhs;
    ExprPtr rhs;
    IntExprPtr exponent;
    SourceSpan span;
};

namespace detail
{

struct Token {
    enum class Kind { Int, Ident, Op, End };
    Kind kind;
    std::string text;
    SourceSpan span;
};

inline std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                ++i;
            }
            out.push_back({Token::Kind::Int, std::string(src.substr(start, i - start)), {start, i}});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                ++i;
            }
            out.push_back({Token::Kind::Ident, std::string(src.substr(start, i - start)), {start, i}});
        } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            ++i;
            out.push_back({Token::Kind::Op, std::string(1, c), {start, i}});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", {start, start + 1});
        }
    }
    out.push_back({Token::Kind::End, "", {src.size(), src.size()}});
    return out;
}

inline std::optional<Param> param_of(const std::string &ident)
{
    if (ident == "g") {
        return Param::G;
    }
    if (ident == "g1") {
        return Param::G1;
    }
    if (ident == "g2") {
        return Param::G2;
    }
    return std::nullopt;
}

class Parser
{
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src))
    {
    }

    ExprPtr parse_all()
    {
        if (peek().kind == Token::Kind::End) {
            throw ParseError("empty expression", peek().span);
        }
        auto e = expr();
        if (peek().kind != Token::Kind::End) {
            throw ParseError("unexpected '" + peek().text + "'", peek().span);
        }
        return e;
    }

private:
    const Token &peek() const
    {
        return tokens_[pos_];
    }

    bool at_op(char op) const
    {
        return peek().kind == Token::Kind::Op && peek().text[0] == op;
    }

    const Token &advance()
    {
        return tokens_[pos_++];
    }

    void expect_close(const Token &open)
    {
        if (!at_op(')')) {
            if (peek().kind == Token::Kind::End) {
                throw ParseError("unclosed parenthesis", open.span);
            }
            throw ParseError("expected ')' but found '" + peek().text + "'", peek().span);
        }
        advance();
    }

    static ExprPtr node(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs, SourceSpan span)
    {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        e->span = span;
        return e;
    }

    static IntExprPtr inode(IntExpr::Kind kind, IntExprPtr lhs, IntExprPtr rhs, SourceSpan span)
    {
        auto e = std::make_shared<IntExpr>();
        e->kind = kind;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        e->span = span;
        return e;
    }

    ExprPtr expr()
    {
        auto lhs = term();
        while (at_op('+') || at_op('-')) {
            const auto kind = advance().text[0] == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
            auto rhs = term();
            const SourceSpan span{lhs->span.start, rhs->span.end};
            lhs = node(kind, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    ExprPtr term()
    {
        auto lhs = unary();
        while (at_op('*') || at_op('/')) {
            const auto kind = advance().text[0] == '*' ? Expr::Kind::Mul : Expr::Kind::Div;
            auto rhs = unary();
            const SourceSpan span{lhs->span.start, rhs->span.end};
            lhs = node(kind, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    ExprPtr unary()
    {
        if (at_op('-')) {
            const auto start = advance().span.start;
            auto operand = unary();
            const SourceSpan span{start, operand->span.end};
            return node(Expr::Kind::Neg, std::move(operand), nullptr, span);
        }
        return power();
    }

    ExprPtr power()
    {
        auto base = atom();
        if (!at_op('^')) {
            return base;
        }
        advance();
        auto exponent = iatom();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Pow;
        e->span = {base->span.start, exponent->span.end};
        e->lhs = std::move(base);
        e->exponent = std::move(exponent);
        return e;
    }

    ExprPtr atom()
    {
        const Token &tok = peek();
        auto e = std::make_shared<Expr>();
        e->span = tok.span;
        switch (tok.kind) {
        case Token::Kind::Int:
            e->kind = Expr::Kind::IntLiteral;
            e->literal = mpz_class(tok.text);
            advance();
            return e;
        case Token::Kind::Ident:
            if (tok.text == "t") {
                e->kind = Expr::Kind::Var;
            } else if (auto p = param_of(tok.text)) {
                e->kind = Expr::Kind::Param;
                e->param = *p;
            } else {
                throw ParseError("unknown identifier '" + tok.text + "'", tok.span);
            }
            advance();
            return e;
        case Token::Kind::Op:
            if (tok.text == "(") {
                const Token &open = advance();
                auto inner = expr();
                expect_close(open);
                return inner;
            }
            throw ParseError("unexpected '" + tok.text + "'", tok.span);
        default:
            throw ParseError("unexpected end of input", tok.span);
        }
    }

    IntExprPtr intexpr()
    {
        auto lhs = iterm();
        while (at_op('+') || at_op('-')) {
            const auto kind = advance().text[0] == '+' ? IntExpr::Kind::Add : IntExpr::Kind::Sub;
            auto rhs = iterm();
            const SourceSpan span{lhs->span.start, rhs->span.end};
            lhs = inode(kind, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    IntExprPtr iterm()
    {
        auto lhs = iatom();
        while (at_op('*')) {
            advance();
            auto rhs = iatom();
            const SourceSpan span{lhs->span.start, rhs->span.end};
            lhs = inode(IntExpr::Kind::Mul, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    IntExprPtr iatom()
    {
        const Token &tok = peek();
        auto e = std::make_shared<IntExpr>();
        e->span = tok.span;
        switch (tok.kind) {
        case Token::Kind::Int:
            if (tok.text.size() > 9) {
                throw ParseError("exponent literal too large", tok.span);
            }
            e->kind = IntExpr::Kind::Literal;
            e->value = std::stol(tok.text);
            advance();
            return e;
        case Token::Kind::Ident:
            if (tok.text == "t") {
                throw ParseError("t is not allowed inside an exponent", tok.span);
            }
            if (auto p = param_of(tok.text)) {
                e->kind = IntExpr::Kind::Param;
                e->param = *p;
                advance();
                return e;
            }
            throw ParseError("unknown identifier '" + tok.text + "'", tok.span);
        case Token::Kind::Op:
            if (tok.text == "(") {
                const Token &open = advance();
                auto inner = intexpr();
                expect_close(open);
                return inner;
            }
            if (tok.text == "-") {
                const auto start = advance().span.start;
                auto operand = iatom();
                const SourceSpan span{start, operand->span.end};
                return inode(IntExpr::Kind::Neg, std::move(operand), nullptr, span);
            }
            throw ParseError("unexpected '" + tok.text + "' in exponent", tok.span);
        default:
            throw ParseError("missing exponent", tok.span);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ExprPtr parse(std::string_view text)
{
    return detail::Parser(text).parse_all();
}

using formulas::ParamBinding;

namespace detail
{

inline long bound_value(Param p, const ParamBinding &b, SourceSpan span)
{
    const std::optional<long> &v = p == Param::G ? b.g : (p == Param::G1 ? b.g1 : b.g2);
    if (!v) {
        throw EvalError("unbound parameter " + std::string(param_name(p)), span);
    }
    return *v;
}

template <typename Op>
long checked(Op op, long a, long b, SourceSpan span)
{
    long out = 0;
    if (op(a, b, &out)) {
        throw EvalError("exponent overflow", span);
    }
    return out;
}

} // namespace detail

inline long eval_int(const IntExpr &e, const ParamBinding &b)
{
    const auto add = [](long x, long y, long *r) { return __builtin_add_overflow(x, y, r); };
    const auto sub = [](long x, long y, long *r) { return __builtin_sub_overflow(x, y, r); };
    const auto mul = [](long x, long y, long *r) { return __builtin_mul_overflow(x, y, r); };
    switch (e.kind) {
    case IntExpr::Kind::Literal:
        return e.value;
    case IntExpr::Kind::Param:
        return detail::bound_value(e.param, b, e.span);
    case IntExpr::Kind::Neg:
        return detail::checked(sub, 0L, eval_int(*e.lhs, b), e.span);
    case IntExpr::Kind::Add:
        return detail::checked(add, eval_int(*e.lhs, b), eval_int(*e.rhs, b), e.span);
    case IntExpr::Kind::Sub:
        return detail::checked(sub, eval_int(*e.lhs, b), eval_int(*e.rhs, b), e.span);
    case IntExpr::Kind::Mul:
        return detail::checked(mul, eval_int(*e.lhs, b), eval_int(*e.rhs, b), e.span);
    }
    throw EvalError("malformed exponent", e.span);
}

// Exponents above this are rejected rather than expanded.
inline constexpr long kMaxExponent = 1L << 16;

inline RationalFunction eval(const Expr &e, const ParamBinding &b)
{
    switch (e.kind) {
    case Expr::Kind::IntLiteral:
        return RationalFunction(Coeff(e.literal));
    case Expr::Kind::Param:
        return RationalFunction(Coeff(detail::bound_value(e.param, b, e.span)));
    case Expr::Kind::Var:
        return RationalFunction(Polynomial::variable());
    case Expr::Kind::Neg:
        return -eval(*e.lhs, b);
    case Expr::Kind::Add:
        return eval(*e.lhs, b) + eval(*e.rhs, b);
    case Expr::Kind::Sub:
        return eval(*e.lhs, b) - eval(*e.rhs, b);
    case Expr::Kind::Mul:
        return eval(*e.lhs, b) * eval(*e.rhs, b);
    case Expr::Kind::Div: {
        auto den = eval(*e.rhs, b);
        if (den.is_zero()) {
            throw EvalError("division by zero", e.rhs->span);
        }
        return eval(*e.lhs, b) / den;
    }
    case Expr::Kind::Pow: {
        const long n = eval_int(*e.exponent, b);
        if (n < 0) {
            throw EvalError("negative exponent " + std::to_string(n), e.exponent->span);
        }
        if (n > kMaxExponent) {
            throw EvalError("exponent " + std::to_string(n) + " too large", e.exponent->span);
        }
        return pow(eval(*e.lhs, b), static_cast<unsigned long>(n));
    }
    }
    throw EvalError("malformed expression", e.span);
}

inline RationalFunction eval(const ExprPtr &e, const ParamBinding &b)
{
    return eval(*e, b);
}

namespace detail
{

inline int precedence(const IntExpr &e)
{
    switch (e.kind) {
    case IntExpr::Kind::Add:
    case IntExpr::Kind::Sub:
        return 1;
    case IntExpr::Kind::Mul:
        return 2;
    case IntExpr::Kind::Neg:
        return 3;
    default:
        return 4;
    }
}

inline int precedence(const Expr &e)
{
    switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
        return 2;
    case Expr::Kind::Neg:
        return 3;
    case Expr::Kind::Pow:
        return 4;
    default:
        return 5;
    }
}

inline std::string render_int(const IntExpr &e, int min_prec);

inline std::string wrap_int(const IntExpr &e, int min_prec)
{
    auto s = render_int(e, 0);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

inline std::string render_int(const IntExpr &e, int /*min_prec*/)
{
    switch (e.kind) {
    case IntExpr::Kind::Literal:
        return std::to_string(e.value);
    case IntExpr::Kind::Param:
        return std::string(param_name(e.param));
    case IntExpr::Kind::Neg:
        return "-" + wrap_int(*e.lhs, 3);
    case IntExpr::Kind::Add:
        return wrap_int(*e.lhs, 1) + "+" + wrap_int(*e.rhs, 2);
    case IntExpr::Kind::Sub:
        return wrap_int(*e.lhs, 1) + "-" + wrap_int(*e.rhs, 2);
    case IntExpr::Kind::Mul:
        return wrap_int(*e.lhs, 2) + "*" + wrap_int(*e.rhs, 3);
    }
    return {};
}

inline std::string render(const Expr &e);

inline std::string wrap(const Expr &e, int min_prec)
{
    auto s = render(e);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

inline std::string render(const Expr &e)
{
    switch (e.kind) {
    case Expr::Kind::IntLiteral:
        return e.literal.get_str();
    case Expr::Kind::Param:
        return std::string(param_name(e.param));
    case Expr::Kind::Var:
        return "t";
    case Expr::Kind::Neg:
        return "-" + wrap(*e.lhs, 3);
    case Expr::Kind::Add:
        return wrap(*e.lhs, 1) + " + " + wrap(*e.rhs, 2);
    case Expr::Kind::Sub:
        return wrap(*e.lhs, 1) + " - " + wrap(*e.rhs, 2);
    case Expr::Kind::Mul:
        return wrap(*e.lhs, 2) + "*" + wrap(*e.rhs, 3);
    case Expr::Kind::Div:
        return wrap(*e.lhs, 2) + "/" + wrap(*e.rhs, 3);
    case Expr::Kind::Pow: {
        const auto &x = *e.exponent;
        const bool bare = x.kind == IntExpr::Kind::Param || (x.kind == IntExpr::Kind::Literal && x.value >= 0);
        return wrap(*e.lhs, 5) + "^" + (bare ? render_int(x, 0) : "(" + render_int(x, 0) + ")");
    }
    }
    return {};
}

} // namespace detail

/// Canonical text with the minimal parentheses that reproduce the same tree.
inline std::string render(const ExprPtr &e)
{
    return detail::render(*e);
}

/// Number of power nodes in the tree, in pre-order.
inline std::size_t count_exponents(const ExprPtr &e)
{
    if (!e) {
        return 0;
    }
    return (e->kind == Expr::Kind::Pow ? 1 : 0) + count_exponents(e->lhs) + count_exponents(e->rhs);
}

namespace detail
{

inline ExprPtr mutate(const ExprPtr &e, std::size_t &index, long delta)
{
    if (!e) {
        return e;
    }
    if (e->kind == Expr::Kind::Pow) {
        if (index == 0) {
            auto copy = std::make_shared<Expr>(*e);
            auto lit = std::make_shared<IntExpr>();
            lit->kind = IntExpr::Kind::Literal;
            lit->value = delta < 0 ? -delta : delta;
            lit->span = e->exponent->span;
            auto shifted = std::make_shared<IntExpr>();
            shifted->kind = delta < 0 ? IntExpr::Kind::Sub : IntExpr::Kind::Add;
            shifted->lhs = e->exponent;
            shifted->rhs = lit;
            shifted->span = e->exponent->span;
            copy->exponent = shifted;
            --index;
            return copy;
        }
        --index;
    }
    auto lhs = mutate(e->lhs, index, delta);
    auto rhs = mutate(e->rhs, index, delta);
    if (lhs == e->lhs && rhs == e->rhs) {
        return e;
    }
    auto copy = std::make_shared<Expr>(*e);
    copy->lhs = std::move(lhs);
    copy->rhs = std::move(rhs);
    return copy;
}

} // namespace detail

/// Copy of e whose index-th power node (pre-order) has its exponent shifted
/// by delta.
inline ExprPtr mutate_exponent(const ExprPtr &e, std::size_t index, long delta)
{
    if (index >= count_exponents(e)) {
        throw std::out_of_range("mutate_exponent: no such power node");
    }
    std::size_t i = index;
    return detail::mutate(e, i, delta);
}

} // namespace vpp::dsl

#endif
