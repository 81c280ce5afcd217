#ifndef VPP_TESTS_SUPPORT_HPP
#define VPP_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vpp/exprdsl.hpp"
#include "vpp/polyring.hpp"

namespace support
{

inline vpp::Polynomial from_strings(const std::vector<std::string> &coeffs)
{
    std::vector<vpp::Coeff> v;
    for (const auto &s : coeffs) {
        v.emplace_back(s);
    }
    return vpp::Polynomial(std::move(v));
}

// Random exact coefficients: signed integers up to 2^128, sometimes with a
// small denominator, sometimes zero.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed)
    {
    }

    vpp::Coeff coeff()
    {
        const auto kind = rng_() % 8;
        if (kind == 0) {
            return vpp::Coeff(0);
        }
        mpz_class n = mpz_class(static_cast<unsigned long>(rng_() >> 1));
        if (kind >= 5) {
            n <<= 64;
            n += mpz_class(static_cast<unsigned long>(rng_() >> 1));
        }
        if (rng_() & 1) {
            n = -n;
        }
        vpp::Coeff c(n);
        if (kind == 3 || kind == 4) {
            c /= vpp::Coeff(static_cast<long>(rng_() % 9 + 2));
        }
        c.canonicalize();
        return c;
    }

    vpp::Polynomial poly(std::size_t max_degree = 6)
    {
        const std::size_t n = rng_() % (max_degree + 2);
        std::vector<vpp::Coeff> v;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(coeff());
        }
        return vpp::Polynomial(std::move(v));
    }

    vpp::Polynomial nonzero_poly(std::size_t max_degree = 6)
    {
        for (;;) {
            auto p = poly(max_degree);
            if (!p.is_zero()) {
                return p;
            }
        }
    }

    long small(long lo, long hi)
    {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::mt19937_64 &engine()
    {
        return rng_;
    }

private:
    std::mt19937_64 rng_;
};

// Structural equality of expression trees, ignoring source spans.
inline bool same_int(const vpp::dsl::IntExprPtr &a, const vpp::dsl::IntExprPtr &b)
{
    if (!a || !b) {
        return !a && !b;
    }
    return a->kind == b->kind && a->value == b->value && a->param == b->param && same_int(a->lhs, b->lhs) &&
           same_int(a->rhs, b->rhs);
}

inline bool same(const vpp::dsl::ExprPtr &a, const vpp::dsl::ExprPtr &b)
{
    if (!a || !b) {
        return !a && !b;
    }
    return a->kind == b->kind && a->literal == b->literal && a->param == b->param && same(a->lhs, b->lhs) &&
           same(a->rhs, b->rhs) && same_int(a->exponent, b->exponent);
}

// Random trees over t, g and small literals.
class TreeGen
{
public:
    explicit TreeGen(std::uint64_t seed) : gen_(seed)
    {
    }

    vpp::dsl::ExprPtr expr(int depth)
    {
        auto e = std::make_shared<vpp::dsl::Expr>();
        const long pick = depth <= 0 ? gen_.small(0, 2) : gen_.small(0, 8);
        switch (pick) {
        case 0:
            e->kind = vpp::dsl::Expr::Kind::IntLiteral;
            e->literal = gen_.small(0, 9);
            break;
        case 1:
            e->kind = vpp::dsl::Expr::Kind::Var;
            break;
        case 2:
            e->kind = vpp::dsl::Expr::Kind::Param;
            e->param = vpp::dsl::Param::G;
            break;
        case 3:
            e->kind = vpp::dsl::Expr::Kind::Neg;
            e->lhs = expr(depth - 1);
            break;
        case 8:
            e->kind = vpp::dsl::Expr::Kind::Pow;
            e->lhs = expr(depth - 1);
            e->exponent = iexpr(1);
            break;
        default:
            e->kind = static_cast<vpp::dsl::Expr::Kind>(static_cast<int>(vpp::dsl::Expr::Kind::Add) + pick - 4);
            e->lhs = expr(depth - 1);
            e->rhs = expr(depth - 1);
        }
        return e;
    }

    vpp::dsl::IntExprPtr iexpr(int depth)
    {
        auto e = std::make_shared<vpp::dsl::IntExpr>();
        const long pick = depth <= 0 ? gen_.small(0, 1) : gen_.small(0, 4);
        switch (pick) {
        case 0:
            e->kind = vpp::dsl::IntExpr::Kind::Literal;
            e->value = gen_.small(0, 3);
            break;
        case 1:
            e->kind = vpp::dsl::IntExpr::Kind::Param;
            e->param = vpp::dsl::Param::G;
            break;
        default:
            e->kind = static_cast<vpp::dsl::IntExpr::Kind>(static_cast<int>(vpp::dsl::IntExpr::Kind::Add) + pick - 2);
            e->lhs = iexpr(depth - 1);
            e->rhs = iexpr(depth - 1);
        }
        return e;
    }

private:
    Gen gen_;
};

} // namespace support

#endif
