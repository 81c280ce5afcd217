#ifndef VPP_RATFUNC_HPP
#define VPP_RATFUNC_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyring.hpp"

namespace vpp
{

// Monic gcd over the coefficient field; gcd(0, 0) = 0.
template <ExactField F>
BasicPolynomial<F> gcd(BasicPolynomial<F> a, BasicPolynomial<F> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

template <ExactField F>
class BasicNotPolynomial : public std::domain_error
{
public:
    explicit BasicNotPolynomial(BasicPolynomial<F> denominator)
        : std::domain_error("rational function is not a polynomial"), denominator_(std::move(denominator))
    {
    }

    const BasicPolynomial<F> &denominator() const noexcept
    {
        return denominator_;
    }

private:
    BasicPolynomial<F> denominator_;
};

class PoleError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// num/den with gcd(num, den) = 1 and den monic. Two rational functions are
/// equal iff their numerators and denominators are equal.
template <ExactField F>
class BasicRationalFunction
{
public:
    using poly_type = BasicPolynomial<F>;

    BasicRationalFunction() : den_(F(1))
    {
    }

    BasicRationalFunction(poly_type p) : num_(std::move(p)), den_(F(1))
    {
    }

    BasicRationalFunction(const F &c) : BasicRationalFunction(poly_type(c))
    {
    }

    template <std::integral I>
    BasicRationalFunction(I c) : BasicRationalFunction(poly_type(F(c)))
    {
    }

    BasicRationalFunction(poly_type num, poly_type den)
    {
        if (den.is_zero()) {
            throw std::domain_error("rational function with zero denominator");
        }
        auto g = gcd(num, den);
        if (!g.is_constant()) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        const F lead = den.leading();
        if (lead != F(1)) {
            const F inv = F(F(1) / lead);
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        if (num.is_zero()) {
            den = poly_type(F(1));
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    const poly_type &num() const noexcept
    {
        return num_;
    }

    const poly_type &den() const noexcept
    {
        return den_;
    }

    bool is_zero() const noexcept
    {
        return num_.is_zero();
    }

    bool is_polynomial() const noexcept
    {
        return den_.degree() == 0;
    }

    friend bool operator==(const BasicRationalFunction &, const BasicRationalFunction &) = default;

    BasicRationalFunction operator-() const
    {
        BasicRationalFunction r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend BasicRationalFunction operator+(const BasicRationalFunction &a, const BasicRationalFunction &b)
    {
        if (a.den_ == b.den_) {
            return {a.num_ + b.num_, a.den_};
        }
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend BasicRationalFunction operator-(const BasicRationalFunction &a, const BasicRationalFunction &b)
    {
        return a + (-b);
    }

    friend BasicRationalFunction operator*(const BasicRationalFunction &a, const BasicRationalFunction &b)
    {
        if (a.is_polynomial() && b.is_polynomial()) {
            return from_reduced(a.num_ * b.num_, poly_type(F(1)));
        }
        // Cross-cancel first so the products stay coprime.
        const auto g1 = gcd(a.num_, b.den_);
        const auto g2 = gcd(b.num_, a.den_);
        return from_reduced(exact_div(a.num_, g1) * exact_div(b.num_, g2),
                            exact_div(a.den_, g2) * exact_div(b.den_, g1), true);
    }

    friend BasicRationalFunction operator/(const BasicRationalFunction &a, const BasicRationalFunction &b)
    {
        if (b.is_zero()) {
            throw std::domain_error("division by the zero rational function");
        }
        return a * b.inverse();
    }

    BasicRationalFunction inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("division by the zero rational function");
        }
        return from_reduced(den_, num_, true);
    }

    BasicRationalFunction &operator+=(const BasicRationalFunction &o)
    {
        return *this = *this + o;
    }

    BasicRationalFunction &operator-=(const BasicRationalFunction &o)
    {
        return *this = *this - o;
    }

    BasicRationalFunction &operator*=(const BasicRationalFunction &o)
    {
        return *this = *this * o;
    }

    BasicRationalFunction &operator/=(const BasicRationalFunction &o)
    {
        return *this = *this / o;
    }

private:
    // num and den already coprime; only the monic scaling remains.
    static BasicRationalFunction from_reduced(poly_type num, poly_type den, bool rescale = false)
    {
        BasicRationalFunction r;
        if (rescale && den.leading() != F(1)) {
            const F inv = F(F(1) / den.leading());
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        if (num.is_zero()) {
            den = poly_type(F(1));
        }
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    poly_type num_;
    poly_type den_;
};

using RationalFunction = BasicRationalFunction<Coeff>;
using NotPolynomial = BasicNotPolynomial<Coeff>;

template <ExactField F>
BasicRationalFunction<F> pow(const BasicRationalFunction<F> &r, unsigned long n)
{
    // Powers of coprime polynomials stay coprime, and a monic den stays monic.
    return BasicRationalFunction<F>(pow(r.num(), n), pow(r.den(), n));
}

template <ExactField F>
BasicPolynomial<F> to_polynomial(const BasicRationalFunction<F> &r)
{
    if (!r.is_polynomial()) {
        throw BasicNotPolynomial<F>(r.den());
    }
    return r.num();
}

/// Value at t = a of the quotient num/den, after removing every common
/// factor (t - a). Does not require num/den to be reduced, so it can take a
/// formula's raw numerator and denominator.
template <ExactField F>
F limit_at(BasicPolynomial<F> num, BasicPolynomial<F> den, const F &a)
{
    if (den.is_zero()) {
        throw std::domain_error("limit_at: zero denominator");
    }
    const BasicPolynomial<F> linear{F(-a), F(1)};
    while (den.eval_at(a) == F(0)) {
        if (num.eval_at(a) != F(0)) {
            throw PoleError("limit_at: the function has a pole at the requested point");
        }
        num = exact_div(num, linear);
        den = exact_div(den, linear);
    }
    return F(num.eval_at(a) / den.eval_at(a));
}

template <ExactField F>
F limit_at(const BasicRationalFunction<F> &r, const F &a)
{
    return limit_at(r.num(), r.den(), a);
}

/// Power series of r about t = 0, truncated after t^order.
template <ExactField F>
BasicPolynomial<F> series(const BasicRationalFunction<F> &r, std::size_t order)
{
    const auto &den = r.den();
    const F d0 = den.coeff_at(0);
    if (d0 == F(0)) {
        throw PoleError("series: expansion at a pole (denominator vanishes at t = 0)");
    }
    const F d0_inv = F(F(1) / d0);
    std::vector<F> out(order + 1, F(0));
    for (std::size_t k = 0; k <= order; ++k) {
        F acc = r.num().coeff_at(k);
        const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(den.degree()));
        for (std::size_t j = 1; j <= top; ++j) {
            acc -= F(den.coeff_at(j) * out[k - j]);
        }
        out[k] = F(acc * d0_inv);
    }
    return BasicPolynomial<F>(std::move(out));
}

inline std::string to_string(const RationalFunction &r)
{
    if (r.is_polynomial()) {
        return to_string(r.num());
    }
    return "(" + to_string(r.num()) + ") / (" + to_string(r.den()) + ")";
}

inline std::string to_latex(const RationalFunction &r)
{
    if (r.is_polynomial()) {
        return to_latex(r.num());
    }
    return "\\frac{" + to_latex(r.num()) + "}{" + to_latex(r.den()) + "}";
}

inline std::ostream &operator<<(std::ostream &os, const RationalFunction &r)
{
    return os << to_string(r);
}

} // namespace vpp

#endif
