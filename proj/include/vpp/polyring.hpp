#ifndef VPP_POLYRING_HPP
#define VPP_POLYRING_HPP

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace vpp
{

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Coeff = mpq_class;

template <typename F>
concept ExactField = std::regular<F> && requires(const F &a, const F &b) {
    { F(0) };
    { F(1) };
    { F(a + b) };
    { F(a - b) };
    { F(a * b) };
    { F(a / b) };
    { F(-a) };
};

template <ExactField F>
class BasicPolynomial;

// Thrown by exact_div when the Euclidean remainder is nonzero.
template <ExactField F>
class BasicDivisionFailure : public std::domain_error
{
public:
    explicit BasicDivisionFailure(BasicPolynomial<F> remainder)
        : std::domain_error("polynomial division leaves a nonzero remainder"), remainder_(std::move(remainder))
    {
    }

    const BasicPolynomial<F> &remainder() const noexcept
    {
        return remainder_;
    }

private:
    BasicPolynomial<F> remainder_;
};

/// Dense univariate polynomial in t over an exact field, stored by ascending
/// degree. The highest stored coefficient is always nonzero; the zero
/// polynomial has no coefficients and degree kZeroDegree.
template <ExactField F>
class BasicPolynomial
{
public:
    using coeff_type = F;

    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    BasicPolynomial() = default;

    BasicPolynomial(const F &constant)
    {
        if (constant != F(0)) {
            coeffs_.push_back(constant);
        }
    }

    template <std::integral I>
    BasicPolynomial(I constant) : BasicPolynomial(F(constant))
    {
    }

    BasicPolynomial(std::initializer_list<F> ascending) : coeffs_(ascending)
    {
        trim();
    }

    explicit BasicPolynomial(std::vector<F> ascending) : coeffs_(std::move(ascending))
    {
        trim();
    }

    static BasicPolynomial variable()
    {
        return monomial(F(1), 1);
    }

    static BasicPolynomial monomial(const F &c, std::size_t k)
    {
        if (c == F(0)) {
            return {};
        }
        std::vector<F> v(k + 1, F(0));
        v[k] = c;
        return BasicPolynomial(std::move(v));
    }

    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }

    long degree() const noexcept
    {
        return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
    }

    const std::vector<F> &coeffs() const noexcept
    {
        return coeffs_;
    }

    // Leading coefficient; zero for the zero polynomial.
    F leading() const
    {
        return coeffs_.empty() ? F(0) : coeffs_.back();
    }

    F coeff_at(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : F(0);
    }

    F eval_at(const F &x) const
    {
        F acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = F(acc * x + *it);
        }
        return acc;
    }

    bool is_constant() const noexcept
    {
        return coeffs_.size() <= 1;
    }

    friend bool operator==(const BasicPolynomial &, const BasicPolynomial &) = default;

    BasicPolynomial operator-() const
    {
        BasicPolynomial r(*this);
        for (auto &c : r.coeffs_) {
            c = F(-c);
        }
        return r;
    }

    BasicPolynomial &operator+=(const BasicPolynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), F(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }

    BasicPolynomial &operator-=(const BasicPolynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), F(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }

    BasicPolynomial &operator*=(const BasicPolynomial &o)
    {
        *this = *this * o;
        return *this;
    }

    friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial &b)
    {
        a += b;
        return a;
    }

    friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial &b)
    {
        a -= b;
        return a;
    }

    friend BasicPolynomial operator*(const BasicPolynomial &a, const BasicPolynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        return BasicPolynomial(multiply_dense(a.coeffs_, b.coeffs_));
    }

    BasicPolynomial scaled(const F &c) const
    {
        if (c == F(0)) {
            return {};
        }
        BasicPolynomial r(*this);
        for (auto &x : r.coeffs_) {
            x = F(x * c);
        }
        return r;
    }

    // Multiplication by t^k.
    BasicPolynomial shifted(std::size_t k) const
    {
        if (is_zero() || k == 0) {
            return *this;
        }
        std::vector<F> v(k, F(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return BasicPolynomial(std::move(v));
    }

    BasicPolynomial monic() const
    {
        return is_zero() ? *this : scaled(F(F(1) / leading()));
    }

    BasicPolynomial derivative() const
    {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<F> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            v[i - 1] = F(coeffs_[i] * F(static_cast<long>(i)));
        }
        return BasicPolynomial(std::move(v));
    }

    // Coefficients of t^0 .. t^order only.
    BasicPolynomial truncated(std::size_t order) const
    {
        if (coeffs_.size() <= order + 1) {
            return *this;
        }
        return BasicPolynomial(std::vector<F>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == F(0)) {
            coeffs_.pop_back();
        }
    }

    static std::vector<F> multiply_dense(const std::vector<F> &a, const std::vector<F> &b)
    {
        if constexpr (std::is_same_v<F, mpq_class>) {
            return multiply_rational(a, b);
        } else {
            std::vector<F> r(a.size() + b.size() - 1, F(0));
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == F(0)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.size(); ++j) {
                    r[i + j] += F(a[i] * b[j]);
                }
            }
            return r;
        }
    }

    // Clears denominators and convolves over the integers, which avoids a gcd
    // per multiply-add.
    static std::vector<mpq_class> multiply_rational(const std::vector<mpq_class> &a, const std::vector<mpq_class> &b)
    {
        auto to_integer = [](const std::vector<mpq_class> &v, mpz_class &den) {
            den = 1;
            for (const auto &c : v) {
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
            }
            std::vector<mpz_class> out(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                out[i] = v[i].get_num() * (den / v[i].get_den());
            }
            return out;
        };
        mpz_class da, db;
        const auto ia = to_integer(a, da);
        const auto ib = to_integer(b, db);
        std::vector<mpz_class> acc(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < ia.size(); ++i) {
            if (ia[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < ib.size(); ++j) {
                mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
            }
        }
        const mpz_class den = da * db;
        std::vector<mpq_class> r(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            r[i] = mpq_class(acc[i], den);
            r[i].canonicalize();
        }
        return r;
    }

    std::vector<F> coeffs_;
};

using Polynomial = BasicPolynomial<Coeff>;
using DivisionFailure = BasicDivisionFailure<Coeff>;

template <ExactField F>
BasicPolynomial<F> pow(BasicPolynomial<F> base, unsigned long n)
{
    BasicPolynomial<F> result(F(1));
    while (n != 0) {
        if (n & 1UL) {
            result *= base;
        }
        n >>= 1;
        if (n != 0) {
            base *= base;
        }
    }
    return result;
}

template <ExactField F>
struct DivMod {
    BasicPolynomial<F> quotient;
    BasicPolynomial<F> remainder;
};

template <ExactField F>
DivMod<F> divmod(const BasicPolynomial<F> &num, const BasicPolynomial<F> &den)
{
    if (den.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (num.degree() < den.degree()) {
        return {BasicPolynomial<F>{}, num};
    }
    std::vector<F> rem = num.coeffs();
    const auto &d = den.coeffs();
    const std::size_t dn = d.size();
    const F lead_inv = F(F(1) / d.back());
    std::vector<F> quot(rem.size() - dn + 1, F(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const F q = F(rem[k + dn - 1] * lead_inv);
        quot[k] = q;
        if (q == F(0)) {
            continue;
        }
        for (std::size_t j = 0; j < dn; ++j) {
            rem[k + j] -= F(q * d[j]);
        }
    }
    rem.resize(dn - 1);
    return {BasicPolynomial<F>(std::move(quot)), BasicPolynomial<F>(std::move(rem))};
}

// Quotient num/den, or BasicDivisionFailure carrying the remainder.
template <ExactField F>
BasicPolynomial<F> exact_div(const BasicPolynomial<F> &num, const BasicPolynomial<F> &den)
{
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) {
        throw BasicDivisionFailure<F>(std::move(r));
    }
    return std::move(q);
}

// p(s(t)) by Horner's rule.
template <ExactField F>
BasicPolynomial<F> substitute(const BasicPolynomial<F> &p, const BasicPolynomial<F> &s)
{
    BasicPolynomial<F> acc;
    const auto &c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * s + BasicPolynomial<F>(*it);
    }
    return acc;
}

template <ExactField F>
F coeff_at(const BasicPolynomial<F> &p, std::size_t k)
{
    return p.coeff_at(k);
}

template <ExactField F>
F eval_at(const BasicPolynomial<F> &p, const F &x)
{
    return p.eval_at(x);
}

template <ExactField F>
bool is_palindromic(const BasicPolynomial<F> &p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("is_palindromic: zero polynomial");
    }
    const auto &c = p.coeffs();
    return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

// t^deg p(1/t); palindromic iff equal to p.
template <ExactField F>
BasicPolynomial<F> reversed(const BasicPolynomial<F> &p)
{
    std::vector<F> c = p.coeffs();
    std::reverse(c.begin(), c.end());
    return BasicPolynomial<F>(std::move(c));
}

// Largest k with t^k dividing p; zero polynomial gives 0.
template <ExactField F>
std::size_t t_adic_valuation(const BasicPolynomial<F> &p)
{
    const auto &c = p.coeffs();
    std::size_t k = 0;
    while (k < c.size() && c[k] == F(0)) {
        ++k;
    }
    return k == c.size() ? 0 : k;
}

inline bool has_integer_coeffs(const Polynomial &p)
{
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Coeff &c) { return c.get_den() == 1; });
}

namespace detail
{

inline std::string coeff_string(const Coeff &c)
{
    return c.get_str();
}

inline std::string coeff_latex(const Coeff &c)
{
    if (c.get_den() == 1) {
        return c.get_num().get_str();
    }
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

} // namespace detail

/// Canonical ascending-degree rendering, e.g. `1 - 2*t + 1/2*t^2`. This is
/// the interchange format of the CLI and the test fixtures; it reparses
/// through the expression language.
inline std::string to_string(const Polynomial &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto &c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) {
            continue;
        }
        const bool negative = sgn(c[k]) < 0;
        const Coeff mag = abs(c[k]);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += detail::coeff_string(mag);
            continue;
        }
        if (mag != 1) {
            out += detail::coeff_string(mag) + "*";
        }
        out += "t";
        if (k > 1) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline std::string to_latex(const Polynomial &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto &c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) {
            continue;
        }
        const bool negative = sgn(c[k]) < 0;
        const Coeff mag = abs(c[k]);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += detail::coeff_latex(mag);
            continue;
        }
        if (mag != 1) {
            out += detail::coeff_latex(mag) + " ";
        }
        out += "t";
        if (k > 1) {
            out += "^{" + std::to_string(k) + "}";
        }
    }
    return out;
}

inline std::vector<std::string> coeff_strings(const Polynomial &p)
{
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        out.push_back(c.get_str());
    }
    return out;
}

inline std::ostream &operator<<(std::ostream &os, const Polynomial &p)
{
    return os << to_string(p);
}

} // namespace vpp

#endif
