#include <gtest/gtest.h>

#include "support.hpp"
#include "vpp/polyring.hpp"

using vpp::Coeff;
using vpp::Polynomial;

namespace
{

const Polynomial t = Polynomial::variable();

TEST(Polynomial, TrimsTrailingZeros)
{
    const Polynomial p{1, 2, 0, 0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(p.coeffs().size(), 2u);
    EXPECT_TRUE((Polynomial{0, 0}).is_zero());
    EXPECT_EQ(Polynomial().degree(), Polynomial::kZeroDegree);
}

TEST(Polynomial, CoefficientAccess)
{
    const Polynomial p{3, 0, -1};
    EXPECT_EQ(p.coeff_at(0), 3);
    EXPECT_EQ(p.coeff_at(2), -1);
    EXPECT_EQ(p.coeff_at(17), 0);
    EXPECT_EQ(p.leading(), -1);
    EXPECT_EQ(Polynomial().leading(), 0);
}

TEST(Polynomial, CanonicalText)
{
    EXPECT_EQ(to_string(Polynomial{1, -2, Coeff(1, 2)}), "1 - 2*t + 1/2*t^2");
    EXPECT_EQ(to_string(Polynomial{1, 2, 1}), "1 + 2*t + t^2");
    EXPECT_EQ(to_string(Polynomial()), "0");
    EXPECT_EQ(to_string(Polynomial{0, -1}), "-t");
    EXPECT_EQ(to_string(Polynomial{0, 0, 0, Coeff(-3, 4)}), "-3/4*t^3");
}

TEST(Polynomial, LatexText)
{
    EXPECT_EQ(to_latex(Polynomial{1, 0, 1, 0, 1, 0, 1}), "1 + t^{2} + t^{4} + t^{6}");
    EXPECT_EQ(to_latex(Polynomial{0, 0, 0, 4}), "4 t^{3}");
}

TEST(Polynomial, HugeCoefficientsStayExact)
{
    const Coeff big(mpz_class("340282366920938463463374607431768211457"));
    const Polynomial p{big, 1};
    const Polynomial sq = p * p;
    EXPECT_EQ(sq.coeff_at(0), big * big);
    EXPECT_EQ(sq.coeff_at(1), 2 * big);
    EXPECT_EQ(coeff_strings(sq)[0], Coeff(big * big).get_str());
}

TEST(Polynomial, RingAxiomsRandomized)
{
    support::Gen gen(20240601);
    for (int i = 0; i < 1000; ++i) {
        const auto a = gen.poly();
        const auto b = gen.poly();
        const auto c = gen.poly();
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + Polynomial(), a);
        ASSERT_EQ(a * Polynomial(1), a);
        ASSERT_TRUE((a - a).is_zero());
        ASSERT_TRUE((a * Polynomial()).is_zero());
    }
}

TEST(Polynomial, DivmodIdentity)
{
    support::Gen gen(7);
    for (int i = 0; i < 500; ++i) {
        const auto a = gen.poly(8);
        const auto b = gen.nonzero_poly(4);
        const auto [q, r] = divmod(a, b);
        ASSERT_EQ(q * b + r, a);
        ASSERT_TRUE(r.is_zero() || r.degree() < b.degree());
    }
}

TEST(Polynomial, ExactDivRoundTrip)
{
    support::Gen gen(11);
    for (int i = 0; i < 500; ++i) {
        const auto a = gen.poly();
        const auto b = gen.nonzero_poly();
        ASSERT_EQ(exact_div(a * b, b), a);
    }
}

TEST(Polynomial, ExactDivFailureCarriesRemainder)
{
    try {
        (void)exact_div(Polynomial{1, 0, 1}, Polynomial{1, 1});
        FAIL() << "expected a DivisionFailure";
    } catch (const vpp::DivisionFailure &e) {
        EXPECT_EQ(e.remainder(), Polynomial(2));
    }
    EXPECT_THROW((void)divmod(Polynomial{1}, Polynomial()), std::domain_error);
}

TEST(Polynomial, PowMatchesRepeatedProduct)
{
    const Polynomial p{1, 1};
    Polynomial acc(1);
    for (unsigned long n = 0; n < 12; ++n) {
        ASSERT_EQ(pow(p, n), acc);
        acc *= p;
    }
    EXPECT_EQ(pow(Polynomial(), 0), Polynomial(1));
}

TEST(Polynomial, SubstituteDegreeLaw)
{
    support::Gen gen(13);
    for (int i = 0; i < 300; ++i) {
        const auto p = gen.nonzero_poly(5);
        const auto s = gen.nonzero_poly(3);
        if (s.degree() < 1) {
            continue;
        }
        ASSERT_EQ(substitute(p, s).degree(), p.degree() * s.degree());
    }
    EXPECT_EQ(substitute(Polynomial{1, 1}, -t * t), (Polynomial{1, 0, -1}));
}

TEST(Polynomial, EvalAgreesWithCoefficients)
{
    support::Gen gen(17);
    for (int i = 0; i < 300; ++i) {
        const auto p = gen.poly();
        Coeff x(gen.small(-5, 5), gen.small(1, 4));
        x.canonicalize();
        Coeff direct = 0;
        Coeff power = 1;
        for (const auto &c : p.coeffs()) {
            direct += c * power;
            power *= x;
        }
        ASSERT_EQ(eval_at(p, x), direct);
        ASSERT_EQ(eval_at(p, Coeff(0)), coeff_at(p, 0));
    }
}

TEST(Polynomial, Palindromes)
{
    EXPECT_TRUE(is_palindromic(Polynomial{1, 4, 7, 4, 1}));
    EXPECT_FALSE(is_palindromic(Polynomial{1, 2}));
    EXPECT_FALSE(is_palindromic(Polynomial{0, 1, 1}));
    EXPECT_THROW((void)is_palindromic(Polynomial()), std::invalid_argument);
    EXPECT_EQ(reversed(Polynomial{1, 2, 3}), (Polynomial{3, 2, 1}));
}

TEST(Polynomial, ValuationAndShifts)
{
    const Polynomial p = Polynomial{2, 1}.shifted(5);
    EXPECT_EQ(t_adic_valuation(p), 5u);
    EXPECT_EQ(p.truncated(5), Polynomial::monomial(2, 5));
    EXPECT_EQ((Polynomial{1, 2, 3}).derivative(), (Polynomial{2, 6}));
    EXPECT_EQ((Polynomial{2, 4}).monic(), (Polynomial{Coeff(1, 2), 1}));
}

TEST(Polynomial, IntegerCoefficientCheck)
{
    EXPECT_TRUE(has_integer_coeffs(Polynomial{1, -7, 3}));
    EXPECT_FALSE(has_integer_coeffs(Polynomial{1, Coeff(1, 3)}));
}

} // namespace
