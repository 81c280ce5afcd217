// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"
#include "vpp/vpp.hpp"
#include "vpp/cli.hpp"

using vpp::Coeff;
using vpp::Polynomial;
using vpp::RationalFunction;
using namespace vpp::formulas;

namespace
{

// Collects the first few mismatches of one criterion.
class Check
{
public:
    void expect(bool ok, const std::string &what)
    {
        ++count_;
        if (!ok && failures_.size() < 5) {
            failures_.push_back(what);
        }
        failed_ = failed_ || !ok;
    }

    bool ok() const
    {
        return !failed_;
    }

    std::size_t count() const
    {
        return count_;
    }

    std::string summary() const
    {
        std::string s;
        for (const auto &f : failures_) {
            s += "\n      " + f;
        }
        return s;
    }

private:
    bool failed_ = false;
    std::size_t count_ = 0;
    std::vector<std::string> failures_;
};

const Polynomial t = Polynomial::variable();

Polynomial one_plus_t(long e)
{
    return pow(Polynomial{1, 1}, static_cast<unsigned long>(e));
}

Coeff pow2(long e)
{
    return Coeff(mpz_class(1) << static_cast<mp_bitcnt_t>(e));
}

Coeff binom(long n, long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Coeff(r);
}

std::string pair_text(long g1, long g2)
{
    return "(" + std::to_string(g1) + ", " + std::to_string(g2) + ")";
}

void headline(Check &c)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = vpp::cli::run(std::vector<std::string>{"compute", "uc-main", "--g1", "1", "--g2", "1"}, out, err);
    const Polynomial expected = pow(Polynomial{1, 2, 1}, 2) * Polynomial{1, 0, 1, 0, 1, 0, 1};
    c.expect(code == 0, "exit code " + std::to_string(code));
    c.expect(out.str() == to_string(expected) + "\n", "cli printed " + out.str());
    c.expect(expected == support::from_strings(oracles::kUcMain11), "frozen expansion differs");
    c.expect(uc_main(1, 1) == expected, "uc_main(1, 1) = " + to_string(uc_main(1, 1)));
}

void genus_four(Check &c)
{
    const Polynomial t5 = Polynomial::monomial(1, 5);
    const Polynomial f22 = t5 * one_plus_t(8) * Polynomial{-5, 0, 0, 0, 1} * Polynomial{-8, 0, -8, -5, 0, 0, 0, 1};
    const Polynomial f13 = t5 * one_plus_t(8) * Polynomial{-14, 0, -14, -14, 1, 0, 1, 6, 1, 0, 1} * Polynomial(-2);
    c.expect(f_diff(2, 2) == f22, "f_diff(2, 2) = " + to_string(f_diff(2, 2)));
    c.expect(f_diff(1, 3) == f13, "f_diff(1, 3) = " + to_string(f_diff(1, 3)));
    c.expect(f_diff(2, 2) == support::from_strings(oracles::kFDiff22), "f_diff(2, 2) vs frozen coefficients");
    c.expect(f_diff(1, 3) == support::from_strings(oracles::kFDiff13), "f_diff(1, 3) vs frozen coefficients");
}

void special_values(Check &c)
{
    for (long g = 2; g <= 10; ++g) {
        const Coeff expected = pow2(4 * g - 2) * (3 - g);
        const auto raw = even_degree_unreduced(g);
        c.expect(vpp::limit_at(raw.num, raw.den, Coeff(1)) == expected, "D_" + std::to_string(g) + "(1) via limit");
        c.expect(even_degree(g).eval_at(Coeff(1)) == expected, "D_" + std::to_string(g) + "(1)");
    }
    c.expect(even_degree(2).eval_at(Coeff(1)) == 64 && even_degree(3).eval_at(Coeff(1)) == 0 &&
                 even_degree(4).eval_at(Coeff(1)) == -16384,
             "D_2(1), D_3(1), D_4(1)");
    for (long g1 = 1; g1 <= 6; ++g1) {
        for (long g2 = 1; g2 <= 6; ++g2) {
            const long g = g1 + g2;
            const Coeff value = f_diff(g1, g2).eval_at(Coeff(1));
            c.expect(value == pow2(4 * g - 4) * (g + g1 * g2 - 3), "F(1) at " + pair_text(g1, g2));
            if (g >= 3) {
                c.expect(value != 0, "F(1) vanishes at " + pair_text(g1, g2));
            }
        }
    }
}

void congruences(Check &c)
{
    c.expect(f_diff(1, 1).is_zero(), "f_diff(1, 1) is not zero");
    for (long g1 = 1; g1 <= 6; ++g1) {
        for (long g2 = 1; g2 <= 6; ++g2) {
            if (g1 == 1 && g2 == 1) {
                continue;
            }
            const long g = g1 + g2;
            const Polynomial f = f_diff(g1, g2);
            const std::string at = " at " + pair_text(g1, g2);
            c.expect(!f.is_zero() && f.truncated(4).is_zero(), "f_diff not 0 mod t^5" + at);
            c.expect(f.coeff_at(5) == 4 * g1 * g2 * (g - 1) - 2 * g, "t^5 coefficient" + at);
            const Polynomial base = Polynomial::monomial(1, 5) * one_plus_t(2 * g);
            const auto [h, r] = divmod(f, base);
            c.expect(r.is_zero(), "t^5 (1+t)^(2g) does not divide f_diff" + at);
            c.expect(h.coeff_at(0) != 0, "H(0) = 0" + at);
        }
    }
}

void factorizations(Check &c)
{
    for (long g = 1; g <= 10; ++g) {
        const std::string at = " at g = " + std::to_string(g);
        const Polynomial s = s_poly(g);
        const Polynomial u = u_poly(g);
        c.expect(newstead_odd(g) == one_plus_t(4 * g - 2) * s, "C_g = (1+t)^(4g-2) S_g" + at);
        c.expect(even_degree(g) == one_plus_t(2 * g) * u, "D_g = (1+t)^(2g) U_g" + at);
        c.expect(has_integer_coeffs(s) && has_integer_coeffs(u), "S_g, U_g integral" + at);
    }
}

void kirwan(Check &c)
{
    for (long g = 3; g <= 8; ++g) {
        const Polynomial lhs = kirwan_m2(g) - d1(g) - d2_minus_d1(g) + jj_quotient(g);
        c.expect(lhs == even_degree(g), "Kirwan identity at g = " + std::to_string(g));
        const auto r = vpp::verify::run_claim("kirwan-consistency", ParamBinding::genus(g));
        c.expect(r.status == vpp::verify::Status::Pass, "claim status at g = " + std::to_string(g));
    }
    const auto r2 = vpp::verify::run_claim("kirwan-consistency", ParamBinding::genus(2));
    c.expect(r2.status == vpp::verify::Status::Reported && !r2.detail.empty(), "g = 2 is not reported");
}

void series_oracles(Check &c)
{
    for (long g = 2; g <= 8; ++g) {
        const Coeff gg(g);
        const Coeff a = g == 2 ? -1 : 0;
        const std::vector<Coeff> cg{1, 2 * gg, binom(2 * g, 2) + 1, binom(2 * g, 3) + 4 * gg,
                                    binom(2 * g, 4) + binom(2 * g, 2) + 4 * gg * gg + a + 2};
        const std::vector<Coeff> dg{1, 2 * gg, 2 * gg * gg - gg + 1, Coeff(2 * gg * (2 * gg * gg - 3 * gg + 4) / 3),
                                    Coeff(Coeff(2, 3) * gg * gg * gg * gg - 2 * gg * gg * gg +
                                          Coeff(23, 6) * gg * gg - Coeff(3, 2) * gg + 1)};
        const Polynomial sc = vpp::series(newstead_odd_rf(g), 4);
        const Polynomial sd = vpp::series(even_degree_rf(g), 4);
        for (std::size_t k = 0; k <= 4; ++k) {
            c.expect(sc.coeff_at(k) == cg[k], "C_" + std::to_string(g) + " t^" + std::to_string(k));
            c.expect(sd.coeff_at(k) == dg[k], "D_" + std::to_string(g) + " t^" + std::to_string(k));
        }
    }
}

void two_forms(Check &c)
{
    for (long g1 = 1; g1 <= 6; ++g1) {
        for (long g2 = 1; g2 <= 6; ++g2) {
            const long g = g1 + g2;
            const Polynomial a = uc_main(g1, g2);
            c.expect(a == uc_via_su(g1, g2), "forms differ at " + pair_text(g1, g2));
            c.expect(a.degree() == 2 * (4 * g - 3), "degree at " + pair_text(g1, g2));
            c.expect(a.degree() == 2 * moduli_dim(2, 0, g), "degree vs dimension at " + pair_text(g1, g2));
        }
    }
}

void structural(Check &c)
{
    support::Gen gen(777);
    for (int i = 0; i < 1000; ++i) {
        const auto a = gen.poly();
        const auto b = gen.poly();
        const auto d = gen.poly();
        c.expect(a + b == b + a && a * b == b * a, "commutativity");
        c.expect((a + b) + d == a + (b + d) && (a * b) * d == a * (b * d), "associativity");
        c.expect(a * (b + d) == a * b + a * d, "distributivity");
        c.expect((a - a).is_zero() && a * Polynomial(1) == a, "identities");
    }
    for (int i = 0; i < 500; ++i) {
        const auto a = gen.poly();
        const auto b = gen.nonzero_poly();
        c.expect(exact_div(a * b, b) == a, "exact_div round trip");
    }
    for (long g = 2; g <= 10; ++g) {
        c.expect(is_palindromic(newstead_odd(g)), "C_" + std::to_string(g) + " palindromic");
    }
    for (long g = 3; g <= 10; ++g) {
        const Polynomial p = proj_space(g - 2);
        c.expect(sym_plus(p) == to_polynomial(sym_plus_closed_rf(g)), "sym_plus closed form, g = " + std::to_string(g));
        c.expect(sym_minus(p) == to_polynomial(sym_minus_closed_rf(g)),
                 "sym_minus closed form, g = " + std::to_string(g));
    }
    const auto &catalog = vpp::dsl::default_catalog();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const std::size_t n = vpp::dsl::count_exponents(catalog[i].expr);
        for (std::size_t k = 0; k < n; ++k) {
            for (long delta : {-1L, 1L}) {
                auto mutated = catalog;
                mutated[i].expr = vpp::dsl::mutate_exponent(catalog[i].expr, k, delta);
                const vpp::verify::CatalogSource src(mutated);
                c.expect(vpp::verify::first_failure(src, 4).has_value(),
                         "mutant survived: " + std::string(name_of(catalog[i].id)) + " = " +
                             vpp::dsl::render(mutated[i].expr));
            }
        }
    }
}

void dsl_crosscheck(Check &c)
{
    for (const auto &r : vpp::dsl::catalog_crosscheck(vpp::dsl::default_catalog(), 6)) {
        c.expect(r.match, std::string(name_of(r.id)) + " at g = " + std::to_string(r.g) + ": " + r.message);
    }
    const auto ev = [](std::string_view s) { return vpp::dsl::eval(vpp::dsl::parse(s), ParamBinding::genus(3)); };
    c.expect(ev("-t^2") == RationalFunction(Polynomial{0, 0, -1}), "-t^2");
    c.expect(ev("(-t)^2") == RationalFunction(Polynomial{0, 0, 1}), "(-t)^2");
    c.expect(ev("1 - t - t") == RationalFunction(Polynomial{1, -2}), "left associativity of -");
    c.expect(ev("8/2/2") == RationalFunction(2), "left associativity of /");
    c.expect(ev("2 + 3*t^2") == RationalFunction(Polynomial{2, 0, 3}), "* binds tighter than +");
    c.expect(ev("t^(g-1)*t") == RationalFunction(Polynomial::monomial(1, 3)), "parenthesized exponent");
    for (const auto &e : vpp::dsl::default_catalog()) {
        const auto text = vpp::dsl::render(e.expr);
        c.expect(support::same(vpp::dsl::parse(text), e.expr), "catalog round trip: " + text);
    }
    support::TreeGen trees(99);
    for (int i = 0; i < 500; ++i) {
        const auto e = trees.expr(4);
        const auto text = vpp::dsl::render(e);
        const auto back = vpp::dsl::parse(text);
        c.expect(support::same(back, e) && vpp::dsl::render(back) == text, "random round trip: " + text);
    }
}

struct Criterion {
    int number;
    const char *title;
    std::function<void(Check &)> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "two elliptic components: uc-main (1, 1) matches (1+2t+t^2)^2 (1+t^2+t^4+t^6)", headline},
        {2, "genus 4: f_diff(2, 2) and f_diff(1, 3) match their factored forms", genus_four},
        {3, "special values: D_g(1) for g in 2..10, F(1) for g1, g2 in 1..6", special_values},
        {4, "f_diff: 0 mod t^5, t^5 coefficient, t^5 (1+t)^(2g) H with H(0) != 0; f_diff(1, 1) = 0", congruences},
        {5, "C_g = (1+t)^(4g-2) S_g and D_g = (1+t)^(2g) U_g, integral, g in 1..10", factorizations},
        {6, "Kirwan consistency for g in 3..8; g = 2 reported", kirwan},
        {7, "series of C_g and D_g through t^4, g in 2..8", series_oracles},
        {8, "two forms of P(U_C(w, 2, 0)) agree with degree 2(4g-3), g1, g2 in 1..6", two_forms},
        {9, "ring axioms, exact_div, palindromes, closed forms, catalog mutations", structural},
        {10, "catalog cross-check for g <= 6, precedence and round trip", dsl_crosscheck},
    };
    int failed = 0;
    for (const auto &cr : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception &e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (check.ok() ? "PASS" : "FAIL") << "  [" << cr.number << "] " << cr.title << "  (" << check.count()
                  << " checks, " << static_cast<long>(secs * 1000) << " ms)" << check.summary() << '\n';
        failed += check.ok() ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
