#ifndef VPP_VERIFY_HPP
#define VPP_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "exprdsl.hpp"
#include "formulas.hpp"
#include "polyring.hpp"
#include "ratfunc.hpp"

/// Registry of exact identity checks over the formula catalog. A claim is
/// evaluated at one parameter point and never uses a tolerance.
namespace vpp::verify
{

using formulas::FormulaId;
using formulas::ParamBinding;

enum class Status { Pass, Fail, Reported };

inline std::string_view status_name(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    default:
        return "reported";
    }
}

// Fail always carries a nonzero witness: the difference that should vanish,
// a remainder, or a surviving denominator.
struct ClaimResult {
    std::string claim_id;
    ParamBinding params;
    Status status = Status::Pass;
    std::optional<Polynomial> witness;
    std::string detail;
};

class UnknownClaim : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class OutsideDomain : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Where the genus-indexed formulas come from. Claims only read formulas
/// through this interface, so the same registry checks either the builders or
/// a text catalog.
class FormulaSource
{
public:
    virtual ~FormulaSource() = default;

    virtual RationalFunction rational(FormulaId id, long g) const = 0;

    Polynomial polynomial(FormulaId id, long g) const
    {
        return to_polynomial(rational(id, g));
    }
};

class BuilderSource final : public FormulaSource
{
public:
    RationalFunction rational(FormulaId id, long g) const override
    {
        return formulas::genus_formula(id, g);
    }
};

// Entries missing from the catalog fall back to the builders.
class CatalogSource final : public FormulaSource
{
public:
    explicit CatalogSource(dsl::Catalog catalog) : catalog_(std::move(catalog))
    {
    }

    RationalFunction rational(FormulaId id, long g) const override
    {
        for (const auto &e : catalog_) {
            if (e.id == id) {
                return dsl::eval(e.expr, ParamBinding::genus(g));
            }
        }
        return formulas::genus_formula(id, g);
    }

    const dsl::Catalog &catalog() const noexcept
    {
        return catalog_;
    }

private:
    dsl::Catalog catalog_;
};

struct Outcome {
    Status status = Status::Pass;
    std::optional<Polynomial> witness;
    std::string detail;
};

enum class DomainKind { Genus, Pair, Fixed };

struct Claim {
    std::string id;
    std::string description;
    std::string citation;
    DomainKind kind = DomainKind::Genus;
    long min_g = 1;
    bool skip_elliptic_pair = false; // excludes (g1, g2) = (1, 1)
    std::vector<ParamBinding> fixed;
    std::function<Outcome(const FormulaSource &, const ParamBinding &)> check;

    std::string domain_text() const
    {
        switch (kind) {
        case DomainKind::Genus:
            return "g >= " + std::to_string(min_g);
        case DomainKind::Pair:
            return skip_elliptic_pair ? "g1, g2 >= 1, (g1, g2) != (1, 1)" : "g1, g2 >= 1";
        default: {
            std::string s;
            for (const auto &p : fixed) {
                s += (s.empty() ? "" : "; ") + p.to_string();
            }
            return s;
        }
        }
    }
};

namespace detail
{

inline Polynomial one_plus_t_pow(long e)
{
    return pow(Polynomial{1, 1}, static_cast<unsigned long>(e));
}

inline Polynomial constant(const Coeff &c)
{
    return Polynomial(c);
}

inline Outcome equal(const Polynomial &actual, const Polynomial &expected, std::string detail = {})
{
    if (actual == expected) {
        return {Status::Pass, std::nullopt, std::move(detail)};
    }
    return {Status::Fail, actual - expected, std::move(detail)};
}

inline Outcome equal_value(const Coeff &actual, const Coeff &expected, std::string detail = {})
{
    return equal(constant(actual), constant(expected), std::move(detail));
}

// Runs checks in order and stops at the first failure.
inline Outcome all_of(std::initializer_list<std::function<Outcome()>> checks)
{
    Outcome last;
    for (const auto &c : checks) {
        last = c();
        if (last.status == Status::Fail) {
            return last;
        }
    }
    return last;
}

inline Coeff pow2(long e)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return Coeff(p);
}

inline const Polynomial &fibre_correction()
{
    static const Polynomial p{0, 0, -1, 0, 0, 0, 1};
    return p;
}

inline Polynomial form_a(const FormulaSource &src, long g1, long g2)
{
    return src.polynomial(FormulaId::NewsteadOdd, g1) * src.polynomial(FormulaId::NewsteadOdd, g2) *
               fibre_correction() +
           src.polynomial(FormulaId::EvenDegree, g1) * src.polynomial(FormulaId::EvenDegree, g2);
}

inline Polynomial form_b(const FormulaSource &src, long g1, long g2)
{
    const long g = g1 + g2;
    return one_plus_t_pow(2 * g) *
           (one_plus_t_pow(2 * g - 4) * src.polynomial(FormulaId::SPoly, g1) * src.polynomial(FormulaId::SPoly, g2) *
                fibre_correction() +
            src.polynomial(FormulaId::UPoly, g1) * src.polynomial(FormulaId::UPoly, g2));
}

inline Polynomial f_diff(const FormulaSource &src, long g1, long g2)
{
    return form_a(src, g1, g2) - src.polynomial(FormulaId::EvenDegree, g1 + g2);
}

inline Outcome integral(const Polynomial &p, const std::string &what)
{
    if (has_integer_coeffs(p)) {
        return {};
    }
    return {Status::Fail, p, what + " has non-integer coefficients"};
}

inline Outcome degree_is(const Polynomial &p, long expected, const std::string &what)
{
    if (p.degree() == expected) {
        return {Status::Pass, std::nullopt, "degree " + std::to_string(expected)};
    }
    return {Status::Fail, constant(Coeff(p.degree() - expected)),
            what + " has degree " + std::to_string(p.degree()) + ", expected " + std::to_string(expected)};
}

inline Outcome first_coefficients(const Polynomial &p, const std::vector<Coeff> &expected)
{
    std::vector<Coeff> head;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        head.push_back(p.coeff_at(k));
    }
    std::string shown;
    for (const auto &c : head) {
        shown += (shown.empty() ? "" : ", ") + c.get_str();
    }
    return equal(Polynomial(head), Polynomial(expected), "coefficients " + shown);
}

inline Coeff binom(long n, long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Coeff(r);
}

// The explicit genus-4 comparison polynomials.
inline Polynomial f_genus4_2_2()
{
    const Polynomial t5 = Polynomial::monomial(Coeff(1), 5);
    return t5 * one_plus_t_pow(8) * Polynomial{-5, 0, 0, 0, 1} * Polynomial{-8, 0, -8, -5, 0, 0, 0, 1};
}

inline Polynomial f_genus4_1_3()
{
    const Polynomial t5 = Polynomial::monomial(Coeff(1), 5);
    return t5 * one_plus_t_pow(8) * Polynomial{-14, 0, -14, -14, 1, 0, 1, 6, 1, 0, 1}.scaled(Coeff(-2));
}

} // namespace detail

/// All registered claims, in registry order.
inline const std::vector<Claim> &registry()
{
    using namespace detail;
    static const std::vector<Claim> claims = [] {
        std::vector<Claim> c;
        const auto genus = [&](std::string id, std::string desc, std::string cite, long min_g, auto check) {
            Claim cl;
            cl.id = std::move(id);
            cl.description = std::move(desc);
            cl.citation = std::move(cite);
            cl.kind = DomainKind::Genus;
            cl.min_g = min_g;
            cl.check = [check](const FormulaSource &s, const ParamBinding &p) { return check(s, *p.g); };
            c.push_back(std::move(cl));
        };
        const auto pair = [&](std::string id, std::string desc, std::string cite, bool skip11, auto check) {
            Claim cl;
            cl.id = std::move(id);
            cl.description = std::move(desc);
            cl.citation = std::move(cite);
            cl.kind = DomainKind::Pair;
            cl.skip_elliptic_pair = skip11;
            cl.check = [check](const FormulaSource &s, const ParamBinding &p) { return check(s, *p.g1, *p.g2); };
            c.push_back(std::move(cl));
        };
        const auto fixed = [&](std::string id, std::string desc, std::string cite, std::vector<ParamBinding> pts,
                               std::function<Outcome(const FormulaSource &, const ParamBinding &)> check) {
            Claim cl;
            cl.id = std::move(id);
            cl.description = std::move(desc);
            cl.citation = std::move(cite);
            cl.kind = DomainKind::Fixed;
            cl.fixed = std::move(pts);
            cl.check = std::move(check);
            c.push_back(std::move(cl));
        };

        genus("cg-polynomial", "C_g is a palindromic integer polynomial of degree 8g-6", "odd-degree Newstead formula",
              1, [](const FormulaSource &s, long g) {
                  const auto cg = s.polynomial(FormulaId::NewsteadOdd, g);
                  return all_of({[&] { return integral(cg, "C_g"); },
                                 [&] {
                                     return is_palindromic(cg) ? Outcome{}
                                                               : Outcome{Status::Fail, cg - reversed(cg),
                                                                         "C_g is not palindromic"};
                                 },
                                 [&] { return degree_is(cg, 8 * g - 6, "C_g"); }});
              });
        genus("dg-polynomial", "D_g is an integer polynomial, of degree 8g-6 for g >= 2", "even-degree formula", 1,
              [](const FormulaSource &s, long g) {
                  const auto dg = s.polynomial(FormulaId::EvenDegree, g);
                  return all_of({[&] { return integral(dg, "D_g"); },
                                 [&] { return degree_is(dg, g >= 2 ? 8 * g - 6 : 4, "D_g"); }});
              });
        genus("s-factorization", "C_g = (1+t)^(4g-2) S_g", "odd-degree factorization through S_g", 1,
              [](const FormulaSource &s, long g) {
                  return equal(s.polynomial(FormulaId::NewsteadOdd, g),
                               one_plus_t_pow(4 * g - 2) * s.polynomial(FormulaId::SPoly, g));
              });
        genus("u-factorization", "D_g = (1+t)^(2g) U_g", "even-degree factorization through U_g", 1,
              [](const FormulaSource &s, long g) {
                  return equal(s.polynomial(FormulaId::EvenDegree, g),
                               one_plus_t_pow(2 * g) * s.polynomial(FormulaId::UPoly, g));
              });
        genus("su-polynomial", "S_g and U_g are integer polynomials", "S_g, U_g in Z[t]", 1,
              [](const FormulaSource &s, long g) {
                  const auto sg = s.polynomial(FormulaId::SPoly, g);
                  const auto ug = s.polynomial(FormulaId::UPoly, g);
                  return all_of({[&] { return integral(sg, "S_g"); }, [&] { return integral(ug, "U_g"); }});
              });
        genus("kirwan-consistency",
              "P(M_2) - P(D_1) - P(D_2 \\ D_1) + P((JxJ)/Z_2) = D_g, and the leftover terms vanish",
              "even-degree formula via Kirwan desingularization", 2, [](const FormulaSource &s, long g) {
                  const auto lhs = s.polynomial(FormulaId::KirwanM2, g) - s.polynomial(FormulaId::D1, g) -
                                   s.polynomial(FormulaId::D2MinusD1, g) + s.polynomial(FormulaId::JJQuotient, g);
                  auto out = all_of({[&] { return equal(lhs, s.polynomial(FormulaId::EvenDegree, g)); },
                                     [&] {
                                         return equal(s.polynomial(FormulaId::KirwanResidual, g), Polynomial{},
                                                      "leftover terms");
                                     }});
                  if (g == 2) {
                      out.detail = out.status == Status::Pass ? "identity holds at g = 2 (not asserted)"
                                                              : "identity differs at g = 2 (not asserted)";
                      out.status = Status::Reported;
                  }
                  return out;
              });
        genus("blowup-d1", "D_1 and D~_1 are related by the blow-up formula", "blow-up along P^(g-3)-bundle", 2,
              [](const FormulaSource &s, long g) {
                  using namespace formulas;
                  const auto p2 = proj_space(2);
                  const auto jac = abelian_pp(g);
                  const auto tilde = (proj_space(5) + p2 * p2 - p2) * grassmannian_or_empty(3, g) * jac;
                  const auto center = p2 * to_polynomial(grassmannian_pp(2, g)) * jac;
                  const auto d1 = s.polynomial(FormulaId::D1, g);
                  const auto blown_up =
                      g >= 3 ? blowup_pp(d1, center, g - 2)
                             : d1 + center * (proj_space_or_empty(g - 3) - Polynomial(1));
                  return all_of({[&] { return equal(s.polynomial(FormulaId::D1Tilde, g), tilde, "D~_1"); },
                                 [&] { return equal(blown_up, tilde, "blow-up of D_1"); }});
              });
        genus("plusminus-closed-forms", "invariant/anti-invariant parts of P(P^(g-2))^2 match their closed forms",
              "Z_2-invariant and anti-invariant parts", 2, [](const FormulaSource &s, long g) {
                  const auto p = formulas::proj_space(g - 2);
                  return all_of(
                      {[&] { return equal(formulas::sym_plus(p), s.polynomial(FormulaId::SymPlusClosed, g), "plus"); },
                       [&] {
                           return equal(formulas::sym_minus(p), s.polynomial(FormulaId::SymMinusClosed, g), "minus");
                       }});
              });
        pair("uc-two-forms", "C C (-t^2+t^6) + D D equals the S/U form", "two expressions of P(U_C(w,2,0))", false,
             [](const FormulaSource &s, long g1, long g2) { return equal(form_a(s, g1, g2), form_b(s, g1, g2)); });
        fixed("g2-value", "P(U_C) = (1+2t+t^2)^2 (1+t^2+t^4+t^6) for two elliptic components",
              "elliptic components", {ParamBinding::pair(1, 1)}, [](const FormulaSource &s, const ParamBinding &) {
                  const Polynomial c{1, 2, 1};
                  return equal(form_a(s, 1, 1), c * c * formulas::proj_space(3));
              });
        fixed("f-vanishing", "F = 0 for (g1, g2) = (1, 1)", "genus-2 comparison", {ParamBinding::pair(1, 1)},
              [](const FormulaSource &s, const ParamBinding &) { return equal(f_diff(s, 1, 1), Polynomial{}); });
        pair("f-mod-t5", "F = 0 mod t^5", "F vanishes to order five", false,
             [](const FormulaSource &s, long g1, long g2) {
                 return equal(f_diff(s, g1, g2).truncated(4), Polynomial{});
             });
        pair("f-t5-coeff", "coefficient of t^5 in F is 4 g1 g2 (g-1) - 2g", "t^5 coefficient of F", false,
             [](const FormulaSource &s, long g1, long g2) {
                 const long g = g1 + g2;
                 const Coeff c5 = f_diff(s, g1, g2).coeff_at(5);
                 return equal_value(c5, Coeff(4 * g1 * g2 * (g - 1) - 2 * g), "t^5 coefficient " + c5.get_str());
             });
        pair("f-factor", "F = t^5 (1+t)^(2g) H with H integral and H(0) != 0", "factorization of F", true,
             [](const FormulaSource &s, long g1, long g2) {
                 const long g = g1 + g2;
                 const auto f = f_diff(s, g1, g2);
                 const auto h = exact_div(f, one_plus_t_pow(2 * g).shifted(5));
                 return all_of({[&] { return integral(h, "H"); },
                                [&] {
                                    return h.coeff_at(0) != 0
                                               ? Outcome{Status::Pass, std::nullopt, "H(0) = " + h.coeff_at(0).get_str()}
                                               : Outcome{Status::Fail, h, "H(0) = 0"};
                                }});
             });
        fixed("f-g4-explicit", "F for (2,2) and (1,3) matches the explicit genus-4 factorizations",
              "explicit genus-4 comparison", {ParamBinding::pair(2, 2), ParamBinding::pair(1, 3)},
              [](const FormulaSource &s, const ParamBinding &p) {
                  const auto expected = *p.g1 == 2 ? f_genus4_2_2() : f_genus4_1_3();
                  return equal(f_diff(s, *p.g1, *p.g2), expected);
              });
        genus("dg-at-one", "D_g(1) = 2^(4g-2) (3-g)", "value of D_g at t = 1", 2, [](const FormulaSource &s, long g) {
            const Coeff expected = pow2(4 * g - 2) * (3 - g);
            const auto raw = formulas::even_degree_unreduced(g);
            const Coeff limit = limit_at(raw.num, raw.den, Coeff(1));
            const Coeff value = s.polynomial(FormulaId::EvenDegree, g).eval_at(Coeff(1));
            return all_of({[&] { return equal_value(limit, expected, "limit " + limit.get_str()); },
                           [&] { return equal_value(value, expected, "value " + value.get_str()); }});
        });
        pair("f-at-one", "F(1) = 2^(4g-4) (g + g1 g2 - 3), nonzero for g >= 3", "F at t = 1", false,
             [](const FormulaSource &s, long g1, long g2) {
                 const long g = g1 + g2;
                 const Coeff value = f_diff(s, g1, g2).eval_at(Coeff(1));
                 const Coeff expected = pow2(4 * g - 4) * (g + g1 * g2 - 3);
                 auto out = equal_value(value, expected, "F(1) = " + value.get_str());
                 if (out.status == Status::Pass && g >= 3 && value == 0) {
                     return Outcome{Status::Fail, Polynomial(Coeff(1)), "F(1) vanishes for g >= 3"};
                 }
                 return out;
             });
        genus("series-cg", "C_g = 1 + 2g t + (C(2g,2)+1) t^2 + (C(2g,3)+4g) t^3 + (...) t^4 + O(t^5)",
              "low-order expansion of C_g", 2, [](const FormulaSource &s, long g) {
                  const Coeff a = g == 2 ? -1 : 0;
                  const Coeff gg(g);
                  return first_coefficients(
                      series(s.rational(FormulaId::NewsteadOdd, g), 4),
                      {1, 2 * gg, binom(2 * g, 2) + 1, binom(2 * g, 3) + 4 * gg,
                       binom(2 * g, 4) + binom(2 * g, 2) + 4 * gg * gg + a + 2});
              });
        genus("series-dg", "D_g = 1 + 2g t + (2g^2-g+1) t^2 + ... through t^5", "low-order expansion of D_g", 2,
              [](const FormulaSource &s, long g) {
                  const Coeff gg(g);
                  const Coeff c3 = Coeff(2 * gg * (2 * gg * gg - 3 * gg + 4)) / 3;
                  const Coeff c4 = Coeff(2, 3) * gg * gg * gg * gg - 2 * gg * gg * gg + Coeff(23, 6) * gg * gg -
                                   Coeff(3, 2) * gg + 1;
                  const Coeff c5 = binom(2 * g, 5) + binom(2 * g, 3) + 4 * gg + 2 * gg * gg * (2 * gg - 1) -
                                   Coeff(gg * (4 * gg - 1) * (4 * gg - 2)) / 3;
                  return first_coefficients(series(s.rational(FormulaId::EvenDegree, g), 5),
                                            {1, 2 * gg, 2 * gg * gg - gg + 1, c3, c4, c5});
              });
        fixed("elliptic-edge", "C_1 = P(C) and D_1 = P(Sym^2 C) for an elliptic curve C", "elliptic components",
              {ParamBinding::genus(1)}, [](const FormulaSource &s, const ParamBinding &) {
                  const auto curve = formulas::curve_pp(1);
                  return all_of(
                      {[&] { return equal(s.polynomial(FormulaId::NewsteadOdd, 1), curve, "C_1"); },
                       [&] {
                           return equal(s.polynomial(FormulaId::EvenDegree, 1), curve * formulas::proj_space(1),
                                        "D_1");
                       }});
              });
        pair("degree-dimension", "deg P(U_C) = 2 (4g-3) = 2 dim", "dimension of the moduli space", false,
             [](const FormulaSource &s, long g1, long g2) {
                 const long g = g1 + g2;
                 const long base = formulas::moduli_dim(2, 1, g1) + formulas::moduli_dim(2, 1, g2);
                 const auto uc = form_a(s, g1, g2);
                 return all_of({[&] { return degree_is(uc, 2 * (4 * g - 3), "P(U_C)"); },
                                [&] { return degree_is(uc, 2 * formulas::moduli_dim(2, 0, g), "P(U_C)"); },
                                [&] { return degree_is(uc, 2 * (base + 3), "P(U_C)"); }});
             });
        return c;
    }();
    return claims;
}

inline const Claim *find_claim(std::string_view id)
{
    for (const auto &c : registry()) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

/// Parameter points of a claim with g (single-genus claims) or g1, g2 (pair
/// claims) at most g_max. Fixed-point claims ignore g_max.
inline std::vector<ParamBinding> domain(const Claim &claim, long g_max)
{
    std::vector<ParamBinding> out;
    switch (claim.kind) {
    case DomainKind::Genus:
        for (long g = claim.min_g; g <= g_max; ++g) {
            out.push_back(ParamBinding::genus(g));
        }
        break;
    case DomainKind::Pair:
        for (long g1 = 1; g1 <= g_max; ++g1) {
            for (long g2 = 1; g2 <= g_max; ++g2) {
                if (claim.skip_elliptic_pair && g1 == 1 && g2 == 1) {
                    continue;
                }
                out.push_back(ParamBinding::pair(g1, g2));
            }
        }
        break;
    case DomainKind::Fixed:
        out = claim.fixed;
        break;
    }
    return out;
}

inline bool in_domain(const Claim &claim, const ParamBinding &p)
{
    switch (claim.kind) {
    case DomainKind::Genus:
        return p.g && *p.g >= claim.min_g;
    case DomainKind::Pair:
        return p.g1 && p.g2 && *p.g1 >= 1 && *p.g2 >= 1 &&
               !(claim.skip_elliptic_pair && *p.g1 == 1 && *p.g2 == 1);
    default:
        return std::any_of(claim.fixed.begin(), claim.fixed.end(), [&](const ParamBinding &f) {
            return f.g1 ? (p.g1 == f.g1 && p.g2 == f.g2) : p.g == f.g;
        });
    }
}

namespace detail
{

inline ParamBinding normalized(const Claim &claim, const ParamBinding &p)
{
    switch (claim.kind) {
    case DomainKind::Genus:
        return ParamBinding::genus(*p.g);
    case DomainKind::Pair:
        return ParamBinding::pair(*p.g1, *p.g2);
    default:
        for (const auto &f : claim.fixed) {
            if (f.g1 ? (p.g1 == f.g1 && p.g2 == f.g2) : p.g == f.g) {
                return f;
            }
        }
        return p;
    }
}

inline ClaimResult evaluate(const Claim &claim, const ParamBinding &params, const FormulaSource &src)
{
    ClaimResult r{claim.id, params, Status::Pass, std::nullopt, {}};
    try {
        auto out = claim.check(src, params);
        r.status = out.status;
        r.witness = std::move(out.witness);
        r.detail = std::move(out.detail);
    } catch (const NotPolynomial &e) {
        r.status = Status::Fail;
        r.witness = e.denominator();
        r.detail = "not a polynomial; surviving denominator in witness";
    } catch (const DivisionFailure &e) {
        r.status = Status::Fail;
        r.witness = e.remainder();
        r.detail = "inexact division; remainder in witness";
    } catch (const std::exception &e) {
        r.status = Status::Fail;
        r.witness = Polynomial(1);
        r.detail = std::string("error: ") + e.what();
    }
    if (r.status == Status::Fail && (!r.witness || r.witness->is_zero())) {
        r.witness = Polynomial(1);
    }
    if (r.status == Status::Pass) {
        r.witness.reset();
    }
    return r;
}

} // namespace detail

inline ClaimResult run_claim(std::string_view id, const ParamBinding &params, const FormulaSource &src)
{
    const Claim *claim = find_claim(id);
    if (!claim) {
        throw UnknownClaim("unknown claim '" + std::string(id) + "'");
    }
    if (!in_domain(*claim, params)) {
        throw OutsideDomain("parameters (" + params.to_string() + ") outside the domain of " + claim->id + " (" +
                            claim->domain_text() + ")");
    }
    return detail::evaluate(*claim, detail::normalized(*claim, params), src);
}

inline ClaimResult run_claim(std::string_view id, const ParamBinding &params)
{
    return run_claim(id, params, BuilderSource{});
}

inline void sort_results(std::vector<ClaimResult> &results)
{
    std::sort(results.begin(), results.end(), [](const ClaimResult &a, const ClaimResult &b) {
        if (a.claim_id != b.claim_id) {
            return a.claim_id < b.claim_id;
        }
        return a.params < b.params;
    });
}

/// Runs the selected claims (all when `only` is empty) over their domains up to
/// g_max, on up to `threads` worker threads. Output is sorted by claim id,
/// then parameters, independent of scheduling.
inline std::vector<ClaimResult> run_suite(long g_max, const FormulaSource &src, std::string_view only = {},
                                          unsigned threads = 0)
{
    std::vector<std::pair<const Claim *, ParamBinding>> tasks;
    for (const auto &c : registry()) {
        if (!only.empty() && c.id != only) {
            continue;
        }
        for (const auto &p : domain(c, g_max)) {
            tasks.emplace_back(&c, p);
        }
    }
    if (!only.empty() && tasks.empty() && !find_claim(only)) {
        throw UnknownClaim("unknown claim '" + std::string(only) + "'");
    }
    std::vector<ClaimResult> results(tasks.size());
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            results[i] = detail::evaluate(*tasks[i].first, tasks[i].second, src);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
    }
    sort_results(results);
    return results;
}

inline std::vector<ClaimResult> run_suite(long g_max)
{
    return run_suite(g_max, BuilderSource{});
}

/// First failing result in registry order, or nothing. Used to check that a
/// perturbed catalog is caught.
inline std::optional<ClaimResult> first_failure(const FormulaSource &src, long g_max)
{
    for (const auto &c : registry()) {
        for (const auto &p : domain(c, g_max)) {
            auto r = detail::evaluate(c, p, src);
            if (r.status == Status::Fail) {
                return r;
            }
        }
    }
    return std::nullopt;
}

inline bool any_failed(const std::vector<ClaimResult> &results)
{
    return std::any_of(results.begin(), results.end(), [](const ClaimResult &r) { return r.status == Status::Fail; });
}

} // namespace vpp::verify

#endif
