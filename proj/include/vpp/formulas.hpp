#ifndef VPP_FORMULAS_HPP
#define VPP_FORMULAS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyring.hpp"
#include "ratfunc.hpp"

/// Virtual Poincare polynomials of rank-two moduli spaces and of the spaces
/// appearing in their Kirwan-desingularization bookkeeping. Every rational
/// closed form is assembled term by term in RationalFunction arithmetic and
/// certified polynomial only at the end.
namespace vpp::formulas
{

class ParameterError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

enum class FormulaId {
    ProjSpace,
    Curve,
    Abelian,
    Grassmannian,
    Jacobian,
    NewsteadOdd,
    EvenDegree,
    SPoly,
    UPoly,
    KirwanM2,
    D1Tilde,
    D1,
    D2MinusD1,
    JJQuotient,
    KirwanResidual,
    SymPlus,
    SymMinus,
    SymPlusClosed,
    SymMinusClosed,
    BlowUp,
    ModuliDim,
    UCMain,
    UCViaSU,
    FDiff,
};

struct FormulaName {
    FormulaId id;
    std::string_view name;
};

inline constexpr std::array kFormulaNames{
    FormulaName{FormulaId::ProjSpace, "proj-space"},
    FormulaName{FormulaId::Curve, "curve"},
    FormulaName{FormulaId::Abelian, "abelian"},
    FormulaName{FormulaId::Grassmannian, "grassmannian"},
    FormulaName{FormulaId::Jacobian, "jacobian"},
    FormulaName{FormulaId::NewsteadOdd, "newstead-odd"},
    FormulaName{FormulaId::EvenDegree, "even-degree"},
    FormulaName{FormulaId::SPoly, "s-poly"},
    FormulaName{FormulaId::UPoly, "u-poly"},
    FormulaName{FormulaId::KirwanM2, "kirwan-m2"},
    FormulaName{FormulaId::D1Tilde, "d1-tilde"},
    FormulaName{FormulaId::D1, "d1"},
    FormulaName{FormulaId::D2MinusD1, "d2-minus-d1"},
    FormulaName{FormulaId::JJQuotient, "jj-quotient"},
    FormulaName{FormulaId::KirwanResidual, "kirwan-residual"},
    FormulaName{FormulaId::SymPlus, "sym-plus"},
    FormulaName{FormulaId::SymMinus, "sym-minus"},
    FormulaName{FormulaId::SymPlusClosed, "sym-plus-closed"},
    FormulaName{FormulaId::SymMinusClosed, "sym-minus-closed"},
    FormulaName{FormulaId::BlowUp, "blowup"},
    FormulaName{FormulaId::ModuliDim, "moduli-dim"},
    FormulaName{FormulaId::UCMain, "uc-main"},
    FormulaName{FormulaId::UCViaSU, "uc-via-su"},
    FormulaName{FormulaId::FDiff, "f-diff"},
};

inline std::string_view name_of(FormulaId id)
{
    for (const auto &e : kFormulaNames) {
        if (e.id == id) {
            return e.name;
        }
    }
    return "?";
}

inline std::optional<FormulaId> parse_formula_id(std::string_view name)
{
    for (const auto &e : kFormulaNames) {
        if (e.name == name) {
            return e.id;
        }
    }
    return std::nullopt;
}

/// Integer parameters of a formula. Unused fields stay empty.
struct ParamBinding {
    std::optional<long> g;
    std::optional<long> g1;
    std::optional<long> g2;
    std::optional<long> n;
    std::optional<long> k;
    std::optional<long> r;
    std::optional<long> d;
    std::optional<long> codim;

    static ParamBinding genus(long g)
    {
        ParamBinding b;
        b.g = g;
        return b;
    }

    // Both components; the total genus is filled in as g1 + g2.
    static ParamBinding pair(long g1, long g2)
    {
        ParamBinding b;
        b.g1 = g1;
        b.g2 = g2;
        b.g = g1 + g2;
        return b;
    }

    friend bool operator==(const ParamBinding &, const ParamBinding &) = default;
    friend auto operator<=>(const ParamBinding &, const ParamBinding &) = default;

    std::string to_string() const
    {
        std::string out;
        auto add = [&](const char *name, const std::optional<long> &v) {
            if (v) {
                out += (out.empty() ? "" : ", ") + std::string(name) + "=" + std::to_string(*v);
            }
        };
        add("g", g);
        add("g1", g1);
        add("g2", g2);
        add("n", n);
        add("k", k);
        add("r", r);
        add("d", d);
        add("codim", codim);
        return out;
    }
};

inline long require(const std::optional<long> &v, const char *name)
{
    if (!v) {
        throw ParameterError(std::string("missing parameter --") + name);
    }
    return *v;
}

inline void require_at_least(long value, long lo, const char *name)
{
    if (value < lo) {
        throw ParameterError(std::string(name) + " must be >= " + std::to_string(lo) + ", got " +
                             std::to_string(value));
    }
}

namespace detail
{

inline Polynomial t_pow(long k)
{
    if (k < 0) {
        throw ParameterError("negative exponent " + std::to_string(k));
    }
    return Polynomial::monomial(Coeff(1), static_cast<std::size_t>(k));
}

// 1 - t^k
inline Polynomial one_minus(long k)
{
    return Polynomial(1) - t_pow(k);
}

// 1 + t^k
inline Polynomial one_plus(long k)
{
    return Polynomial(1) + t_pow(k);
}

inline Polynomial one_plus_t_pow(long e)
{
    if (e < 0) {
        throw ParameterError("negative exponent " + std::to_string(e));
    }
    return pow(Polynomial{1, 1}, static_cast<unsigned long>(e));
}

inline Polynomial ipow(const Polynomial &p, long e)
{
    if (e < 0) {
        throw ParameterError("negative exponent " + std::to_string(e));
    }
    return pow(p, static_cast<unsigned long>(e));
}

inline RationalFunction quo(const Polynomial &num, const Polynomial &den)
{
    return RationalFunction(num, den);
}

inline const RationalFunction &half()
{
    static const RationalFunction h(Coeff(1, 2));
    return h;
}

} // namespace detail

// P(P^n) = 1 + t^2 + ... + t^{2n}.
inline Polynomial proj_space(long n)
{
    require_at_least(n, 0, "n");
    std::vector<Coeff> c(static_cast<std::size_t>(2 * n + 1), Coeff(0));
    for (long i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(2 * i)] = 1;
    }
    return Polynomial(std::move(c));
}

// Same as proj_space, with the empty space P^{-1} contributing 0.
inline Polynomial proj_space_or_empty(long n)
{
    return n == -1 ? Polynomial{} : proj_space(n);
}

inline Polynomial curve_pp(long g)
{
    require_at_least(g, 1, "g");
    return Polynomial{1, 2 * g, 1};
}

inline Polynomial abelian_pp(long g)
{
    require_at_least(g, 0, "g");
    return detail::one_plus_t_pow(2 * g);
}

/// Gaussian binomial in t^2, prod_{i=1..k} (1 - t^{2(n-i+1)}) / (1 - t^{2i}):
/// the Poincare polynomial of Gr(k, n).
inline RationalFunction grassmannian_pp(long k, long n)
{
    require_at_least(k, 0, "k");
    if (k > n) {
        throw ParameterError("grassmannian requires 0 <= k <= n");
    }
    RationalFunction r(1);
    for (long i = 1; i <= k; ++i) {
        r *= detail::quo(detail::one_minus(2 * (n - i + 1)), detail::one_minus(2 * i));
    }
    return r;
}

// Gr(k, n) with k > n is empty and contributes 0.
inline Polynomial grassmannian_or_empty(long k, long n)
{
    return k > n ? Polynomial{} : to_polynomial(grassmannian_pp(k, n));
}

inline Polynomial sym_plus(const Polynomial &p)
{
    const Polynomial minus_t2{0, 0, -1};
    return (p * p + substitute(p, minus_t2)).scaled(Coeff(1, 2));
}

inline Polynomial sym_minus(const Polynomial &p)
{
    const Polynomial minus_t2{0, 0, -1};
    return (p * p - substitute(p, minus_t2)).scaled(Coeff(1, 2));
}

/// Blow-up of X along a smooth center Z of codimension c:
/// P(X~) = P(X) + P(Z) (P(P^{c-1}) - 1).
inline Polynomial blowup_pp(const Polynomial &px, const Polynomial &pz, long c)
{
    require_at_least(c, 1, "codim");
    return px + pz * (proj_space(c - 1) - Polynomial(1));
}

/// Dimension of the moduli of semistable rank-r degree-d bundles on a genus-g
/// curve.
inline long moduli_dim(long r, long d, long g)
{
    require_at_least(r, 1, "r");
    require_at_least(g, 1, "g");
    if (g == 1) {
        return std::gcd(r, d);
    }
    return r * r * (g - 1) + 1;
}

// C_g: odd degree, rank two.
inline RationalFunction newstead_odd_rf(long g)
{
    using namespace detail;
    require_at_least(g, 1, "g");
    const Polynomial jac = one_plus_t_pow(2 * g);
    const Polynomial num = ipow(one_plus(3), 2 * g) - t_pow(2 * g) * jac;
    return RationalFunction(jac) * quo(num, one_minus(2) * one_minus(4));
}

// Raw numerator and denominator of D_g over the common denominator
// 2 (1 - t^2)(1 - t^4), before any cancellation.
struct RawQuotient {
    Polynomial num;
    Polynomial den;
};

inline RawQuotient even_degree_unreduced(long g)
{
    using namespace detail;
    require_at_least(g, 1, "g");
    const Polynomial jac = one_plus_t_pow(2 * g);
    const Polynomial first = jac * (ipow(one_plus(3), 2 * g) - t_pow(2 * g + 2) * jac);
    const Polynomial second =
        t_pow(2) * (one_plus_t_pow(4 * g) * one_minus(4) - ipow(one_minus(2), 2 * g + 2));
    return {first.scaled(Coeff(2)) - second, (one_minus(2) * one_minus(4)).scaled(Coeff(2))};
}

// D_g: even degree, rank two.
inline RationalFunction even_degree_rf(long g)
{
    using namespace detail;
    require_at_least(g, 1, "g");
    const Polynomial jac = one_plus_t_pow(2 * g);
    const RationalFunction first =
        quo(jac * (ipow(one_plus(3), 2 * g) - t_pow(2 * g + 2) * jac), one_minus(2) * one_minus(4));
    const RationalFunction bracket =
        quo(one_plus_t_pow(4 * g), one_minus(2)) - quo(ipow(one_minus(2), 2 * g), one_plus(2));
    return first - half() * RationalFunction(t_pow(2)) * bracket;
}

inline RationalFunction s_poly_rf(long g)
{
    using namespace detail;
    require_at_least(g, 1, "g");
    const Polynomial hex{1, -1, 1};
    const Polynomial one_minus_t{1, -1};
    return quo(ipow(hex, 2 * g) - t_pow(2 * g), one_minus_t * one_minus_t * one_plus(2));
}

inline RationalFunction u_poly_rf(long g)
{
    using namespace detail;
    require_at_least(g, 1, "g");
    const Polynomial hex{1, -1, 1};
    const Polynomial one_minus_t{1, -1};
    const Polynomial lead = one_plus_t_pow(2 * g - 2);
    const Polynomial num = (lead * (ipow(hex, 2 * g) - t_pow(2 * g + 2))).scaled(Coeff(2)) -
                           t_pow(2) * (lead * one_minus(4) - ipow(one_minus_t, 2 * g + 2));
    return quo(num, (one_minus_t * one_minus_t * one_plus(2)).scaled(Coeff(2)));
}

// Poincare polynomial of the partial desingularization M_2 of M(2, 0).
inline RationalFunction kirwan_m2_rf(long g)
{
    using namespace detail;
    require_at_least(g, 2, "g");
    using RF = RationalFunction;
    const Polynomial jac = one_plus_t_pow(2 * g);
    const Polynomial one_minus_t{1, -1};
    const RF p_gm2 = quo(t_pow(2) * one_minus(2 * g - 2), one_minus(2));

    RF braces = quo(ipow(one_plus(3), 2 * g) - t_pow(2 * g + 2) * jac, one_minus(4));
    braces += quo(t_pow(2) * one_minus(6 * g - 2), one_minus(4));
    braces -= quo(t_pow(4 * g - 2) * one_minus(2 * g), one_minus(2));
    const RF mid = half() * RF(jac * one_plus(2)) + half() * RF(ipow(one_minus_t, 2 * g) * one_minus(2)) + p_gm2;
    braces += quo(t_pow(2) * one_minus(4 * g - 6), one_minus(4)) * mid;
    braces -= quo(t_pow(2 * g - 2) * one_minus(2 * g - 2), one_minus(2)) * (RF(jac) + p_gm2);
    return quo(jac, one_minus(2)) * braces;
}

// D~_1: a bundle of blown-up P^5's over Gr(3, g) over J.
inline RationalFunction d1_tilde_rf(long g)
{
    using namespace detail;
    require_at_least(g, 2, "g");
    const Polynomial one_minus_t2 = one_minus(2);
    return quo(one_minus(8), one_minus_t2 * one_minus_t2) *
           quo(one_minus(2 * g) * one_minus(2 * g - 2) * one_minus(2 * g - 4), one_minus_t2 * one_minus(4)) *
           RationalFunction(one_plus_t_pow(2 * g));
}

// D_1, from D~_1 by the blow-down along its exceptional divisor.
inline RationalFunction d1_rf(long g)
{
    using namespace detail;
    require_at_least(g, 2, "g");
    const Polynomial tail = one_plus(2 * g + 4) - (t_pow(2) + t_pow(2 * g + 2));
    return quo(one_plus_t_pow(2 * g) * one_minus(2 * g) * one_minus(2 * g - 2),
               ipow(one_minus(2), 3) * one_minus(4)) *
           RationalFunction(tail);
}

inline RationalFunction d2_minus_d1_rf(long g)
{
    using namespace detail;
    require_at_least(g, 2, "g");
    using RF = RationalFunction;
    const RF jj4 = half() * RF(one_plus_t_pow(4 * g));
    const RF jm = half() * RF(ipow(one_minus(2), 2 * g));
    const RF plus_part = quo(one_minus(2 * g) * one_minus(2 * g - 2), one_minus(2) * one_minus(4)) *
                         (jj4 + jm - RF(one_plus_t_pow(2 * g)));
    const RF minus_part =
        quo(t_pow(2) * one_minus(2 * g - 2) * one_minus(2 * g - 4), one_minus(2) * one_minus(4)) * (jj4 - jm);
    return plus_part + minus_part;
}

// P((J x J)/Z_2) = 1/2 P_t(J)^2 + 1/2 P_{-t^2}(J).
inline RationalFunction jj_quotient_rf(long g)
{
    using namespace detail;
    require_at_least(g, 1, "g");
    return half() * RationalFunction(one_plus_t_pow(4 * g) + ipow(one_minus(2), 2 * g));
}

// The two lines that separate the expanded Kirwan bookkeeping from D_g.
// Identically zero.
inline RationalFunction kirwan_residual_rf(long g)
{
    using namespace detail;
    require_at_least(g, 2, "g");
    using RF = RationalFunction;
    const Polynomial jac = one_plus_t_pow(2 * g);
    const RF ratio = quo(one_minus(2 * g - 2), one_minus(2));
    RF braces = quo(t_pow(2) * one_minus(6 * g - 2), one_minus(4));
    braces -= quo(t_pow(4 * g - 2) * one_minus(2 * g), one_minus(2));
    braces += quo(t_pow(4) * one_minus(4 * g - 6) * one_minus(2 * g - 2), one_minus(2) * one_minus(4));
    braces -= RF(t_pow(2 * g)) * ratio * ratio;
    const Polynomial tail = one_plus(2 * g + 4) - (t_pow(2) + t_pow(2 * g + 2));
    const RF last = quo(jac * one_minus(2 * g) * one_minus(2 * g - 2), one_minus(2) * one_minus(4)) *
                    (RF(1) - quo(tail, ipow(one_minus(2), 2)));
    return quo(jac, one_minus(2)) * braces + last;
}

// Displayed closed form of P(P^{g-2} x P^{g-2})^+.
inline RationalFunction sym_plus_closed_rf(long g)
{
    using namespace detail;
    require_at_least(g, 2, "g");
    return quo(one_minus(2 * g) * one_minus(2 * g - 2), one_minus(2) * one_minus(4));
}

// Displayed closed form of P(P^{g-2} x P^{g-2})^-.
inline RationalFunction sym_minus_closed_rf(long g)
{
    using namespace detail;
    require_at_least(g, 2, "g");
    return quo(t_pow(2) * one_minus(2 * g - 2) * one_minus(2 * g - 4), one_minus(2) * one_minus(4));
}

inline Polynomial newstead_odd(long g)
{
    return to_polynomial(newstead_odd_rf(g));
}

inline Polynomial even_degree(long g)
{
    return to_polynomial(even_degree_rf(g));
}

inline Polynomial s_poly(long g)
{
    return to_polynomial(s_poly_rf(g));
}

inline Polynomial u_poly(long g)
{
    return to_polynomial(u_poly_rf(g));
}

inline Polynomial kirwan_m2(long g)
{
    return to_polynomial(kirwan_m2_rf(g));
}

inline Polynomial d1_tilde(long g)
{
    return to_polynomial(d1_tilde_rf(g));
}

inline Polynomial d1(long g)
{
    return to_polynomial(d1_rf(g));
}

inline Polynomial d2_minus_d1(long g)
{
    return to_polynomial(d2_minus_d1_rf(g));
}

inline Polynomial jj_quotient(long g)
{
    return to_polynomial(jj_quotient_rf(g));
}

namespace detail
{

inline void check_pair(long g1, long g2)
{
    require_at_least(g1, 1, "g1");
    require_at_least(g2, 1, "g2");
}

inline const Polynomial &uc_fibre_correction()
{
    // P(P^3) - P(P^1 x P^1) = -t^2 + t^6
    static const Polynomial p{0, 0, -1, 0, 0, 0, 1};
    return p;
}

} // namespace detail

/// P(U_C(w, 2, 0)) for C = C1 u C2 with genera (g1, g2), as
/// C_{g1} C_{g2} (-t^2 + t^6) + D_{g1} D_{g2}.
inline Polynomial uc_main(long g1, long g2)
{
    detail::check_pair(g1, g2);
    return newstead_odd(g1) * newstead_odd(g2) * detail::uc_fibre_correction() + even_degree(g1) * even_degree(g2);
}

/// The same polynomial through the S/U factorizations:
/// (1+t)^{2g} ((1+t)^{2g-4} S_{g1} S_{g2} (-t^2 + t^6) + U_{g1} U_{g2}).
inline Polynomial uc_via_su(long g1, long g2)
{
    detail::check_pair(g1, g2);
    const long g = g1 + g2;
    return detail::one_plus_t_pow(2 * g) *
           (detail::one_plus_t_pow(2 * g - 4) * s_poly(g1) * s_poly(g2) * detail::uc_fibre_correction() +
            u_poly(g1) * u_poly(g2));
}

// P(U_C(w, 2, 0)) - P(M_{C'}(2, 2g - 2)) for a smooth C' of genus g1 + g2.
inline Polynomial f_diff(long g1, long g2)
{
    detail::check_pair(g1, g2);
    return uc_main(g1, g2) - even_degree(g1 + g2);
}

/// Value of a catalog formula: a rational function, or an integer for
/// moduli-dim.
using FormulaValue = std::variant<RationalFunction, long>;

// Formulas indexed by the genus alone, and the smallest genus each accepts.
struct GenusFormula {
    FormulaId id;
    long min_g;
};

inline constexpr std::array kGenusFormulas{
    GenusFormula{FormulaId::NewsteadOdd, 1},    GenusFormula{FormulaId::EvenDegree, 1},
    GenusFormula{FormulaId::SPoly, 1},          GenusFormula{FormulaId::UPoly, 1},
    GenusFormula{FormulaId::KirwanM2, 2},       GenusFormula{FormulaId::D1Tilde, 2},
    GenusFormula{FormulaId::D1, 2},             GenusFormula{FormulaId::D2MinusD1, 2},
    GenusFormula{FormulaId::JJQuotient, 1},     GenusFormula{FormulaId::KirwanResidual, 2},
    GenusFormula{FormulaId::SymPlusClosed, 2},  GenusFormula{FormulaId::SymMinusClosed, 2},
};

inline std::optional<long> genus_formula_min(FormulaId id)
{
    for (const auto &e : kGenusFormulas) {
        if (e.id == id) {
            return e.min_g;
        }
    }
    return std::nullopt;
}

/// Rational-function form of a genus-indexed formula.
inline RationalFunction genus_formula(FormulaId id, long g)
{
    switch (id) {
    case FormulaId::NewsteadOdd:
        return newstead_odd_rf(g);
    case FormulaId::EvenDegree:
        return even_degree_rf(g);
    case FormulaId::SPoly:
        return s_poly_rf(g);
    case FormulaId::UPoly:
        return u_poly_rf(g);
    case FormulaId::KirwanM2:
        return kirwan_m2_rf(g);
    case FormulaId::D1Tilde:
        return d1_tilde_rf(g);
    case FormulaId::D1:
        return d1_rf(g);
    case FormulaId::D2MinusD1:
        return d2_minus_d1_rf(g);
    case FormulaId::JJQuotient:
        return jj_quotient_rf(g);
    case FormulaId::KirwanResidual:
        return kirwan_residual_rf(g);
    case FormulaId::SymPlusClosed:
        return sym_plus_closed_rf(g);
    case FormulaId::SymMinusClosed:
        return sym_minus_closed_rf(g);
    default:
        throw ParameterError(std::string(name_of(id)) + " is not indexed by the genus alone");
    }
}

/// Evaluates any formula whose inputs are integers. sym-plus and sym-minus
/// act on P(P^n); blowup needs polynomial inputs and is not served here.
inline FormulaValue evaluate(FormulaId id, const ParamBinding &b)
{
    switch (id) {
    case FormulaId::ProjSpace:
        return RationalFunction(proj_space(require(b.n, "n")));
    case FormulaId::Curve:
        return RationalFunction(curve_pp(require(b.g, "g")));
    case FormulaId::Abelian:
    case FormulaId::Jacobian:
        return RationalFunction(abelian_pp(require(b.g, "g")));
    case FormulaId::Grassmannian:
        return grassmannian_pp(require(b.k, "k"), require(b.n, "n"));
    case FormulaId::SymPlus:
        return RationalFunction(sym_plus(proj_space(require(b.n, "n"))));
    case FormulaId::SymMinus:
        return RationalFunction(sym_minus(proj_space(require(b.n, "n"))));
    case FormulaId::ModuliDim:
        return moduli_dim(require(b.r, "r"), require(b.d, "d"), require(b.g, "g"));
    case FormulaId::UCMain:
        return RationalFunction(uc_main(require(b.g1, "g1"), require(b.g2, "g2")));
    case FormulaId::UCViaSU:
        return RationalFunction(uc_via_su(require(b.g1, "g1"), require(b.g2, "g2")));
    case FormulaId::FDiff:
        return RationalFunction(f_diff(require(b.g1, "g1"), require(b.g2, "g2")));
    case FormulaId::BlowUp:
        throw ParameterError("blowup takes polynomial inputs");
    default:
        return genus_formula(id, require(b.g, "g"));
    }
}

} // namespace vpp::formulas

#endif
