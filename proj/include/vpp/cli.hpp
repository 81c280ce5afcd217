#ifndef VPP_CLI_HPP
#define VPP_CLI_HPP

#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "exprdsl.hpp"
#include "formulas.hpp"
#include "ratfunc.hpp"
#include "report.hpp"
#include "verify.hpp"

// Command-line front end. Exit codes: 0 ok, 2 usage or parameter error,
// 3 mathematical failure (a pole, a non-polynomial result, a failed claim).
namespace vpp::cli
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMath = 3;

enum class OutputFormat { Plain, Latex, Json };

namespace detail
{

using json = nlohmann::ordered_json;
using formulas::ParamBinding;

inline const std::map<std::string, OutputFormat> &format_names()
{
    static const std::map<std::string, OutputFormat> m{
        {"plain", OutputFormat::Plain}, {"latex", OutputFormat::Latex}, {"json", OutputFormat::Json}};
    return m;
}

// Integer flags shared by the subcommands. Values are only read when the
// corresponding option was given.
struct BindingFlags {
    struct Slot {
        const char *name;
        std::optional<long> ParamBinding::*field;
        long value = 0;
        CLI::Option *option = nullptr;
    };

    std::vector<Slot> slots{{"g", &ParamBinding::g},   {"g1", &ParamBinding::g1}, {"g2", &ParamBinding::g2},
                            {"n", &ParamBinding::n},   {"k", &ParamBinding::k},   {"r", &ParamBinding::r},
                            {"d", &ParamBinding::d},   {"codim", &ParamBinding::codim}};

    void attach(CLI::App &app, std::initializer_list<std::string_view> names)
    {
        for (auto &s : slots) {
            for (auto n : names) {
                if (n == s.name) {
                    s.option = app.add_option("--" + std::string(s.name), s.value, "integer parameter " + std::string(s.name));
                }
            }
        }
    }

    ParamBinding binding() const
    {
        ParamBinding b;
        for (const auto &s : slots) {
            if (s.option && s.option->count() > 0) {
                b.*(s.field) = s.value;
            }
        }
        if (!b.g && b.g1 && b.g2) {
            b.g = *b.g1 + *b.g2;
        }
        return b;
    }
};

inline void add_format(CLI::App &app, OutputFormat &fmt)
{
    app.add_option("--format", fmt, "plain, latex or json (json coefficients are decimal strings)")
        ->transform(CLI::CheckedTransformer(format_names(), CLI::ignore_case));
}

inline std::string render(const Polynomial &p, OutputFormat fmt)
{
    return fmt == OutputFormat::Latex ? to_latex(p) : to_string(p);
}

inline int not_polynomial(const Polynomial &den, OutputFormat fmt, std::ostream &out, std::ostream &err)
{
    err << "error: the result is not a polynomial\n";
    if (fmt == OutputFormat::Json) {
        out << json{{"error", "not a polynomial"}, {"denominator", report::coeff_array(den)}}.dump(2) << '\n';
    } else {
        out << "denominator: " << render(den, fmt) << '\n';
    }
    return kExitMath;
}

inline Polynomial polynomial_arg(const std::string &text, const ParamBinding &b)
{
    return to_polynomial(dsl::eval(dsl::parse(text), b));
}

struct ComputeArgs {
    std::string formula;
    BindingFlags flags;
    std::string x;
    std::string z;
    OutputFormat fmt = OutputFormat::Plain;
};

inline int compute(const ComputeArgs &a, std::ostream &out, std::ostream &err)
{
    const auto id = formulas::parse_formula_id(a.formula);
    if (!id) {
        err << "error: unknown formula '" << a.formula << "'\n";
        return kExitUsage;
    }
    const ParamBinding b = a.flags.binding();
    try {
        formulas::FormulaValue value;
        if (*id == formulas::FormulaId::BlowUp) {
            if (a.x.empty() || a.z.empty()) {
                throw formulas::ParameterError("blowup needs --x and --z");
            }
            value = RationalFunction(formulas::blowup_pp(polynomial_arg(a.x, b), polynomial_arg(a.z, b),
                                                         formulas::require(b.codim, "codim")));
        } else {
            value = formulas::evaluate(*id, b);
        }
        if (const long *n = std::get_if<long>(&value)) {
            if (a.fmt == OutputFormat::Json) {
                out << json{{"formula", a.formula}, {"params", report::params_json(b)}, {"value", *n}}.dump(2) << '\n';
            } else {
                out << *n << '\n';
            }
            return kExitOk;
        }
        const auto &rf = std::get<RationalFunction>(value);
        if (!rf.is_polynomial()) {
            return not_polynomial(rf.den(), a.fmt, out, err);
        }
        if (a.fmt == OutputFormat::Json) {
            out << json{{"formula", a.formula},
                        {"params", report::params_json(b)},
                        {"coefficients", report::coeff_array(rf.num())}}
                       .dump(2)
                << '\n';
        } else {
            out << render(rf.num(), a.fmt) << '\n';
        }
        return kExitOk;
    } catch (const NotPolynomial &e) {
        return not_polynomial(e.denominator(), a.fmt, out, err);
    } catch (const formulas::ParameterError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const dsl::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const dsl::EvalError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

struct VerifyArgs {
    std::string claim;
    long g_max = 6;
    unsigned threads = 0;
    std::string catalog;
    OutputFormat fmt = OutputFormat::Plain;
};

inline int verify(const VerifyArgs &a, std::ostream &out, std::ostream &err)
{
    const std::string only = a.claim == "all" ? std::string() : a.claim;
    if (!only.empty() && !verify::find_claim(only)) {
        err << "error: unknown claim '" << a.claim << "'\n";
        return kExitUsage;
    }
    std::unique_ptr<verify::FormulaSource> src;
    if (a.catalog.empty()) {
        src = std::make_unique<verify::BuilderSource>();
    } else {
        std::ifstream in(a.catalog);
        if (!in) {
            err << "error: cannot read catalog '" << a.catalog << "'\n";
            return kExitUsage;
        }
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        try {
            src = std::make_unique<verify::CatalogSource>(dsl::parse_catalog(text));
        } catch (const dsl::CatalogError &e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }
    const auto results = verify::run_suite(a.g_max, *src, only, a.threads);
    switch (a.fmt) {
    case OutputFormat::Json:
        out << report::to_json(results).dump(2) << '\n';
        break;
    case OutputFormat::Latex:
        out << report::latex_table(results);
        break;
    default:
        out << report::table(results);
    }
    return verify::any_failed(results) ? kExitMath : kExitOk;
}

struct ExpandArgs {
    std::string expr;
    BindingFlags flags;
    long order = 10;
    OutputFormat fmt = OutputFormat::Plain;
};

inline std::string series_text(const Polynomial &p, long order, OutputFormat fmt)
{
    const std::string big_o = fmt == OutputFormat::Latex ? "O(t^{" + std::to_string(order + 1) + "})"
                                                         : "O(t^" + std::to_string(order + 1) + ")";
    if (p.is_zero()) {
        return big_o;
    }
    return render(p, fmt) + " + " + big_o;
}

inline int expand(const ExpandArgs &a, std::ostream &out, std::ostream &err)
{
    const ParamBinding b = a.flags.binding();
    RationalFunction rf;
    try {
        rf = dsl::eval(dsl::parse(a.expr), b);
    } catch (const dsl::ParseError &e) {
        err << "error: " << e.what() << '\n' << "  " << a.expr << '\n'
            << "  " << std::string(e.span().start, ' ')
            << std::string(std::max<std::size_t>(1, e.span().end - e.span().start), '^') << '\n';
        return kExitUsage;
    } catch (const dsl::EvalError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    json j{{"expression", a.expr}, {"params", report::params_json(b)}};
    if (rf.is_polynomial()) {
        if (a.fmt == OutputFormat::Json) {
            j["kind"] = "polynomial";
            j["coefficients"] = report::coeff_array(rf.num());
            out << j.dump(2) << '\n';
        } else {
            out << render(rf.num(), a.fmt) << '\n';
        }
        return kExitOk;
    }
    Polynomial s;
    try {
        s = series(rf, static_cast<std::size_t>(a.order));
    } catch (const PoleError &e) {
        err << "error: " << e.what() << '\n';
        return kExitMath;
    }
    if (a.fmt == OutputFormat::Json) {
        j["kind"] = "series";
        j["order"] = a.order;
        j["coefficients"] = report::coeff_array(s);
        j["numerator"] = report::coeff_array(rf.num());
        j["denominator"] = report::coeff_array(rf.den());
        out << j.dump(2) << '\n';
    } else {
        out << series_text(s, a.order, a.fmt) << '\n';
    }
    return kExitOk;
}

inline int list(std::ostream &out)
{
    out << "formulas:\n";
    for (const auto &f : formulas::kFormulaNames) {
        out << "  " << f.name << '\n';
    }
    out << "claims:\n";
    for (const auto &c : verify::registry()) {
        out << "  " << c.id << " (" << c.domain_text() << "): " << c.description << '\n';
    }
    return kExitOk;
}

} // namespace detail

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact virtual Poincare polynomials and identity checks"};
    app.footer("Exit codes: 0 ok, 2 usage or parameter error, 3 pole, non-polynomial result or failed claim.\n"
               "JSON output writes coefficients as ascending-degree arrays of decimal strings.");
    app.require_subcommand(1);

    detail::ComputeArgs compute;
    auto *c = app.add_subcommand("compute", "evaluate a named formula");
    c->add_option("formula", compute.formula, "formula id (see `list`)")->required();
    compute.flags.attach(*c, {"g", "g1", "g2", "n", "k", "r", "d", "codim"});
    c->add_option("--x", compute.x, "blowup: Poincare polynomial of the ambient space, as an expression");
    c->add_option("--z", compute.z, "blowup: Poincare polynomial of the centre, as an expression");
    detail::add_format(*c, compute.fmt);

    detail::VerifyArgs verify;
    auto *v = app.add_subcommand("verify", "check one claim, or all of them");
    v->add_option("claim", verify.claim, "claim id or `all`")->required();
    v->add_option("--g-max", verify.g_max, "largest genus checked")->check(CLI::Range(2L, 64L));
    v->add_option("--threads", verify.threads, "worker threads (0 = hardware concurrency)");
    v->add_option("--catalog", verify.catalog, "read genus formulas from this catalog file");
    detail::add_format(*v, verify.fmt);

    detail::ExpandArgs expand;
    auto *e = app.add_subcommand("expand", "evaluate an expression in t; non-polynomials print as a series");
    e->add_option("expr", expand.expr, "expression, e.g. \"(1+t)^(2*g)/(1-t^2)\"")->required();
    expand.flags.attach(*e, {"g", "g1", "g2"});
    e->add_option("--order", expand.order, "series truncation order")->check(CLI::NonNegativeNumber);
    detail::add_format(*e, expand.fmt);

    auto *cat = app.add_subcommand("catalog", "print the default formula catalog");
    auto *ls = app.add_subcommand("list", "list formula and claim ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (c->parsed()) {
        return detail::compute(compute, out, err);
    }
    if (v->parsed()) {
        return detail::verify(verify, out, err);
    }
    if (e->parsed()) {
        return detail::expand(expand, out, err);
    }
    if (cat->parsed()) {
        out << dsl::kDefaultCatalog;
        return kExitOk;
    }
    if (ls->parsed()) {
        return detail::list(out);
    }
    return kExitUsage;
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv{"vpp"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace vpp::cli

#endif
