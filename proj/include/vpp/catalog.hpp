#ifndef VPP_CATALOG_HPP
#define VPP_CATALOG_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exprdsl.hpp"
#include "formulas.hpp"

namespace vpp::dsl
{

// Genus-indexed formulas as expression text, one `<formula-id> = <expr>` per
// line. Each line mirrors the corresponding builder in formulas.hpp.
inline constexpr std::string_view kDefaultCatalog = R"(# Rank-two moduli of a smooth curve of genus g
newstead-odd = (1+t)^(2*g)*((1+t^3)^(2*g) - t^(2*g)*(1+t)^(2*g))/((1-t^2)*(1-t^4))
even-degree = (1+t)^(2*g)*((1+t^3)^(2*g) - t^(2*g+2)*(1+t)^(2*g))/((1-t^2)*(1-t^4)) - t^2/2*((1+t)^(4*g)/(1-t^2) - (1-t^2)^(2*g)/(1+t^2))
s-poly = ((1-t+t^2)^(2*g) - t^(2*g))/((1-t)^2*(1+t^2))
u-poly = (2*(1+t)^(2*g-2)*((1-t+t^2)^(2*g) - t^(2*g+2)) - t^2*((1+t)^(2*g-2)*(1-t^4) - (1-t)^(2*g+2)))/(2*(1-t)^2*(1+t^2))

# Kirwan bookkeeping for M(2, 0)
kirwan-m2 = (1+t)^(2*g)/(1-t^2)*(((1+t^3)^(2*g) - t^(2*g+2)*(1+t)^(2*g))/(1-t^4) + t^2*(1-t^(6*g-2))/(1-t^4) - t^(4*g-2)*(1-t^(2*g))/(1-t^2) + t^2*(1-t^(4*g-6))/(1-t^4)*(1/2*(1+t)^(2*g)*(1+t^2) + 1/2*(1-t)^(2*g)*(1-t^2) + t^2*(1-t^(2*g-2))/(1-t^2)) - t^(2*g-2)*(1-t^(2*g-2))/(1-t^2)*((1+t)^(2*g) + t^2*(1-t^(2*g-2))/(1-t^2)))
d1-tilde = (1-t^8)/(1-t^2)^2*(1-t^(2*g))*(1-t^(2*g-2))*(1-t^(2*g-4))/((1-t^2)*(1-t^4))*(1+t)^(2*g)
d1 = (1+t)^(2*g)*(1-t^(2*g))*(1-t^(2*g-2))/((1-t^2)^3*(1-t^4))*((1+t^(2*g+4)) - (t^2+t^(2*g+2)))
d2-minus-d1 = (1-t^(2*g))*(1-t^(2*g-2))/((1-t^2)*(1-t^4))*(1/2*(1+t)^(4*g) + 1/2*(1-t^2)^(2*g) - (1+t)^(2*g)) + t^2*(1-t^(2*g-2))*(1-t^(2*g-4))/((1-t^2)*(1-t^4))*(1/2*(1+t)^(4*g) - 1/2*(1-t^2)^(2*g))
jj-quotient = 1/2*(1+t)^(4*g) + 1/2*(1-t^2)^(2*g)
kirwan-residual = (1+t)^(2*g)/(1-t^2)*(t^2*(1-t^(6*g-2))/(1-t^4) - t^(4*g-2)*(1-t^(2*g))/(1-t^2) + t^4*(1-t^(4*g-6))*(1-t^(2*g-2))/((1-t^2)*(1-t^4)) - t^(2*g)*((1-t^(2*g-2))/(1-t^2))^2) + (1+t)^(2*g)*(1-t^(2*g))*(1-t^(2*g-2))/((1-t^2)*(1-t^4))*(1 - ((1+t^(2*g+4)) - (t^2+t^(2*g+2)))/(1-t^2)^2)
sym-plus-closed = (1-t^(2*g))*(1-t^(2*g-2))/((1-t^2)*(1-t^4))
sym-minus-closed = t^2*(1-t^(2*g-2))*(1-t^(2*g-4))/((1-t^2)*(1-t^4))
)";

struct CatalogEntry {
    formulas::FormulaId id;
    std::string text;
    ExprPtr expr;
    std::size_t line = 0;
};

class CatalogError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

using Catalog = std::vector<CatalogEntry>;

namespace detail
{

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace detail

/// Parses catalog text. Only genus-indexed formula ids are accepted, each at
/// most once.
inline Catalog parse_catalog(std::string_view text)
{
    Catalog out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = detail::trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        const std::string where = "catalog line " + std::to_string(line_no) + ": ";
        if (eq == std::string_view::npos) {
            throw CatalogError(where + "expected '<formula-id> = <expr>'");
        }
        const std::string name(detail::trim(line.substr(0, eq)));
        const auto id = formulas::parse_formula_id(name);
        if (!id || !formulas::genus_formula_min(*id)) {
            throw CatalogError(where + "'" + name + "' is not a genus-indexed formula id");
        }
        for (const auto &e : out) {
            if (e.id == *id) {
                throw CatalogError(where + "duplicate entry for '" + name + "'");
            }
        }
        CatalogEntry entry{*id, std::string(detail::trim(line.substr(eq + 1))), nullptr, line_no};
        try {
            entry.expr = parse(entry.text);
        } catch (const ParseError &e) {
            throw CatalogError(where + e.what());
        }
        out.push_back(std::move(entry));
    }
    return out;
}

inline const Catalog &default_catalog()
{
    static const Catalog c = parse_catalog(kDefaultCatalog);
    return c;
}

struct CrosscheckEntry {
    formulas::FormulaId id;
    long g = 0;
    bool match = false;
    std::string message;
};

/// Evaluates every catalog entry for g = min..g_max and compares against the
/// programmatic builder.
inline std::vector<CrosscheckEntry> catalog_crosscheck(const Catalog &catalog, long g_max)
{
    std::vector<CrosscheckEntry> out;
    for (const auto &entry : catalog) {
        const long lo = formulas::genus_formula_min(entry.id).value_or(1);
        for (long g = lo; g <= g_max; ++g) {
            CrosscheckEntry r{entry.id, g, false, {}};
            try {
                const auto from_text = eval(entry.expr, formulas::ParamBinding::genus(g));
                const auto from_builder = formulas::genus_formula(entry.id, g);
                r.match = from_text == from_builder;
                if (!r.match) {
                    r.message = "text gives " + to_string(from_text) + ", builder gives " + to_string(from_builder);
                }
            } catch (const std::exception &e) {
                r.message = e.what();
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace vpp::dsl

#endif
