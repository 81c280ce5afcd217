#ifndef VPP_REPORT_HPP
#define VPP_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyring.hpp"
#include "verify.hpp"

namespace vpp::report
{

// Coefficients are decimal strings: they outgrow 64-bit integers quickly.
inline nlohmann::ordered_json coeff_array(const Polynomial &p)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto &s : coeff_strings(p)) {
        arr.push_back(s);
    }
    return arr;
}

inline nlohmann::ordered_json params_json(const formulas::ParamBinding &b)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    auto add = [&](const char *name, const std::optional<long> &v) {
        if (v) {
            j[name] = *v;
        }
    };
    add("g", b.g);
    add("g1", b.g1);
    add("g2", b.g2);
    add("n", b.n);
    add("k", b.k);
    add("r", b.r);
    add("d", b.d);
    add("codim", b.codim);
    return j;
}

inline nlohmann::ordered_json to_json(const verify::ClaimResult &r)
{
    nlohmann::ordered_json j;
    j["claim"] = r.claim_id;
    j["params"] = params_json(r.params);
    j["status"] = std::string(verify::status_name(r.status));
    if (r.witness) {
        j["witness"] = coeff_array(*r.witness);
    }
    if (!r.detail.empty()) {
        j["detail"] = r.detail;
    }
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<verify::ClaimResult> &results)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : results) {
        arr.push_back(to_json(r));
    }
    return arr;
}

inline std::string table(const std::vector<verify::ClaimResult> &results)
{
    std::size_t w_claim = 5;
    std::size_t w_params = 6;
    for (const auto &r : results) {
        w_claim = std::max(w_claim, r.claim_id.size());
        w_params = std::max(w_params, r.params.to_string().size());
    }
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
    };
    std::ostringstream os;
    os << pad("claim", w_claim) << "  " << pad("params", w_params) << "  " << pad("status", 8) << "  detail\n";
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t reported = 0;
    for (const auto &r : results) {
        std::string line = pad(r.claim_id, w_claim) + "  " + pad(r.params.to_string(), w_params) + "  " +
                           pad(std::string(verify::status_name(r.status)), 8) + "  " + r.detail;
        if (r.status == verify::Status::Fail && r.witness) {
            line += (r.detail.empty() ? "" : "; ") + std::string("witness ") + to_string(*r.witness);
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << '\n';
        (r.status == verify::Status::Pass ? pass : r.status == verify::Status::Fail ? fail : reported)++;
    }
    os << pass << " pass, " << fail << " fail, " << reported << " reported\n";
    return os.str();
}

inline std::string latex_table(const std::vector<verify::ClaimResult> &results)
{
    auto escape = [](const std::string &s) {
        std::string out;
        for (char c : s) {
            if (c == '_' || c == '&' || c == '%' || c == '#') {
                out += '\\';
            }
            out += c;
        }
        return out;
    };
    std::ostringstream os;
    os << "\\begin{tabular}{lll}\n\\hline\nclaim & parameters & status \\\\\n\\hline\n";
    for (const auto &r : results) {
        os << "\\texttt{" << escape(r.claim_id) << "} & $" << r.params.to_string() << "$ & "
           << verify::status_name(r.status) << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
    return os.str();
}

} // namespace vpp::report

#endif
