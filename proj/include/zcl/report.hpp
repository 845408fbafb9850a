// zcl: high-precision Hurwitz zeta / Stieltjes constants toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef ZCL_REPORT_HPP
#define ZCL_REPORT_HPP

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zcl/identities.hpp"

namespace zcl::identities {

enum class ReportFormat { text, json, csv };

inline std::optional<ReportFormat> report_format_from_string(std::string_view tag) {
    if (tag == "text") return ReportFormat::text;
    if (tag == "json") return ReportFormat::json;
    if (tag == "csv") return ReportFormat::csv;
    return std::nullopt;
}

namespace detail {

inline std::string value_str(const Complex& z, long digits) {
    return zcl::to_string(z, static_cast<std::size_t>(digits));
}

inline std::string small_str(const Real& x) {
    return zcl::to_string(x, 4, x.is_zero() ? RealFormat::automatic : RealFormat::scientific);
}

}  // namespace detail

/// JSON record per grid point.  Numbers are serialized as decimal strings so
/// precision survives the double-float JSON number type; `elapsed` is omitted
/// (reports must be byte-identical across runs).
inline nlohmann::ordered_json report_to_json(const IdentityReport& rep, long digits) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    const ParamSet& ps = rep.params;
    for (ParamField f : fields_for(rep.id)) {
        switch (f) {
            case ParamField::p: params["p"] = ps.p; break;
            case ParamField::q: params["q"] = ps.q; break;
            case ParamField::b: params["b"] = zcl::to_string(ps.b); break;
            case ParamField::k: params["k"] = ps.k; break;
            case ParamField::m: params["m"] = ps.m; break;
            case ParamField::n: params["n"] = ps.n; break;
            case ParamField::N: params["N"] = ps.big_n; break;
            case ParamField::k_p: params["kp"] = ps.k_p; break;
            case ParamField::alpha: params["alpha"] = ps.alpha; break;
            case ParamField::beta: params["beta"] = ps.beta; break;
            case ParamField::s: {
                std::string sv = zcl::to_string(ps.s_re);
                if (ps.s_im != 0) {
                    Rational im_abs = ps.s_im < 0 ? Rational(-ps.s_im) : ps.s_im;
                    sv += (ps.s_im < 0 ? "-" : "+") + zcl::to_string(im_abs) + "i";
                }
                params["s"] = sv;
                break;
            }
        }
    }
    nlohmann::ordered_json j{{"id", to_string(rep.id)},
                             {"params", params},
                             {"lhs", detail::value_str(rep.lhs, digits)},
                             {"rhs", detail::value_str(rep.rhs, digits)},
                             {"abs_diff", detail::small_str(rep.abs_diff)},
                             {"tolerance", detail::small_str(rep.tolerance)},
                             {"pass", rep.pass},
                             {"exact", rep.exact}};
    if (!rep.error.empty()) j["error"] = rep.error;
    return j;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_reports(std::ostream& os, const std::vector<IdentityReport>& reports,
                          ReportFormat fmt, long digits) {
    switch (fmt) {
        case ReportFormat::json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& rep : reports) arr.push_back(report_to_json(rep, digits));
            os << arr.dump(2) << "\n";
            break;
        }
        case ReportFormat::csv: {
            os << "id,params,lhs,rhs,abs_diff,tolerance,pass,exact\n";
            for (const auto& rep : reports) {
                os << to_string(rep.id) << ','
                   << csv_escape(params_to_string(rep.id, rep.params, ";")) << ','
                   << csv_escape(detail::value_str(rep.lhs, digits)) << ','
                   << csv_escape(detail::value_str(rep.rhs, digits)) << ','
                   << detail::small_str(rep.abs_diff) << ',' << detail::small_str(rep.tolerance)
                   << ',' << (rep.pass ? "true" : "false") << ','
                   << (rep.exact ? "true" : "false") << "\n";
            }
            break;
        }
        case ReportFormat::text: {
            for (const auto& rep : reports) {
                os << (rep.pass ? "[PASS] " : "[FAIL] ") << to_string(rep.id) << ' '
                   << params_to_string(rep.id, rep.params);
                if (!rep.error.empty()) {
                    os << " error: " << rep.error;
                } else {
                    os << " lhs=" << detail::value_str(rep.lhs, digits)
                       << " rhs=" << detail::value_str(rep.rhs, digits)
                       << " |lhs-rhs|=" << detail::small_str(rep.abs_diff)
                       << " tol=" << detail::small_str(rep.tolerance)
                       << (rep.exact ? " exact" : "");
                }
                std::ostringstream ms;
                ms.precision(1);
                ms << std::fixed << rep.elapsed_ms;
                os << " (" << ms.str() << " ms)\n";
            }
            break;
        }
    }
}

}  // namespace zcl::identities

#endif
