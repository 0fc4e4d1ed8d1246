#pragma once

#include <json.hpp>

#include "cochar/closed_form.hpp"
#include "cochar/multiplicity_series.hpp"
#include "cochar/partial_fraction.hpp"
#include "cochar/poly.hpp"
#include "cochar/ratfunc.hpp"
#include "cochar/series.hpp"

namespace cochar {

/// Exact integers become JSON numbers when they fit, decimal strings
/// otherwise.
inline nlohmann::json json_integer(const BigInt& n) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi) {
        return static_cast<std::int64_t>(n);
    }
    return n.str();
}

inline nlohmann::json to_json(const BigRational& q) {
    return to_string(q);
}

/// Sorted list of (exponents, coefficient) records.
inline nlohmann::json to_json(const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::array();
        for (int i = 0; i < p.vars().size(); ++i) {
            exps.push_back(e[i]);
        }
        terms.push_back({{"exponents", exps}, {"coefficient", to_string(c)}});
    }
    nlohmann::json vars = nlohmann::json::array();
    for (int i = 0; i < p.vars().size(); ++i) {
        vars.push_back(p.vars()[i]);
    }
    return {{"variables", vars}, {"terms", terms}};
}

inline nlohmann::json to_json(const RatFunc& f) {
    return {{"numerator", to_json(f.num())},
            {"denominator", to_json(f.den())}};
}

/// {"N": n, "terms": [[i, j, "p/q"], ...]} sorted by (i + j, i).
inline nlohmann::json to_json(const TruncSeries2& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : s.terms()) {
        terms.push_back({e[0], e[1], to_string(c)});
    }
    return {{"N", s.truncation()}, {"terms", terms}};
}

inline nlohmann::json to_json(const PartialFractionT& pf) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : pf.terms()) {
        terms.push_back({{"factor", to_string(term.factor)},
                         {"power", term.power},
                         {"numerator", to_json(term.numerator)}});
    }
    return terms;
}

inline nlohmann::json to_json(const PartialFractionV& pf) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [key, c] : pf.coefficients()) {
        coeffs.push_back({{"basis", to_string(key)},
                          {"coefficient", to_string(c)}});
    }
    return {{"coefficients", coeffs},
            {"remainder", to_json(pf.remainder())}};
}

} // namespace cochar
