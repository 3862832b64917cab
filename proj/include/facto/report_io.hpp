#pragma once

// JSON serialization for reports. Big integers are decimal strings (they
// exceed 64-bit range quickly); intervals carry both endpoints and the
// working precision, never a single rounded float.

#include <string>

#include <json.hpp>

#include "facto/bounds.hpp"
#include "facto/fcount.hpp"

namespace facto {

using Json = nlohmann::ordered_json;

inline Json to_json(const RealInterval& iv) {
    return Json{{"lo", iv.lo_str()}, {"hi", iv.hi_str()}, {"precision_bits", (long)iv.prec()}};
}

inline Json to_json(const Alpha& a) {
    Json arr = Json::array();
    for (unsigned c : a.comps) arr.push_back(c);
    return arr;
}

inline Json to_json(const LemmaReport& r) {
    Json j{{"lemma", to_string(r.id)},
           {"range", r.range},
           {"status", to_string(r.status)},
           {"worst_slack", r.worst_slack}};
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    return j;
}

inline Json to_json(const BoundReport& r) {
    Json j{{"alpha", to_json(r.alpha)},
           {"closed_form_lower", to_json(r.closed_form_lower)},
           {"hypergeom_lower", to_json(r.hypergeom_lower)}};
    if (r.has_exact) {
        j["exact_p"] = r.exact_p.get_str();
        j["slack_log"] = r.slack_log;
        j["status"] = r.pass ? "PASS" : "FAIL";
    }
    return j;
}

inline Json to_json(const BudgetReport& b) {
    return Json{{"x", b.x},          {"r", (long)b.r},           {"r_budget", b.r_budget},
                {"n_floor", (long)b.n_floor}, {"n_cap", b.n_cap}, {"r_ok", b.r_ok},
                {"n_ok", b.n_ok}};
}

inline Json to_json(const SpectrumReport& r) {
    Json j{{"x", r.x.get_str()},
           {"tuple_count", (long)r.tuple_count},
           {"distinct_count", (long)r.distinct_count},
           {"complete", r.complete}};
    if (r.asymptotics_defined) {
        j["theorem_bound"] = r.theorem_bound_value;
        j["prior_bound"] = r.prior_bound_value;
        j["ratio_log"] = r.ratio_log;
    }
    return j;
}

inline Json to_json(const ConjectureSReport& r) {
    return Json{{"x", r.x},
                {"B", r.B},
                {"s_size", r.s_size.get_str()},
                {"distinct_p_on_s", r.distinct_p_on_s.get_str()}};
}

// Flat CSV projection of a JSON object tree: header row of dotted paths,
// one value row. Arrays of objects become one row per element.
inline void flatten_json(const Json& j, const std::string& prefix,
                         std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_json(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten_json(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

inline std::string to_csv(const Json& j) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten_json(j, "", cells);
    std::string header, row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) {
            header += ',';
            row += ',';
        }
        header += cells[i].first;
        std::string v = cells[i].second;
        if (v.find(',') != std::string::npos || v.find('"') != std::string::npos) {
            std::string q = "\"";
            for (char c : v) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
            q += '"';
            v = q;
        }
        row += v;
    }
    return header + "\n" + row + "\n";
}

} // namespace facto
