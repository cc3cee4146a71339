#pragma once

// JSON serialization: TruncatedSeries (bit-exact round trip), partitions,
// comparison reports.  All arbitrary-precision numbers travel as decimal
// strings.

#include <json.hpp>

#include "partitions.hpp"
#include "series.hpp"

namespace cozeta {

using json = nlohmann::json;

inline json bound_to_json(long b) {
    if (b >= kInf) return nullptr;
    if (b <= -kInf) return nullptr;
    return b;
}
inline long bound_from_json(const json &j, long inf_value) {
    return j.is_null() ? inf_value : j.get<long>();
}

inline json series_to_json(const TruncatedSeries &s) {
    json j;
    j["variables"] = s.vars.laurent;
    j["series_var"] = s.vars.series_var;
    j["q_value"] = s.vars.q_value ? json(rat_to_string(*s.vars.q_value)) : json(nullptr);
    j["T_cap"] = bound_to_json(s.t_cap);
    json window = json::object();
    json terms = json::array();
    for (const auto &[d, sl] : s.coeffs) {
        json box;
        box["floor"] = json::array();
        box["cap"] = json::array();
        for (long f : sl.box.floor) box["floor"].push_back(bound_to_json(f));
        for (long c : sl.box.cap) box["cap"].push_back(bound_to_json(c));
        window[std::to_string(d)] = box;
        for (const auto &[e, c] : sl.terms)
            terms.push_back({{"T", d}, {"exps", e}, {"coeff", rat_to_string(c)}});
    }
    j["window"] = window;
    j["terms"] = terms;
    return j;
}

inline TruncatedSeries series_from_json(const json &j) {
    VariableSpec vars;
    vars.laurent = j.at("variables").get<std::vector<std::string>>();
    vars.series_var = j.at("series_var").get<std::string>();
    if (!j.at("q_value").is_null()) vars.q_value = rat_from_string(j.at("q_value").get<std::string>());
    vars.validate();
    TruncatedSeries s(vars, bound_from_json(j.at("T_cap"), kInf));
    const std::size_t n = vars.nvars();
    for (const auto &[key, box] : j.at("window").items()) {
        long d = std::stol(key);
        LaurentSlice sl = LaurentSlice::zero(n);
        for (std::size_t i = 0; i < n; ++i) {
            sl.box.floor[i] = bound_from_json(box.at("floor").at(i), kInf);
            sl.box.cap[i] = bound_from_json(box.at("cap").at(i), kInf);
        }
        s.coeffs[d] = std::move(sl);
    }
    for (const auto &t : j.at("terms")) {
        long d = t.at("T").get<long>();
        Exp e = t.at("exps").get<Exp>();
        auto it = s.coeffs.find(d);
        if (it == s.coeffs.end()) {
            LaurentSlice sl = LaurentSlice::zero(n);
            it = s.coeffs.emplace(d, std::move(sl)).first;
        }
        it->second.terms[e] = rat_from_string(t.at("coeff").get<std::string>());
    }
    s.normalize();
    return s;
}

inline json partition_to_json(const Partition &p) { return json(p.parts); }
inline Partition partition_from_json(const json &j) {
    Partition p{j.get<std::vector<long>>()};
    p.validate();
    return p;
}

inline json slice_to_json(const LaurentSlice &s) {
    json terms = json::array();
    for (const auto &[e, c] : s.terms) terms.push_back({{"exps", e}, {"coeff", rat_to_string(c)}});
    json box;
    box["floor"] = json::array();
    box["cap"] = json::array();
    for (long f : s.box.floor) box["floor"].push_back(bound_to_json(f));
    for (long c : s.box.cap) box["cap"].push_back(bound_to_json(c));
    return {{"terms", terms}, {"window", box}};
}

inline json mismatch_to_json(const Mismatch &m) {
    return {{"T", m.t_deg},
            {"exps", m.exps},
            {"lhs", rat_to_string(m.lhs)},
            {"rhs", rat_to_string(m.rhs)}};
}

inline std::string status_name(CompareStatus st) {
    switch (st) {
    case CompareStatus::Equal: return "equal";
    case CompareStatus::Mismatch: return "mismatch";
    default: return "insufficient-window";
    }
}

} // namespace cozeta
