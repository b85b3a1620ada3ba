#pragma once

// JSON, CSV and plain-text renderings. Exact counts are always decimal
// strings; nlohmann::json keeps object keys sorted, so dumps are stable.

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "paley/closed_forms.hpp"
#include "paley/quadforms.hpp"
#include "paley/towers.hpp"

namespace paley::report {

using Json = nlohmann::json;

inline Json value_json(const formulas::Value& v) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, BigInt>) return x.str();
            else return x;
        },
        v);
}

template <class T>
Json optional_count(const std::optional<T>& v) {
    return v ? Json(v->str()) : Json(nullptr);
}

inline Json to_json(const formulas::CliqueReport& r) {
    Json j;
    j["request"] = {
        {"ring", r.ring},
        {"q", r.request.q.str()},
        {"beta", r.request.beta},
        {"p", r.request.p},
        {"r", r.request.r},
        {"k", r.request.k},
        {"ell", r.request.ell},
    };
    j["formula_value"] = optional_count(r.formula_value);
    j["oracle_value"] = optional_count(r.oracle_value);
    j["match"] = r.match ? Json(*r.match) : Json(nullptr);
    Json inter = Json::object();
    for (const auto& [k, v] : r.intermediates) inter[k] = value_json(v);
    j["intermediates"] = inter;
    j["errata"] = Json::array();
    return j;
}

inline Json to_json(const towers::TableReport& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        rows.push_back({
            {"ell", row.ell},
            {"sequence_value", row.sequence_value.str()},
            {"count", row.count.str()},
            {"published_value", optional_count(row.published_value)},
            {"published_count", optional_count(row.published_count)},
            {"erratum", row.erratum},
            {"direct_count", optional_count(row.direct_count)},
            {"representation_unique", row.representation_unique ? Json(*row.representation_unique) : Json(nullptr)},
        });
    }
    return {
        {"table", t.id},
        {"caption", t.caption},
        {"sequence", t.sequence_name},
        {"generator", {{"a", t.sequence.generator.a.str()}, {"b", t.sequence.generator.b.str()}, {"D", t.sequence.generator.D}}},
        {"rows", rows},
        {"errata", t.errata},
    };
}

inline Json to_json(const qf::QFRep& r) {
    return {
        {"form", std::string(qf::to_string(r.form))},
        {"a", r.a.str()},
        {"b", r.b.str()},
        {"target", r.target.str()},
        {"norm_tags", r.norm_tags},
    };
}

inline void write_csv(std::ostream& out, const towers::TableReport& t) {
    out << "ell,sequence_value,count,published_value,published_count,erratum_flag\n";
    for (const auto& row : t.rows) {
        out << row.ell << ',' << row.sequence_value << ',' << row.count << ','
            << (row.published_value ? row.published_value->str() : "") << ','
            << (row.published_count ? row.published_count->str() : "") << ','
            << (row.erratum ? 1 : 0) << '\n';
    }
}

inline void write_csv(std::ostream& out, const formulas::CliqueReport& r) {
    out << "ring,k,ell,formula_value,oracle_value,match\n";
    out << r.ring << ',' << r.request.k << ',' << r.request.ell << ','
        << (r.formula_value ? r.formula_value->str() : "") << ','
        << (r.oracle_value ? r.oracle_value->str() : "") << ','
        << (r.match ? (*r.match ? "1" : "0") : "") << '\n';
}

inline void write_text(std::ostream& out, const towers::TableReport& t) {
    out << "table " << t.id << ": " << t.caption << '\n';
    for (const auto& row : t.rows) {
        out << "  ell=" << row.ell << "  " << t.sequence_name << "=" << row.sequence_value << "  count=" << row.count;
        if (row.erratum) out << "  [erratum]";
        out << '\n';
    }
    if (t.errata.empty()) out << "errata: none\n";
    for (const auto& e : t.errata) out << "erratum: " << e << '\n';
}

inline void write_text(std::ostream& out, const formulas::CliqueReport& r) {
    out << r.ring << "  k=" << r.request.k << "  ell=" << r.request.ell << '\n';
    if (r.formula_value) out << "  formula: " << *r.formula_value << '\n';
    if (r.oracle_value) out << "  oracle:  " << *r.oracle_value << '\n';
    if (r.match) out << "  match:   " << (*r.match ? "yes" : "NO") << '\n';
    for (const auto& [k, v] : r.intermediates) {
        out << "  " << k << " = ";
        std::visit([&](const auto& x) { out << x; }, v);
        out << '\n';
    }
}

}  // namespace paley::report
