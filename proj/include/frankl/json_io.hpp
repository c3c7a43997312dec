#pragma once

// JSON encodings of reports, verdicts and certificates. Counts are strings
// because they may exceed 2^53.

#include <string>

#include "json.hpp"

#include "frankl/certify.hpp"
#include "frankl/classes.hpp"
#include "frankl/mss.hpp"

namespace frankl {

using Json = nlohmann::ordered_json;

inline std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Json to_json(const MssReport& r) {
    Json per = Json::object();
    for (const auto& [v, c] : r.per_vertex) per[v.str()] = c.str();
    return Json{{"total", r.total.str()}, {"per_vertex", std::move(per)}};
}

inline MssReport report_from_json(const Json& j) {
    MssReport r;
    r.total = BigInt(j.at("total").get<std::string>());
    for (const auto& [k, v] : j.at("per_vertex").items()) r.per_vertex[parse_vertex_id(k)] = BigInt(v.get<std::string>());
    return r;
}

inline Json ids_json(const std::vector<VertexId>& vs) {
    Json out = Json::array();
    for (auto v : vs) out.push_back(v.str());
    return out;
}

inline Json to_json(const ConjectureVerdict& v) {
    return Json{{"holds", v.holds}, {"rare_u", ids_json(v.rare_u)}, {"rare_w", ids_json(v.rare_w)},
                {"margin", to_string(v.margin)}};
}

inline Json to_json(const Certificate& c) {
    return Json{{"kind", to_string(c.kind)},
                {"center", c.center ? Json(c.center->str()) : Json(nullptr)},
                {"witnesses", ids_json(c.witnesses)},
                {"guarantee", to_string(c.guarantee)},
                {"aux", c.aux}};
}

inline Certificate certificate_from_json(const Json& j) {
    Certificate c;
    auto kind = j.at("kind").get<std::string>();
    if (kind == "ONELEM") c.kind = CertificateKind::Onelem;
    else if (kind == "TWOLEM") c.kind = CertificateKind::Twolem;
    else if (kind == "VAUGHAN") c.kind = CertificateKind::Vaughan;
    else if (kind == "KNILL") c.kind = CertificateKind::Knill;
    else if (kind == "COUNTED") c.kind = CertificateKind::Counted;
    else throw InvalidInput("unknown certificate kind '" + kind + "'");
    if (j.contains("center") && !j.at("center").is_null()) c.center = parse_vertex_id(j.at("center").get<std::string>());
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(parse_vertex_id(w.get<std::string>()));
    auto g = j.at("guarantee").get<std::string>();
    if (g == "ALL_RARE") c.guarantee = Guarantee::AllRare;
    else if (g == "AT_LEAST_ONE_RARE") c.guarantee = Guarantee::AtLeastOneRare;
    else throw InvalidInput("unknown guarantee '" + g + "'");
    c.aux = j.contains("aux") ? j.at("aux") : Json::object();
    return c;
}

inline Json to_json(const ReductionLog& log) {
    Json out = Json::array();
    for (const auto& s : log.steps) out.push_back(Json{{"removed", s.removed.str()}, {"covering", ids_json(s.covering)}});
    return out;
}

inline Json set_json(const VertexSet& s) { return ids_json({s.begin(), s.end()}); }

inline Json to_json(const ClassVerdict& v) {
    Json out{{"class", to_string(v.class_name)}, {"member", v.member}};
    std::visit(
        [&](const auto& w) {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, EliminationOrder>) out["elimination_order"] = ids_json(w.order);
            else if constexpr (std::is_same_v<T, NoWeaklySimplicial>) out["stuck_subgraph"] = set_json(w.remaining);
            else if constexpr (std::is_same_v<T, K4Minor>) {
                Json sets = Json::array();
                for (const auto& b : w.branch_sets) sets.push_back(set_json(b));
                out["k4_branch_sets"] = std::move(sets);
            } else if constexpr (std::is_same_v<T, OffendingVertex>) {
                out["offending_vertex"] = w.vertex.str();
                out["degree"] = w.degree;
            }
        },
        v.witness);
    return out;
}

}  // namespace frankl
