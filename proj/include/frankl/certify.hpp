#pragma once

// Rare-vertex certificates and the structural lemmas that produce them.
//
//   ONELEM   x, y adjacent with N²(x) ⊆ N(y): y is rare.
//   TWOLEM   y, z neighbours of x with N²(x) ⊆ N(y) ∪ N(z): y or z is rare.
//   VAUGHAN  u with three neighbours whose neighbourhoods are distinct
//            3-sets: some vertex of their union is rare.
//   KNILL    every vertex of one side has degree 2 (a subdivided graph H):
//            some subdivision vertex is rare; the witness is found by counting.
//   COUNTED  a vertex shown rare by direct enumeration.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "frankl/graph.hpp"
#include "frankl/mss.hpp"

namespace frankl {

enum class CertificateKind { Onelem, Twolem, Vaughan, Knill, Counted };
enum class Guarantee { AllRare, AtLeastOneRare };

inline const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::Onelem: return "ONELEM";
        case CertificateKind::Twolem: return "TWOLEM";
        case CertificateKind::Vaughan: return "VAUGHAN";
        case CertificateKind::Knill: return "KNILL";
        case CertificateKind::Counted: return "COUNTED";
    }
    return "?";
}

inline const char* to_string(Guarantee g) { return g == Guarantee::AllRare ? "ALL_RARE" : "AT_LEAST_ONE_RARE"; }

struct Certificate {
    CertificateKind kind = CertificateKind::Counted;
    std::optional<VertexId> center;
    std::vector<VertexId> witnesses;
    Guarantee guarantee = Guarantee::AllRare;
    nlohmann::ordered_json aux = nlohmann::ordered_json::object();

    bool operator==(const Certificate&) const = default;
};

inline Certificate onelem_certificate(VertexId x, VertexId y) {
    return {CertificateKind::Onelem, x, {y}, Guarantee::AllRare, nlohmann::ordered_json::object()};
}

inline Certificate twolem_certificate(VertexId x, VertexId y, VertexId z) {
    if (z < y) std::swap(y, z);
    return {CertificateKind::Twolem, x, {y, z}, Guarantee::AtLeastOneRare, nlohmann::ordered_json::object()};
}

// Kind/guarantee/arity agreement and one-sidedness of the witnesses.
inline bool well_formed(const Certificate& c) {
    if (c.witnesses.empty()) return false;
    if (!std::is_sorted(c.witnesses.begin(), c.witnesses.end()) ||
        std::adjacent_find(c.witnesses.begin(), c.witnesses.end()) != c.witnesses.end())
        return false;
    for (auto w : c.witnesses)
        if (w.side != c.witnesses.front().side) return false;
    switch (c.kind) {
        case CertificateKind::Onelem:
        case CertificateKind::Knill:
        case CertificateKind::Counted:
            return c.guarantee == Guarantee::AllRare && c.witnesses.size() == 1;
        case CertificateKind::Twolem:
            return c.guarantee == Guarantee::AtLeastOneRare && c.witnesses.size() == 2;
        case CertificateKind::Vaughan:
            return c.guarantee == Guarantee::AtLeastOneRare && c.witnesses.size() <= 9;
    }
    return false;
}

// Ground truth by enumeration. Malformed certificates and certificates naming
// vertices outside g are invalid.
inline bool validate_certificate(const BipartiteGraph& g, const MssReport& report, const Certificate& c) {
    if (!well_formed(c)) return false;
    if (c.center && !g.contains(*c.center)) return false;
    for (auto w : c.witnesses)
        if (!g.contains(w)) return false;
    if (c.guarantee == Guarantee::AllRare)
        return std::all_of(c.witnesses.begin(), c.witnesses.end(), [&](VertexId v) { return is_rare(report, v); });
    return std::any_of(c.witnesses.begin(), c.witnesses.end(), [&](VertexId v) { return is_rare(report, v); });
}

inline bool validate_certificate(const BipartiteGraph& g, const Certificate& c) {
    return validate_certificate(g, mss_report(g), c);
}

// ---------------------------------------------------------------- reduction

struct ReductionStep {
    VertexId removed;
    std::vector<VertexId> covering;

    bool operator==(const ReductionStep&) const = default;
};

struct ReductionLog {
    std::vector<ReductionStep> steps;
};

struct Reduction {
    BipartiteGraph graph;
    ReductionLog log;
};

// First vertex (canonical order) whose neighbourhood is the union of the
// neighbourhoods of the other same-side vertices contained in it.
inline std::optional<ReductionStep> find_removable(const BipartiteGraph& g) {
    for (Side s : {Side::U, Side::W}) {
        for (std::size_t i = 0; i < g.size(s); ++i) {
            const Bits& nu = g.row(s, i);
            Bits cover(nu.size());
            std::vector<VertexId> covering;
            for (std::size_t j = 0; j < g.size(s); ++j) {
                if (j == i || !g.row(s, j).is_subset_of(nu)) continue;
                cover |= g.row(s, j);
                covering.push_back(g.id_at(s, j));
            }
            if (!covering.empty() && cover == nu) return ReductionStep{g.id_at(s, i), std::move(covering)};
        }
    }
    return std::nullopt;
}

inline bool is_reduced(const BipartiteGraph& g) { return !find_removable(g).has_value(); }

inline bool is_twin_free(const BipartiteGraph& g) {
    for (Side s : {Side::U, Side::W})
        for (std::size_t i = 0; i < g.size(s); ++i)
            for (std::size_t j = i + 1; j < g.size(s); ++j)
                if (g.row(s, i) == g.row(s, j)) return false;
    return true;
}

// Removing such a vertex leaves the membership counts of all other vertices
// unchanged, so a rare vertex of the result is rare in g.
inline Reduction reduce(const BipartiteGraph& g) {
    Reduction out{g, {}};
    while (auto step = find_removable(out.graph)) {
        auto keep = out.graph.vertex_set();
        keep.erase(step->removed);
        out.graph = induced_subgraph(out.graph, keep);
        out.log.steps.push_back(std::move(*step));
    }
    return out;
}

// ------------------------------------------------------------ local lemmas

// i(S) = (S \ L1) ∪ {x} ∪ (L2 \ N(S ∩ L3)) for a maximal stable S ⊇ N(x).
// The map is an injection from sets containing N(x) to sets containing x.
inline VertexSet injection_image(const BipartiteGraph& g, VertexId x, const VertexSet& s) {
    if (g.degree(x) == 0) throw PreconditionError("injection_image: " + x.str() + " is isolated");
    if (!is_maximal_stable(g, s)) throw PreconditionError("injection_image: argument is not maximal stable");
    auto layers = distance_layers(g, x);
    auto layer = [&](std::size_t i) { return i < layers.size() ? layers[i] : VertexSet{}; };
    if (!includes(s, layer(1))) throw PreconditionError("injection_image: argument does not contain N(" + x.str() + ")");
    VertexSet out = set_difference(s, layer(1));
    out.insert(x);
    auto l2 = set_difference(layer(2), set_neighborhood(g, set_intersection(s, layer(3))));
    out.insert(l2.begin(), l2.end());
    return out;
}

namespace detail {

inline Bits second_neighborhood_bits(const BipartiteGraph& g, Side side, std::size_t pos) {
    return g.neighbor_bits(opposite(side), g.row(side, pos));
}

}  // namespace detail

// Adjacent x (opposite side) and y (target side) with N²(x) ⊆ N(y).
inline std::optional<Certificate> find_onelem(const BipartiteGraph& g, Side target) {
    Side xs = opposite(target);
    for (std::size_t x = 0; x < g.size(xs); ++x) {
        Bits n2 = detail::second_neighborhood_bits(g, xs, x);
        const Bits& nx = g.row(xs, x);
        for (auto y = nx.find_first(); y != Bits::npos; y = nx.find_next(y))
            if (n2.is_subset_of(g.row(target, y))) return onelem_certificate(g.id_at(xs, x), g.id_at(target, y));
    }
    return std::nullopt;
}

// x (opposite side) with distinct neighbours y, z where N²(x) ⊆ N(y) ∪ N(z).
inline std::optional<Certificate> find_twolem(const BipartiteGraph& g, Side target) {
    Side xs = opposite(target);
    for (std::size_t x = 0; x < g.size(xs); ++x) {
        Bits n2 = detail::second_neighborhood_bits(g, xs, x);
        const Bits& nx = g.row(xs, x);
        for (auto y = nx.find_first(); y != Bits::npos; y = nx.find_next(y))
            for (auto z = nx.find_next(y); z != Bits::npos; z = nx.find_next(z))
                if (n2.is_subset_of(g.row(target, y) | g.row(target, z)))
                    return twolem_certificate(g.id_at(xs, x), g.id_at(target, y), g.id_at(target, z));
    }
    return std::nullopt;
}

// u (target side) with neighbours x, y, z whose neighbourhoods are distinct
// sets of size 3. Those neighbourhoods are members of the union-closed family
// {U \ S}, so an abundant element, i.e. a rare vertex, lies in their union.
inline std::optional<Certificate> find_vaughan_config(const BipartiteGraph& g, Side target) {
    Side xs = opposite(target);
    for (std::size_t u = 0; u < g.size(target); ++u) {
        std::vector<std::size_t> cand;
        const Bits& nu = g.row(target, u);
        for (auto x = nu.find_first(); x != Bits::npos; x = nu.find_next(x))
            if (g.row(xs, x).count() == 3) cand.push_back(x);
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = a + 1; b < cand.size(); ++b)
                for (std::size_t c = b + 1; c < cand.size(); ++c) {
                    const Bits &na = g.row(xs, cand[a]), &nb = g.row(xs, cand[b]), &nc = g.row(xs, cand[c]);
                    if (na == nb || na == nc || nb == nc) continue;
                    Certificate cert;
                    cert.kind = CertificateKind::Vaughan;
                    cert.center = g.id_at(target, u);
                    auto members = g.from_bits(target, na | nb | nc);
                    cert.witnesses.assign(members.begin(), members.end());
                    cert.guarantee = Guarantee::AtLeastOneRare;
                    cert.aux["triple"] = {g.id_at(xs, cand[a]).str(), g.id_at(xs, cand[b]).str(),
                                          g.id_at(xs, cand[c]).str()};
                    return cert;
                }
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ Knill

// A graph whose `side` vertices all have degree 2 is the subdivision of the
// graph H on the other side: each subdivision vertex is one edge of H.
struct KnillGraph {
    std::vector<VertexId> nodes;                        // V(H)
    std::vector<std::pair<VertexId, VertexId>> edges;   // E(H), endpoints sorted
    std::vector<VertexId> edge_vertex;                  // subdivision vertex of each edge
};

inline KnillGraph knill_contraction(const BipartiteGraph& g, Side side = Side::U) {
    Side hs = opposite(side);
    if (!is_twin_free(g)) throw PreconditionError("knill: graph has twins");
    KnillGraph h;
    h.nodes = g.vertices(hs);
    for (std::size_t i = 0; i < g.size(side); ++i) {
        const Bits& r = g.row(side, i);
        if (r.count() != 2) throw PreconditionError("knill: " + g.id_at(side, i).str() + " does not have degree 2");
        auto a = r.find_first();
        auto b = r.find_next(a);
        h.edges.emplace_back(g.id_at(hs, a), g.id_at(hs, b));
        h.edge_vertex.push_back(g.id_at(side, i));
    }
    return h;
}

inline Certificate knill_certificate(const BipartiteGraph& g, Side side, const MssReport& report) {
    auto h = knill_contraction(g, side);
    if (h.edges.empty()) throw PreconditionError("knill: no subdivision vertices on side");
    std::size_t best = 0;
    for (std::size_t i = 1; i < h.edge_vertex.size(); ++i)
        if (report.count(h.edge_vertex[i]) < report.count(h.edge_vertex[best])) best = i;
    const auto& count = report.count(h.edge_vertex[best]);
    if (2 * count > report.total)
        throw GuaranteeViolation("knill: no subdivision vertex is rare in a twin-free subdivision");
    Certificate c;
    c.kind = CertificateKind::Knill;
    c.witnesses = {h.edge_vertex[best]};
    c.guarantee = Guarantee::AllRare;
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        edges.push_back({{"ends", {h.edges[i].first.str(), h.edges[i].second.str()}},
                         {"vertex", h.edge_vertex[i].str()}});
    c.aux["h_edges"] = std::move(edges);
    c.aux["total"] = report.total.str();
    c.aux["count"] = count.str();
    return c;
}

inline Certificate knill_certificate(const BipartiteGraph& g, Side side = Side::U) {
    knill_contraction(g, side);
    return knill_certificate(g, side, mss_report(g));
}

// First rare vertex of `target` found by enumeration, if any.
inline std::optional<Certificate> counted_certificate(const MssReport& report, const BipartiteGraph& g, Side target) {
    for (auto v : g.vertices(target))
        if (is_rare(report, v)) {
            Certificate c;
            c.kind = CertificateKind::Counted;
            c.witnesses = {v};
            c.guarantee = Guarantee::AllRare;
            c.aux["count"] = report.count(v).str();
            c.aux["total"] = report.total.str();
            return c;
        }
    return std::nullopt;
}

}  // namespace frankl
