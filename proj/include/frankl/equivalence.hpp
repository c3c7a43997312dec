#pragma once

// Translation between union-closed families and bipartite graphs.
//
// family -> graph: U = ground elements, W = members, X adjacent to every
// element of X. The maximal stable sets S of the graph then correspond to the
// members via S -> U \ S.
// graph -> family: {side \ S : S maximal stable}, union-closed because the
// meet of two maximal stable sets is again maximal stable.

#include <map>
#include <vector>

#include "frankl/family.hpp"
#include "frankl/graph.hpp"
#include "frankl/mss.hpp"

namespace frankl {

struct LabeledIncidenceGraph {
    BipartiteGraph graph;
    std::vector<Element> element_of;  // U position -> ground element
    std::vector<Member> member_of;    // W position -> member
    SetFamily family;                 // the family actually encoded (∅ included)
    bool inserted_empty = false;

    VertexId vertex_of_element(Element e) const {
        auto it = std::lower_bound(element_of.begin(), element_of.end(), e);
        if (it == element_of.end() || *it != e) throw InvalidInput("element " + std::to_string(e) + " not in ground set");
        return u_vertex(static_cast<std::uint32_t>(it - element_of.begin()));
    }
};

inline LabeledIncidenceGraph family_to_graph(const SetFamily& f) {
    if (f.empty() || f.is_trivial()) throw PreconditionError("family must differ from {} and {∅}");
    if (!is_union_closed(f)) throw PreconditionError("family is not union-closed");
    LabeledIncidenceGraph out;
    out.inserted_empty = !f.has_empty();
    out.family = f.with_empty();
    out.element_of = out.family.ground();
    out.member_of = out.family.members();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t j = 0; j < out.member_of.size(); ++j)
        for (auto e : out.member_of[j]) {
            auto i = std::lower_bound(out.element_of.begin(), out.element_of.end(), e) - out.element_of.begin();
            edges.emplace_back(static_cast<std::size_t>(i), j);
        }
    std::sort(edges.begin(), edges.end());
    out.graph = build_graph(out.element_of.size(), out.member_of.size(), edges);
    return out;
}

// U \ S for a maximal stable set S.
inline VertexSet tau(const BipartiteGraph& g, const VertexSet& s) {
    if (!is_maximal_stable(g, s)) throw PreconditionError("tau: " + to_string(s) + " is not maximal stable");
    return g.from_bits(Side::U, ~g.to_bits(Side::U, s));
}

// {side \ S : S maximal stable}; elements are the vertex indices of `side`.
inline SetFamily graph_to_family(const BipartiteGraph& g, Side side = Side::U) {
    if (g.edge_count() == 0) throw PreconditionError("edgeless graph yields the excluded family {∅}");
    std::vector<Member> members;
    for_each_mss(g, [&](const Bits& u, const Bits& w) {
        Bits out = ~(side == Side::U ? u : w);
        Member m;
        for (auto i = out.find_first(); i != Bits::npos; i = out.find_next(i)) m.push_back(g.ids(side)[i]);
        members.push_back(std::move(m));
    });
    return SetFamily(std::move(members));
}

// Round trip family -> graph -> family, plus the correspondence between
// abundant elements and rare U-vertices. Abundance is measured in the family
// as encoded, i.e. with ∅ present: the graph always has |f ∪ {∅}| maximal
// stable sets.
inline bool verify_equivalence(const SetFamily& f) {
    auto lg = family_to_graph(f);
    auto back = graph_to_family(lg.graph, Side::U);
    std::vector<Member> relabeled;
    for (const auto& m : back.members()) {
        Member r;
        for (auto i : m) r.push_back(lg.element_of[i]);
        relabeled.push_back(std::move(r));
    }
    if (SetFamily(std::move(relabeled)) != lg.family) return false;

    auto report = mss_report(lg.graph);
    if (report.total != lg.family.size()) return false;
    auto abundant = abundant_elements(lg.family);
    for (std::size_t i = 0; i < lg.element_of.size(); ++i) {
        bool a = std::binary_search(abundant.begin(), abundant.end(), lg.element_of[i]);
        if (a != is_rare(report, lg.graph.id_at(Side::U, i))) return false;
    }
    return true;
}

}  // namespace frankl
