#pragma once

// Graph-class recognition and the class-specific certificate drivers.

#include <algorithm>
#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "frankl/certify.hpp"
#include "frankl/graph.hpp"
#include "frankl/mss.hpp"

namespace frankl {

enum class GraphClass { ChordalBipartite, Subcubic, SeriesParallel, CircularModel };

inline const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::ChordalBipartite: return "CHORDAL_BIPARTITE";
        case GraphClass::Subcubic: return "SUBCUBIC";
        case GraphClass::SeriesParallel: return "SERIES_PARALLEL";
        case GraphClass::CircularModel: return "CIRCULAR_MODEL";
    }
    return "?";
}

struct EliminationOrder {
    std::vector<VertexId> order;
};

// An induced subgraph in which no vertex is weakly simplicial.
struct NoWeaklySimplicial {
    VertexSet remaining;
};

// Disjoint connected vertex sets, pairwise joined by an edge.
struct K4Minor {
    std::array<VertexSet, 4> branch_sets;
};

struct OffendingVertex {
    VertexId vertex;
    std::size_t degree = 0;
};

using ClassWitness = std::variant<std::monostate, EliminationOrder, NoWeaklySimplicial, K4Minor, OffendingVertex>;

struct ClassVerdict {
    GraphClass class_name;
    bool member = false;
    ClassWitness witness;
};

// ------------------------------------------------------- chordal bipartite

namespace detail {

// Neighbourhoods of the neighbours of (side, pos) form a chain under inclusion.
inline bool weakly_simplicial_at(const BipartiteGraph& g, Side side, std::size_t pos) {
    Side ns = opposite(side);
    std::vector<const Bits*> rows;
    const Bits& r = g.row(side, pos);
    for (auto j = r.find_first(); j != Bits::npos; j = r.find_next(j)) rows.push_back(&g.row(ns, j));
    std::sort(rows.begin(), rows.end(), [](const Bits* a, const Bits* b) { return a->count() < b->count(); });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (!rows[i - 1]->is_subset_of(*rows[i])) return false;
    return true;
}

}  // namespace detail

inline std::optional<VertexId> find_weakly_simplicial(const BipartiteGraph& g, Side side) {
    for (std::size_t i = 0; i < g.size(side); ++i)
        if (detail::weakly_simplicial_at(g, side, i)) return g.id_at(side, i);
    return std::nullopt;
}

// Greedy elimination of weakly simplicial vertices. The class is hereditary
// and each member has such a vertex, so the order of deletion does not matter;
// a vertex on a chordless cycle of length >= 6 is never weakly simplicial, so
// non-members get stuck.
inline ClassVerdict is_chordal_bipartite(const BipartiteGraph& g) {
    BipartiteGraph h = g;
    EliminationOrder order;
    while (h.vertex_count() > 0) {
        auto v = find_weakly_simplicial(h, Side::U);
        if (!v) v = find_weakly_simplicial(h, Side::W);
        if (!v) return {GraphClass::ChordalBipartite, false, NoWeaklySimplicial{h.vertex_set()}};
        order.order.push_back(*v);
        auto keep = h.vertex_set();
        keep.erase(*v);
        h = induced_subgraph(h, keep);
    }
    return {GraphClass::ChordalBipartite, true, std::move(order)};
}

struct SidedCertificates {
    Certificate u_side;
    Certificate w_side;
};

inline SidedCertificates certify_chordal_bipartite(const BipartiteGraph& g) {
    if (g.edge_count() == 0) throw PreconditionError("chordal driver needs at least one edge");
    if (!is_chordal_bipartite(g).member) throw PreconditionError("graph is not chordal bipartite");
    auto for_side = [&](Side target) {
        Side xs = opposite(target);
        for (std::size_t x = 0; x < g.size(xs); ++x) {
            const Bits& r = g.row(xs, x);
            if (r.none() || !detail::weakly_simplicial_at(g, xs, x)) continue;
            // The neighbour with the largest neighbourhood contains all the others.
            std::size_t best = r.find_first();
            for (auto y = r.find_next(best); y != Bits::npos; y = r.find_next(y))
                if (g.row(target, y).count() > g.row(target, best).count()) best = y;
            return onelem_certificate(g.id_at(xs, x), g.id_at(target, best));
        }
        throw GuaranteeViolation("chordal bipartite graph without a non-isolated weakly simplicial vertex");
    };
    return {for_side(Side::U), for_side(Side::W)};
}

// --------------------------------------------------------- series-parallel

namespace detail {

// Simple graph on both sides of a bipartite graph (U positions first), with
// the set of original vertices contracted into each surviving vertex.
struct MinorGraph {
    std::vector<Bits> adj;
    Bits alive;
    std::vector<Bits> bag;
};

inline MinorGraph minor_of(const BipartiteGraph& g) {
    std::size_t nu = g.size(Side::U), n = g.vertex_count();
    MinorGraph m{std::vector<Bits>(n, Bits(n)), Bits(n), std::vector<Bits>(n, Bits(n))};
    m.alive.set();
    for (std::size_t i = 0; i < n; ++i) m.bag[i].set(i);
    for (std::size_t i = 0; i < nu; ++i) {
        const Bits& r = g.row(Side::U, i);
        for (auto j = r.find_first(); j != Bits::npos; j = r.find_next(j)) {
            m.adj[i].set(nu + j);
            m.adj[nu + j].set(i);
        }
    }
    return m;
}

// Deletes vertices of degree <= 1 and suppresses vertices of degree 2 until
// neither applies. The graph empties iff it has no K4 minor.
inline void series_parallel_reduce(MinorGraph& m) {
    std::vector<std::size_t> work;
    for (auto v = m.alive.find_first(); v != Bits::npos; v = m.alive.find_next(v)) work.push_back(v);
    while (!work.empty()) {
        auto v = work.back();
        work.pop_back();
        if (!m.alive.test(v)) continue;
        auto deg = m.adj[v].count();
        if (deg > 2) continue;
        std::vector<std::size_t> nbrs;
        for (auto a = m.adj[v].find_first(); a != Bits::npos; a = m.adj[v].find_next(a)) nbrs.push_back(a);
        for (auto a : nbrs) {
            m.adj[a].reset(v);
            work.push_back(a);
        }
        m.adj[v].reset();
        m.alive.reset(v);
        if (deg == 2) {
            auto a = nbrs[0], b = nbrs[1];
            if (!m.adj[a].test(b)) {
                m.adj[a].set(b);
                m.adj[b].set(a);
                m.bag[a] |= m.bag[v];
            }
        }
    }
}

inline VertexSet bag_to_set(const BipartiteGraph& g, const Bits& bag) {
    std::size_t nu = g.size(Side::U);
    VertexSet out;
    for (auto i = bag.find_first(); i != Bits::npos; i = bag.find_next(i))
        out.insert(i < nu ? g.id_at(Side::U, i) : g.id_at(Side::W, i - nu));
    return out;
}

// From a stalled reduction, deletes edges while the graph stays non-reducible.
// An edge-minimal such graph with minimum degree 3 is K4 itself, and the bags
// of its four vertices are branch sets in the original graph.
inline K4Minor extract_k4(const BipartiteGraph& g, MinorGraph m) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto a = m.alive.find_first(); a != Bits::npos && !changed; a = m.alive.find_next(a))
            for (auto b = m.adj[a].find_next(a); b != Bits::npos; b = m.adj[a].find_next(b)) {
                MinorGraph trial = m;
                trial.adj[a].reset(b);
                trial.adj[b].reset(a);
                series_parallel_reduce(trial);
                if (trial.alive.any()) {
                    m = std::move(trial);
                    changed = true;
                    break;
                }
            }
    }
    if (m.alive.count() != 4) throw GuaranteeViolation("K4 extraction did not end at four vertices");
    K4Minor out;
    std::size_t k = 0;
    for (auto v = m.alive.find_first(); v != Bits::npos; v = m.alive.find_next(v)) {
        if (m.adj[v].count() != 3) throw GuaranteeViolation("K4 extraction ended at a non-complete graph");
        out.branch_sets[k++] = bag_to_set(g, m.bag[v]);
    }
    return out;
}

}  // namespace detail

inline ClassVerdict is_series_parallel(const BipartiteGraph& g) {
    auto m = detail::minor_of(g);
    detail::series_parallel_reduce(m);
    if (m.alive.none()) return {GraphClass::SeriesParallel, true, std::monostate{}};
    return {GraphClass::SeriesParallel, false, detail::extract_k4(g, std::move(m))};
}

// Checks a claimed K4 minor model against g.
inline bool is_k4_minor_model(const BipartiteGraph& g, const K4Minor& model) {
    VertexSet used;
    for (const auto& b : model.branch_sets) {
        if (b.empty()) return false;
        for (auto v : b)
            if (!g.contains(v) || !used.insert(v).second) return false;
        // connectivity inside b
        VertexSet reached{*b.begin()};
        std::vector<VertexId> stack{*b.begin()};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : neighbors(g, v))
                if (b.count(w) && reached.insert(w).second) stack.push_back(w);
        }
        if (reached.size() != b.size()) return false;
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            bool joined = false;
            for (auto v : model.branch_sets[i])
                for (auto w : model.branch_sets[j]) joined = joined || g.adjacent(v, w);
            if (!joined) return false;
        }
    return true;
}

// Drops every isolated vertex; membership counts of the others are unchanged.
inline BipartiteGraph strip_isolated(const BipartiteGraph& g) { return induced_subgraph(g, non_isolated_vertices(g)); }

inline Certificate certify_series_parallel(const BipartiteGraph& g, Side target) {
    if (g.edge_count() == 0) throw PreconditionError("series-parallel driver needs at least one edge");
    if (non_isolated_vertices(g).size() != g.vertex_count()) throw PreconditionError("graph has isolated vertices");
    if (!is_series_parallel(g).member) throw PreconditionError("graph is not series-parallel");
    if (!is_reduced(g)) throw PreconditionError("graph is not reduced");

    Side xs = opposite(target);
    // A leaf on the opposite side makes its neighbour rare.
    for (std::size_t x = 0; x < g.size(xs); ++x)
        if (g.row(xs, x).count() == 1)
            return onelem_certificate(g.id_at(xs, x), g.id_at(target, g.row(xs, x).find_first()));

    // All leaves are on the target side. After deleting them, some opposite
    // vertex has at most two neighbours left; its remaining neighbours cover
    // N²(x) because every deleted neighbour was a leaf.
    Bits non_leaf(g.size(target));
    for (std::size_t y = 0; y < g.size(target); ++y) non_leaf[y] = g.row(target, y).count() != 1;
    for (std::size_t x = 0; x < g.size(xs); ++x) {
        Bits rest = g.row(xs, x) & non_leaf;
        auto d = rest.count();
        if (d == 0 || d > 2) continue;
        auto y = rest.find_first();
        if (d == 1) return onelem_certificate(g.id_at(xs, x), g.id_at(target, y));
        return twolem_certificate(g.id_at(xs, x), g.id_at(target, y), g.id_at(target, rest.find_next(y)));
    }
    throw GuaranteeViolation("series-parallel graph without a low-degree vertex after leaf removal");
}

// ---------------------------------------------------------------- subcubic

inline ClassVerdict is_subcubic(const BipartiteGraph& g) {
    for (auto v : g.vertices())
        if (auto d = g.degree(v); d > 3) return {GraphClass::Subcubic, false, OffendingVertex{v, d}};
    return {GraphClass::Subcubic, true, std::monostate{}};
}

// Case analysis with U := target, W := opposite:
//  (1) a W-vertex of degree 1 or 2          -> ONELEM / TWOLEM
//  (2) a U-vertex of degree 1, neighbour x  -> TWOLEM on x's other two neighbours
//  (3) a U-vertex of degree 3               -> VAUGHAN
//  (4) every U-vertex has degree 2          -> KNILL
inline Certificate certify_subcubic(const BipartiteGraph& g, Side target) {
    if (g.edge_count() == 0) throw PreconditionError("subcubic driver needs at least one edge");
    if (!is_subcubic(g).member) throw PreconditionError("graph is not subcubic");
    if (!is_twin_free(g)) throw PreconditionError("graph has twins; reduce it first");
    Side xs = opposite(target);

    for (std::size_t x = 0; x < g.size(xs); ++x) {
        const Bits& r = g.row(xs, x);
        auto d = r.count();
        if (d == 1) return onelem_certificate(g.id_at(xs, x), g.id_at(target, r.find_first()));
        if (d == 2) {
            auto y = r.find_first();
            return twolem_certificate(g.id_at(xs, x), g.id_at(target, y), g.id_at(target, r.find_next(y)));
        }
    }
    for (std::size_t u = 0; u < g.size(target); ++u) {
        const Bits& r = g.row(target, u);
        if (r.count() != 1) continue;
        auto x = r.find_first();
        Bits others = g.row(xs, x);
        others.reset(u);
        auto y = others.find_first();
        auto z = others.find_next(y);
        if (y == Bits::npos || z == Bits::npos) throw GuaranteeViolation("subcubic case (2): neighbour lacks degree 3");
        return twolem_certificate(g.id_at(xs, x), g.id_at(target, y), g.id_at(target, z));
    }
    for (std::size_t u = 0; u < g.size(target); ++u)
        if (g.row(target, u).count() == 3) {
            if (auto c = find_vaughan_config(g, target)) return *c;
            throw GuaranteeViolation("subcubic case (3): no Vaughan configuration in a twin-free graph");
        }
    VertexSet keep = g.vertex_set();
    for (std::size_t u = 0; u < g.size(target); ++u)
        if (g.row(target, u).none()) keep.erase(g.id_at(target, u));
    return knill_certificate(induced_subgraph(g, keep), target);
}

}  // namespace frankl
