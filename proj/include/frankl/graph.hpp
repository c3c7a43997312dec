#pragma once

// Bipartite graphs with a fixed two-sided vertex set and the neighbourhood
// algebra used by every other module.

#include <algorithm>
#include <array>
#include <compare>
#include <iterator>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "frankl/error.hpp"

namespace frankl {

enum class Side : std::uint8_t { U = 0, W = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::U ? Side::W : Side::U; }
constexpr std::size_t side_slot(Side s) noexcept { return static_cast<std::size_t>(s); }
constexpr char side_letter(Side s) noexcept { return s == Side::U ? 'u' : 'w'; }

// Vertices are named u<i> / w<i>. The index is the original one and survives
// every subgraph operation, so certificates computed on a reduced graph still
// name vertices of the input.
struct VertexId {
    Side side = Side::U;
    std::uint32_t index = 0;

    auto operator<=>(const VertexId&) const = default;

    std::string str() const { return side_letter(side) + std::to_string(index); }
};

inline VertexId u_vertex(std::uint32_t i) { return {Side::U, i}; }
inline VertexId w_vertex(std::uint32_t i) { return {Side::W, i}; }

inline VertexId parse_vertex_id(std::string_view text) {
    if (text.size() < 2 || (text[0] != 'u' && text[0] != 'w'))
        throw InvalidInput("bad vertex id '" + std::string(text) + "'");
    std::uint64_t value = 0;
    for (char c : text.substr(1)) {
        if (c < '0' || c > '9') throw InvalidInput("bad vertex id '" + std::string(text) + "'");
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > UINT32_MAX) throw InvalidInput("vertex index overflow in '" + std::string(text) + "'");
    }
    return {text[0] == 'u' ? Side::U : Side::W, static_cast<std::uint32_t>(value)};
}

using VertexSet = std::set<VertexId>;
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline bool includes(const VertexSet& outer, const VertexSet& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

// Immutable bipartite graph. Each side keeps a sorted list of original vertex
// indices; adjacency is stored per side as bitsets over the positions of the
// opposite side.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    // Edges are given as (U position, W position) pairs against the id lists.
    BipartiteGraph(std::vector<std::uint32_t> u_ids, std::vector<std::uint32_t> w_ids,
                   const std::vector<std::pair<std::size_t, std::size_t>>& edges)
        : ids_{std::move(u_ids), std::move(w_ids)} {
        for (const auto& ids : ids_) {
            if (!std::is_sorted(ids.begin(), ids.end()) ||
                std::adjacent_find(ids.begin(), ids.end()) != ids.end())
                throw InvalidInput("vertex ids must be strictly increasing");
        }
        adj_[0].assign(ids_[0].size(), Bits(ids_[1].size()));
        adj_[1].assign(ids_[1].size(), Bits(ids_[0].size()));
        for (auto [u, w] : edges) {
            if (u >= ids_[0].size() || w >= ids_[1].size())
                throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(w) +
                                   ") out of range");
            if (adj_[0][u].test(w))
                throw InvalidInput("duplicate edge (" + std::to_string(u) + ", " + std::to_string(w) + ")");
            adj_[0][u].set(w);
            adj_[1][w].set(u);
        }
    }

    std::size_t size(Side s) const { return ids_[side_slot(s)].size(); }
    std::size_t vertex_count() const { return ids_[0].size() + ids_[1].size(); }
    const std::vector<std::uint32_t>& ids(Side s) const { return ids_[side_slot(s)]; }

    VertexId id_at(Side s, std::size_t pos) const { return {s, ids_[side_slot(s)][pos]}; }

    std::optional<std::size_t> position(VertexId v) const {
        const auto& ids = ids_[side_slot(v.side)];
        auto it = std::lower_bound(ids.begin(), ids.end(), v.index);
        if (it == ids.end() || *it != v.index) return std::nullopt;
        return static_cast<std::size_t>(it - ids.begin());
    }

    bool contains(VertexId v) const { return position(v).has_value(); }

    std::size_t require(VertexId v) const {
        auto p = position(v);
        if (!p) throw InvalidInput("unknown vertex " + v.str());
        return *p;
    }

    // Neighbours of the vertex at `pos` on side `s`, as positions on the opposite side.
    const Bits& row(Side s, std::size_t pos) const { return adj_[side_slot(s)][pos]; }

    std::size_t degree(VertexId v) const { return row(v.side, require(v)).count(); }

    bool adjacent(VertexId a, VertexId b) const {
        if (a.side == b.side) return false;
        return row(a.side, require(a)).test(require(b));
    }

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& r : adj_[0]) m += r.count();
        return m;
    }

    // Sorted (U, W) pairs.
    std::vector<std::pair<VertexId, VertexId>> edges() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        for (std::size_t i = 0; i < adj_[0].size(); ++i)
            for (auto j = adj_[0][i].find_first(); j != Bits::npos; j = adj_[0][i].find_next(j))
                out.emplace_back(id_at(Side::U, i), id_at(Side::W, j));
        return out;
    }

    // Vertices in canonical order: U-side by index, then W-side by index.
    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(vertex_count());
        for (Side s : {Side::U, Side::W})
            for (std::size_t i = 0; i < size(s); ++i) out.push_back(id_at(s, i));
        return out;
    }

    std::vector<VertexId> vertices(Side s) const {
        std::vector<VertexId> out;
        for (std::size_t i = 0; i < size(s); ++i) out.push_back(id_at(s, i));
        return out;
    }

    VertexSet vertex_set() const {
        auto v = vertices();
        return {v.begin(), v.end()};
    }

    // Conversions between VertexSet and per-side position bitsets.
    Bits to_bits(Side s, const VertexSet& members) const {
        Bits b(size(s));
        for (auto v : members)
            if (v.side == s) b.set(require(v));
        return b;
    }

    VertexSet from_bits(Side s, const Bits& b) const {
        VertexSet out;
        for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.insert(id_at(s, i));
        return out;
    }

    // Union of neighbourhoods of the side-`s` positions in `members`.
    Bits neighbor_bits(Side s, const Bits& members) const {
        Bits out(size(opposite(s)));
        for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i)) out |= row(s, i);
        return out;
    }

    bool operator==(const BipartiteGraph&) const = default;

private:
    std::array<std::vector<std::uint32_t>, 2> ids_;
    std::array<std::vector<Bits>, 2> adj_;
};

// Vertex ids u0..u{u_count-1}, w0..w{w_count-1}.
inline BipartiteGraph build_graph(std::size_t u_count, std::size_t w_count,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::uint32_t> u(u_count), w(w_count);
    for (std::size_t i = 0; i < u_count; ++i) u[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < w_count; ++i) w[i] = static_cast<std::uint32_t>(i);
    return BipartiteGraph(std::move(u), std::move(w), edges);
}

inline VertexSet neighbors(const BipartiteGraph& g, VertexId v) {
    return g.from_bits(opposite(v.side), g.row(v.side, g.require(v)));
}

inline VertexSet set_neighborhood(const BipartiteGraph& g, const VertexSet& s) {
    VertexSet out;
    for (Side side : {Side::U, Side::W}) {
        auto n = g.from_bits(opposite(side), g.neighbor_bits(side, g.to_bits(side, s)));
        out.insert(n.begin(), n.end());
    }
    return out;
}

inline VertexSet second_neighborhood(const BipartiteGraph& g, VertexId x) {
    std::size_t p = g.require(x);
    return g.from_bits(x.side, g.neighbor_bits(opposite(x.side), g.row(x.side, p)));
}

inline BipartiteGraph induced_subgraph(const BipartiteGraph& g, const VertexSet& keep) {
    std::array<std::vector<std::size_t>, 2> kept;
    for (auto v : keep) kept[side_slot(v.side)].push_back(g.require(v));
    std::array<std::vector<std::uint32_t>, 2> ids;
    for (Side s : {Side::U, Side::W})
        for (auto p : kept[side_slot(s)]) ids[side_slot(s)].push_back(g.ids(s)[p]);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < kept[0].size(); ++i)
        for (std::size_t j = 0; j < kept[1].size(); ++j)
            if (g.row(Side::U, kept[0][i]).test(kept[1][j])) edges.emplace_back(i, j);
    return BipartiteGraph(std::move(ids[0]), std::move(ids[1]), edges);
}

inline VertexSet non_isolated_vertices(const BipartiteGraph& g) {
    VertexSet out;
    for (auto v : g.vertices())
        if (g.degree(v) > 0) out.insert(v);
    return out;
}

// Breadth-first layers L0 = {x}, L1 = N(x), ...; unreachable vertices are omitted.
inline std::vector<VertexSet> distance_layers(const BipartiteGraph& g, VertexId x) {
    std::array<Bits, 2> seen{Bits(g.size(Side::U)), Bits(g.size(Side::W))};
    Side side = x.side;
    Bits frontier(g.size(side));
    frontier.set(g.require(x));
    seen[side_slot(side)] |= frontier;
    std::vector<VertexSet> layers;
    while (frontier.any()) {
        layers.push_back(g.from_bits(side, frontier));
        Bits next = g.neighbor_bits(side, frontier) - seen[side_slot(opposite(side))];
        side = opposite(side);
        seen[side_slot(side)] |= next;
        frontier = std::move(next);
    }
    return layers;
}

inline std::string to_string(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto v : s) {
        if (!first) out += ", ";
        out += v.str();
        first = false;
    }
    return out + "}";
}

}  // namespace frankl
