#pragma once

// Text graph format:
//
//   # comment
//   bipartite <nU> <nW>
//   e <u-index> <w-index>
//
// Indices are positions within each side. Serialization writes edges sorted.

#include <istream>
#include <sstream>
#include <string>

#include "frankl/graph.hpp"
#include "frankl/text_io.hpp"

namespace frankl {

inline BipartiteGraph parse_graph(std::istream& in) {
    auto lines = detail::read_lines(in);
    if (lines.empty()) throw ParseError(0, "empty graph file");
    const auto& head = lines.front();
    if (head.tokens.size() != 3 || head.tokens[0] != "bipartite")
        throw ParseError(head.number, "expected 'bipartite <nU> <nW>'");
    auto nu = detail::parse_unsigned(head.tokens[1], head.number);
    auto nw = detail::parse_unsigned(head.tokens[2], head.number);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.tokens.size() != 3 || l.tokens[0] != "e") throw ParseError(l.number, "expected 'e <u> <w>'");
        auto u = detail::parse_unsigned(l.tokens[1], l.number);
        auto w = detail::parse_unsigned(l.tokens[2], l.number);
        if (u >= nu || w >= nw) throw ParseError(l.number, "edge endpoint out of range");
        edges.emplace_back(u, w);
    }
    std::sort(edges.begin(), edges.end());
    if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
        throw ParseError(0, "duplicate edge e " + std::to_string(it->first) + " " + std::to_string(it->second));
    return build_graph(nu, nw, edges);
}

inline BipartiteGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

// Vertices are written by position; a graph with sparse ids (e.g. after
// reduction) is renumbered densely.
inline std::string serialize_graph(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "bipartite " << g.size(Side::U) << ' ' << g.size(Side::W) << '\n';
    for (std::size_t i = 0; i < g.size(Side::U); ++i) {
        const auto& r = g.row(Side::U, i);
        for (auto j = r.find_first(); j != Bits::npos; j = r.find_next(j)) out << "e " << i << ' ' << j << '\n';
    }
    return out.str();
}

// Plain undirected graph used by the `--general` input path:
//
//   graph <n>
//   e <a> <b>
struct GeneralGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline GeneralGraph parse_general_graph(std::istream& in) {
    auto lines = detail::read_lines(in);
    if (lines.empty()) throw ParseError(0, "empty graph file");
    const auto& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "graph") throw ParseError(head.number, "expected 'graph <n>'");
    GeneralGraph g;
    g.n = detail::parse_unsigned(head.tokens[1], head.number);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.tokens.size() != 3 || l.tokens[0] != "e") throw ParseError(l.number, "expected 'e <a> <b>'");
        auto a = detail::parse_unsigned(l.tokens[1], l.number);
        auto b = detail::parse_unsigned(l.tokens[2], l.number);
        if (a >= g.n || b >= g.n) throw ParseError(l.number, "edge endpoint out of range");
        if (a == b) throw ParseError(l.number, "loops are not allowed");
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw ParseError(0, "duplicate edge");
    return g;
}

struct TwoColoring {
    bool bipartite = true;
    std::vector<int> color;           // 0 = U, 1 = W; valid when bipartite
    std::vector<std::size_t> odd_cycle;  // closed walk witness when not bipartite
};

// BFS 2-colouring; the smallest vertex of each component goes to U.
inline TwoColoring two_color(const GeneralGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.n);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    TwoColoring out;
    out.color.assign(g.n, -1);
    std::vector<std::size_t> parent(g.n, SIZE_MAX);
    for (std::size_t s = 0; s < g.n; ++s) {
        if (out.color[s] != -1) continue;
        out.color[s] = 0;
        std::vector<std::size_t> queue{s};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            auto v = queue[h];
            for (auto w : adj[v]) {
                if (out.color[w] == -1) {
                    out.color[w] = 1 - out.color[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if (out.color[w] == out.color[v]) {
                    // Paths to the BFS root from v and w close an odd cycle.
                    std::vector<std::size_t> pv{v}, pw{w};
                    while (parent[pv.back()] != SIZE_MAX) pv.push_back(parent[pv.back()]);
                    while (parent[pw.back()] != SIZE_MAX) pw.push_back(parent[pw.back()]);
                    while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
                        pv.pop_back();
                        pw.pop_back();
                    }
                    out.bipartite = false;
                    out.odd_cycle = pv;
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) out.odd_cycle.push_back(*it);
                    return out;
                }
            }
        }
    }
    return out;
}

// The bipartite graph of a 2-coloured general graph; vertex k becomes the
// next free index on its colour's side.
inline BipartiteGraph to_bipartite(const GeneralGraph& g, const TwoColoring& c, std::vector<VertexId>* mapping = nullptr) {
    if (!c.bipartite) throw PreconditionError("graph is not bipartite");
    std::vector<std::size_t> pos(g.n);
    std::size_t counts[2] = {0, 0};
    std::vector<VertexId> map(g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
        int col = c.color[v];
        pos[v] = counts[col]++;
        map[v] = {col == 0 ? Side::U : Side::W, static_cast<std::uint32_t>(pos[v])};
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [a, b] : g.edges) {
        if (c.color[a] == 0) edges.emplace_back(pos[a], pos[b]);
        else edges.emplace_back(pos[b], pos[a]);
    }
    if (mapping) *mapping = std::move(map);
    return build_graph(counts[0], counts[1], edges);
}

}  // namespace frankl
