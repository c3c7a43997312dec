#pragma once

// Counter-based edge sampling for reproducible random corpora.
//
// Generator "splitmix64-keyed/1": the 64-bit draw for (seed, graph, edge) is
//   splitmix64(splitmix64(splitmix64(seed) ^ graph) ^ edge)
// and the edge is present iff draw * den < num * 2^64, i.e. with probability
// exactly num/den.

#include <cstdint>

#include "frankl/graph.hpp"

namespace frankl {

inline constexpr const char* kGeneratorName = "splitmix64-keyed/1";

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t keyed_draw(std::uint64_t seed, std::uint64_t graph, std::uint64_t edge) {
    return splitmix64(splitmix64(splitmix64(seed) ^ graph) ^ edge);
}

struct Probability {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

inline bool keyed_bernoulli(std::uint64_t seed, std::uint64_t graph, std::uint64_t edge, Probability p) {
    using u128 = unsigned __int128;
    return static_cast<u128>(keyed_draw(seed, graph, edge)) * p.den < static_cast<u128>(p.num) << 64;
}

// Edge (i, j) has index i * nw + j.
inline BipartiteGraph random_bipartite(std::size_t nu, std::size_t nw, Probability p, std::uint64_t seed,
                                       std::uint64_t graph_index) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t j = 0; j < nw; ++j)
            if (keyed_bernoulli(seed, graph_index, i * nw + j, p)) edges.emplace_back(i, j);
    return build_graph(nu, nw, edges);
}

}  // namespace frankl
