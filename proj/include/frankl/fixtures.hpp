#pragma once

// Small named graphs used across tests, examples and documentation.

#include "frankl/graph.hpp"

namespace frankl::fixtures {

// u0 - w0
inline BipartiteGraph p2() { return build_graph(1, 1, {{0, 0}}); }

// u0 - w0 - u1
inline BipartiteGraph p3() { return build_graph(2, 1, {{0, 0}, {1, 0}}); }

// u0 - w0 - u1 - w1
inline BipartiteGraph p4() { return build_graph(2, 2, {{0, 0}, {1, 0}, {1, 1}}); }

// K_{1,3} with centre w0.
inline BipartiteGraph star3() { return build_graph(3, 1, {{0, 0}, {1, 0}, {2, 0}}); }

// u0 w0 u1 w1 u2 w2
inline BipartiteGraph c6() { return build_graph(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}}); }

inline BipartiteGraph complete(std::size_t nu, std::size_t nw) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t j = 0; j < nw; ++j) edges.emplace_back(i, j);
    return build_graph(nu, nw, edges);
}

inline BipartiteGraph k22() { return complete(2, 2); }
inline BipartiteGraph k33() { return complete(3, 3); }

// Three distinct 3-element neighbourhoods N(w0), N(w1), N(w2) sharing u0.
inline BipartiteGraph vaughan_gadget() {
    return build_graph(4, 3, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {3, 1}, {0, 2}, {2, 2}, {3, 2}});
}

}  // namespace frankl::fixtures
