#pragma once

// Maximal stable sets of bipartite graphs.
//
// A maximal stable set S is determined by its trace A = S ∩ T on one side T:
// S = A ∪ (O \ N(A)) where O is the other side, and the completion is maximal
// exactly when every t in T \ A has a neighbour outside N(A). Enumeration is a
// depth-first search over traces on the smaller side.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frankl/graph.hpp"

namespace frankl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

// Calls visit(trace, covered) once per maximal stable set, where `trace` are
// the chosen positions on `side` and `covered` = N(trace) on the other side.
// The set itself is trace ∪ (other side \ covered).
//
// Vertices are decided in position order, include before exclude, so sets are
// produced in descending order of their membership vector on `side`.
// A branch is cut as soon as an excluded vertex has its whole neighbourhood
// inside `covered`: it could never be dominated. Vertices whose neighbourhood
// is already covered are forced in. Every surviving node has a completion, so
// the search is output-sensitive.
template <class Visit>
class TraceSearch {
public:
    TraceSearch(const BipartiteGraph& g, Side side, Visit& visit)
        : g_(g), side_(side), visit_(visit), n_(g.size(side)), trace_(n_),
          covered_(n_ + 1, Bits(g.size(opposite(side)))) {}

    void run() { dfs(0); }

private:
    void dfs(std::size_t i) {
        if (i == n_) {
            visit_(static_cast<const Bits&>(trace_), static_cast<const Bits&>(covered_[i]));
            return;
        }
        const Bits& nb = g_.row(side_, i);
        trace_.set(i);
        if (nb.is_subset_of(covered_[i])) {
            covered_[i + 1] = covered_[i];
            dfs(i + 1);
            trace_.reset(i);
            return;
        }
        covered_[i + 1] = covered_[i];
        covered_[i + 1] |= nb;
        if (excluded_alive(covered_[i + 1])) dfs(i + 1);
        trace_.reset(i);

        excluded_.push_back(i);
        covered_[i + 1] = covered_[i];
        dfs(i + 1);
        excluded_.pop_back();
    }

    bool excluded_alive(const Bits& cov) const {
        for (auto e : excluded_)
            if (g_.row(side_, e).is_subset_of(cov)) return false;
        return true;
    }

    const BipartiteGraph& g_;
    Side side_;
    Visit& visit_;
    std::size_t n_;
    Bits trace_;
    std::vector<Bits> covered_;
    std::vector<std::size_t> excluded_;
};

inline Side trace_side(const BipartiteGraph& g) {
    return g.size(Side::W) < g.size(Side::U) ? Side::W : Side::U;
}

// True when a precedes b in canonical order: the first U position where the
// two traces differ is in a.
inline bool canonical_before(const Bits& a, const Bits& b) {
    Bits diff = a ^ b;
    auto i = diff.find_first();
    return i != Bits::npos && a.test(i);
}

}  // namespace detail

// Visits every maximal stable set as (U part, W part) position bitsets, in
// unspecified order.
template <class Visit>
void for_each_mss(const BipartiteGraph& g, Visit&& visit) {
    Side side = detail::trace_side(g);
    auto adapter = [&](const Bits& trace, const Bits& covered) {
        Bits rest = ~covered;
        if (side == Side::U) visit(trace, static_cast<const Bits&>(rest));
        else visit(static_cast<const Bits&>(rest), trace);
    };
    detail::TraceSearch<decltype(adapter)> search(g, side, adapter);
    search.run();
}

// All maximal stable sets, ordered by U-side trace: the set whose membership
// vector over u-positions is lexicographically larger (member before
// non-member) comes first. The edgeless graph yields V(g).
inline std::vector<VertexSet> enumerate_mss(const BipartiteGraph& g) {
    std::vector<std::pair<Bits, Bits>> sets;
    for_each_mss(g, [&](const Bits& u, const Bits& w) { sets.emplace_back(u, w); });
    if (detail::trace_side(g) != Side::U)
        std::sort(sets.begin(), sets.end(),
                  [](const auto& a, const auto& b) { return detail::canonical_before(a.first, b.first); });
    std::vector<VertexSet> out;
    out.reserve(sets.size());
    for (const auto& [u, w] : sets) {
        VertexSet s = g.from_bits(Side::U, u);
        auto ws = g.from_bits(Side::W, w);
        s.insert(ws.begin(), ws.end());
        out.push_back(std::move(s));
    }
    return out;
}

inline bool is_stable(const BipartiteGraph& g, const VertexSet& s) {
    Bits u = g.to_bits(Side::U, s), w = g.to_bits(Side::W, s);
    return !g.neighbor_bits(Side::U, u).intersects(w);
}

inline bool is_maximal_stable(const BipartiteGraph& g, const VertexSet& s) {
    Bits u = g.to_bits(Side::U, s), w = g.to_bits(Side::W, s);
    Bits nu = g.neighbor_bits(Side::U, u);
    Bits nw = g.neighbor_bits(Side::W, w);
    if (nu.intersects(w)) return false;
    // Every outside vertex must have a neighbour inside.
    return (u | nw).all() && (w | nu).all();
}

// The completion a ∪ (W \ N(a)) when it is a maximal stable set.
inline std::optional<VertexSet> trace_extend(const BipartiteGraph& g, const VertexSet& a) {
    for (auto v : a)
        if (v.side != Side::U) throw InvalidInput("trace member " + v.str() + " is not on the U-side");
    Bits trace = g.to_bits(Side::U, a);
    Bits cov = g.neighbor_bits(Side::U, trace);
    for (std::size_t i = 0; i < g.size(Side::U); ++i)
        if (!trace.test(i) && g.row(Side::U, i).is_subset_of(cov)) return std::nullopt;
    VertexSet s = a;
    auto rest = g.from_bits(Side::W, ~cov);
    s.insert(rest.begin(), rest.end());
    return s;
}

// (U ∩ S ∩ T) ∪ (W \ N(S ∩ T)), itself a maximal stable set.
inline VertexSet mss_meet(const BipartiteGraph& g, const VertexSet& s, const VertexSet& t) {
    if (!is_maximal_stable(g, s) || !is_maximal_stable(g, t))
        throw PreconditionError("mss_meet: arguments must be maximal stable sets");
    Bits common = g.to_bits(Side::U, s) & g.to_bits(Side::U, t);
    VertexSet out = g.from_bits(Side::U, common);
    auto rest = g.from_bits(Side::W, ~g.neighbor_bits(Side::U, common));
    out.insert(rest.begin(), rest.end());
    return out;
}

struct MssReport {
    BigInt total;
    std::map<VertexId, BigInt> per_vertex;

    const BigInt& count(VertexId v) const {
        auto it = per_vertex.find(v);
        if (it == per_vertex.end()) throw InvalidInput("vertex " + v.str() + " not in report");
        return it->second;
    }
};

// Connected components as vertex sets, in order of their smallest vertex.
inline std::vector<VertexSet> connected_components(const BipartiteGraph& g) {
    std::array<Bits, 2> seen{Bits(g.size(Side::U)), Bits(g.size(Side::W))};
    std::vector<VertexSet> out;
    for (auto start : g.vertices()) {
        auto p = g.require(start);
        if (seen[side_slot(start.side)].test(p)) continue;
        std::array<Bits, 2> comp{Bits(g.size(Side::U)), Bits(g.size(Side::W))};
        std::array<Bits, 2> frontier = comp;
        frontier[side_slot(start.side)].set(p);
        while (frontier[0].any() || frontier[1].any()) {
            comp[0] |= frontier[0];
            comp[1] |= frontier[1];
            Bits nu = g.neighbor_bits(Side::W, frontier[1]) - comp[0];
            Bits nw = g.neighbor_bits(Side::U, frontier[0]) - comp[1];
            frontier = {std::move(nu), std::move(nw)};
        }
        seen[0] |= comp[0];
        seen[1] |= comp[1];
        VertexSet c = g.from_bits(Side::U, comp[0]);
        auto cw = g.from_bits(Side::W, comp[1]);
        c.insert(cw.begin(), cw.end());
        out.push_back(std::move(c));
    }
    return out;
}

namespace detail {

// Direct count on one graph; 64-bit counters suffice because every set is
// visited individually.
inline void count_by_enumeration(const BipartiteGraph& g, std::uint64_t& total,
                                 std::array<std::vector<std::uint64_t>, 2>& per) {
    total = 0;
    per[0].assign(g.size(Side::U), 0);
    per[1].assign(g.size(Side::W), 0);
    for_each_mss(g, [&](const Bits& u, const Bits& w) {
        ++total;
        for (auto i = u.find_first(); i != Bits::npos; i = u.find_next(i)) ++per[0][i];
        for (auto i = w.find_first(); i != Bits::npos; i = w.find_next(i)) ++per[1][i];
    });
}

}  // namespace detail

// Maximal stable sets of a disjoint union are products of those of the
// components, so each component is enumerated on its own and the counts are
// combined exactly.
inline MssReport mss_report(const BipartiteGraph& g) {
    MssReport report;
    report.total = 1;
    struct Part {
        BigInt total;
        std::map<VertexId, BigInt> counts;
    };
    std::vector<Part> parts;
    for (const auto& comp : connected_components(g)) {
        Part part;
        if (comp.size() == 1) {
            part.total = 1;
            part.counts[*comp.begin()] = 1;
        } else {
            auto sub = induced_subgraph(g, comp);
            std::uint64_t total = 0;
            std::array<std::vector<std::uint64_t>, 2> per;
            detail::count_by_enumeration(sub, total, per);
            part.total = total;
            for (Side s : {Side::U, Side::W})
                for (std::size_t i = 0; i < sub.size(s); ++i) part.counts[sub.id_at(s, i)] = per[side_slot(s)][i];
        }
        report.total *= part.total;
        parts.push_back(std::move(part));
    }
    for (const auto& part : parts) {
        BigInt others = report.total / part.total;
        for (const auto& [v, c] : part.counts) report.per_vertex[v] = c * others;
    }
    return report;
}

inline bool is_rare(const MssReport& report, VertexId v) { return 2 * report.count(v) <= report.total; }

struct ConjectureVerdict {
    bool holds = true;
    std::vector<VertexId> rare_u;
    std::vector<VertexId> rare_w;
    // max over sides of (min over the side of count / total)
    Rational margin;
};

inline ConjectureVerdict check_conjecture(const BipartiteGraph& g, const MssReport& report) {
    ConjectureVerdict verdict;
    bool edgeless = g.edge_count() == 0;
    bool have_margin = false;
    for (Side s : {Side::U, Side::W}) {
        auto& rare = s == Side::U ? verdict.rare_u : verdict.rare_w;
        std::optional<Rational> side_min;
        for (auto v : g.vertices(s)) {
            // Edgeless graphs satisfy the conjecture by convention and list every vertex.
            if (edgeless || is_rare(report, v)) rare.push_back(v);
            Rational r(report.count(v), report.total);
            if (!side_min || r < *side_min) side_min = r;
        }
        if (side_min && (!have_margin || *side_min > verdict.margin)) {
            verdict.margin = *side_min;
            have_margin = true;
        }
    }
    verdict.holds = edgeless || (!verdict.rare_u.empty() && !verdict.rare_w.empty());
    return verdict;
}

inline ConjectureVerdict check_conjecture(const BipartiteGraph& g) { return check_conjecture(g, mss_report(g)); }

// First edge (in canonical order) whose endpoints are both rare.
inline std::optional<std::pair<VertexId, VertexId>> adjacent_rare_pair(const BipartiteGraph& g,
                                                                       const MssReport& report) {
    for (auto [u, w] : g.edges())
        if (is_rare(report, u) && is_rare(report, w)) return std::pair{u, w};
    return std::nullopt;
}

}  // namespace frankl
