#pragma once

// Bipartitioned circular interval graphs from an explicit geometric model.
//
// Angles are integer tenths of a degree in [0, 3600). An arc runs clockwise
// (increasing angle) from `start` to `end` and is closed; start == end is a
// single point. Two points are adjacent when some arc contains both and their
// colours differ.

#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frankl/certify.hpp"
#include "frankl/graph.hpp"
#include "frankl/text_io.hpp"

namespace frankl {

inline constexpr int kFullCircle = 3600;

struct CircularPoint {
    std::string name;
    int angle = 0;
    Side side = Side::U;

    bool operator==(const CircularPoint&) const = default;
};

struct CircularArc {
    int start = 0;
    int end = 0;

    bool operator==(const CircularArc&) const = default;
};

struct CircularModel {
    std::vector<CircularPoint> points;
    std::vector<CircularArc> arcs;

    bool operator==(const CircularModel&) const = default;
};

inline int circle_mod(int a, int m = kFullCircle) { return ((a % m) + m) % m; }

inline bool arc_contains(const CircularArc& a, int angle) {
    return circle_mod(angle - a.start) <= circle_mod(a.end - a.start);
}

inline void validate_model(const CircularModel& m) {
    std::set<int> angles;
    std::set<std::string> names;
    for (const auto& p : m.points) {
        if (p.angle < 0 || p.angle >= kFullCircle) throw InvalidInput("point " + p.name + ": angle out of range");
        if (!angles.insert(p.angle).second) throw InvalidInput("point " + p.name + ": angle already used");
        if (!names.insert(p.name).second) throw InvalidInput("point name " + p.name + " repeated");
    }
    for (const auto& a : m.arcs)
        if (a.start < 0 || a.start >= kFullCircle || a.end < 0 || a.end >= kFullCircle)
            throw InvalidInput("arc endpoint out of range");
}

// Points of each colour are numbered in model order: the k-th U-point is u<k>.
inline VertexId model_vertex(const CircularModel& m, std::size_t point) {
    std::uint32_t k = 0;
    for (std::size_t i = 0; i < point; ++i)
        if (m.points[i].side == m.points[point].side) ++k;
    return {m.points[point].side, k};
}

inline std::size_t model_point(const CircularModel& m, VertexId v) {
    for (std::size_t i = 0; i < m.points.size(); ++i)
        if (m.points[i].side == v.side && model_vertex(m, i) == v) return i;
    throw InvalidInput("vertex " + v.str() + " not in model");
}

inline BipartiteGraph model_to_graph(const CircularModel& m) {
    validate_model(m);
    std::vector<std::size_t> pos(m.points.size());
    std::size_t counts[2] = {0, 0};
    for (std::size_t i = 0; i < m.points.size(); ++i) pos[i] = counts[side_slot(m.points[i].side)]++;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& arc : m.arcs)
        for (std::size_t i = 0; i < m.points.size(); ++i) {
            if (m.points[i].side != Side::U || !arc_contains(arc, m.points[i].angle)) continue;
            for (std::size_t j = 0; j < m.points.size(); ++j)
                if (m.points[j].side == Side::W && arc_contains(arc, m.points[j].angle)) edges.emplace(pos[i], pos[j]);
        }
    return build_graph(counts[0], counts[1], {edges.begin(), edges.end()});
}

// Lemma-two certificate centred at x. For each neighbour v pick the first arc
// I_v holding x and v. If two of these arcs cover the circle their owners are
// the witnesses; otherwise take p = midpoint of the uncovered gap and use the
// first neighbours of x met clockwise and counterclockwise from p.
inline Certificate certify_circular(const CircularModel& m, VertexId x) {
    auto g = model_to_graph(m);
    if (!g.contains(x)) throw InvalidInput("vertex " + x.str() + " not in model");
    auto nbrs = neighbors(g, x);
    if (nbrs.empty()) throw PreconditionError("certify_circular: " + x.str() + " is isolated");
    int ax = m.points[model_point(m, x)].angle;

    struct Reach {
        VertexId v;
        int angle;
        std::size_t arc;
        int cw, ccw;
    };
    std::vector<Reach> reach;
    for (auto v : nbrs) {
        int av = m.points[model_point(m, v)].angle;
        std::size_t k = 0;
        while (!(arc_contains(m.arcs[k], ax) && arc_contains(m.arcs[k], av))) ++k;
        const auto& a = m.arcs[k];
        reach.push_back({v, av, k, circle_mod(a.end - ax), circle_mod(ax - a.start)});
    }
    std::size_t by_cw = 0, by_ccw = 0;
    for (std::size_t i = 1; i < reach.size(); ++i) {
        if (reach[i].cw > reach[by_cw].cw) by_cw = i;
        if (reach[i].ccw > reach[by_ccw].ccw) by_ccw = i;
    }

    VertexId y, z;
    nlohmann::ordered_json aux;
    if (reach[by_cw].cw + reach[by_ccw].ccw >= kFullCircle) {
        y = reach[by_cw].v;
        z = reach[by_ccw].v;
        aux["branch"] = "cover";
        aux["arcs"] = {reach[by_cw].arc, reach[by_ccw].arc};
    } else {
        // Work in half-tenths so the gap midpoint is an integer.
        constexpr int kDoubled = 2 * kFullCircle;
        int gap = kFullCircle - reach[by_cw].cw - reach[by_ccw].ccw;
        int p = circle_mod(2 * (ax + reach[by_cw].cw) + gap, kDoubled);
        std::size_t first_cw = 0, first_ccw = 0;
        for (std::size_t i = 1; i < reach.size(); ++i) {
            if (circle_mod(2 * reach[i].angle - p, kDoubled) < circle_mod(2 * reach[first_cw].angle - p, kDoubled))
                first_cw = i;
            if (circle_mod(p - 2 * reach[i].angle, kDoubled) < circle_mod(p - 2 * reach[first_ccw].angle, kDoubled))
                first_ccw = i;
        }
        y = reach[first_cw].v;
        z = reach[first_ccw].v;
        aux["branch"] = "gap";
        aux["gap_point_half_tenths"] = p;
    }

    VertexSet cover = set_union(neighbors(g, y), neighbors(g, z));
    if (!includes(cover, second_neighborhood(g, x)))
        throw GuaranteeViolation("certify_circular: N²(" + x.str() + ") not covered by N(" + y.str() + ") ∪ N(" + z.str() + ")");
    Certificate c = y == z ? onelem_certificate(x, y) : twolem_certificate(x, y, z);
    c.aux = std::move(aux);
    return c;
}

// Centre at the first non-isolated vertex opposite `target`.
inline Certificate certify_circular(const CircularModel& m, Side target) {
    auto g = model_to_graph(m);
    for (auto x : g.vertices(opposite(target)))
        if (g.degree(x) > 0) return certify_circular(m, x);
    throw PreconditionError("certify_circular: no non-isolated vertex opposite the target side");
}

// Model text format:
//   point <name> <angle-tenths> <U|W>
//   arc <start-tenths> <end-tenths>
inline CircularModel parse_model(std::istream& in) {
    CircularModel m;
    for (const auto& l : detail::read_lines(in)) {
        if (l.tokens[0] == "point" && l.tokens.size() == 4) {
            CircularPoint p;
            p.name = l.tokens[1];
            p.angle = static_cast<int>(detail::parse_unsigned(l.tokens[2], l.number, kFullCircle - 1));
            if (l.tokens[3] == "U") p.side = Side::U;
            else if (l.tokens[3] == "W") p.side = Side::W;
            else throw ParseError(l.number, "colour must be U or W");
            m.points.push_back(std::move(p));
        } else if (l.tokens[0] == "arc" && l.tokens.size() == 3) {
            CircularArc a;
            a.start = static_cast<int>(detail::parse_unsigned(l.tokens[1], l.number, kFullCircle - 1));
            a.end = static_cast<int>(detail::parse_unsigned(l.tokens[2], l.number, kFullCircle - 1));
            m.arcs.push_back(a);
        } else {
            throw ParseError(l.number, "expected 'point <name> <angle> <U|W>' or 'arc <start> <end>'");
        }
    }
    try {
        validate_model(m);
    } catch (const InvalidInput& e) {
        throw ParseError(0, e.what());
    }
    return m;
}

inline CircularModel parse_model(const std::string& text) {
    std::istringstream in(text);
    return parse_model(in);
}

inline std::string serialize_model(const CircularModel& m) {
    std::ostringstream out;
    for (const auto& p : m.points) out << "point " << p.name << ' ' << p.angle << ' ' << (p.side == Side::U ? 'U' : 'W') << '\n';
    for (const auto& a : m.arcs) out << "arc " << a.start << ' ' << a.end << '\n';
    return out.str();
}

}  // namespace frankl
