#include "catch_amalgamated.hpp"

#include "corpus.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace frankl;
using support::id;
using support::ids;

namespace {

std::map<std::string, std::string> counts_of(const MssReport& r) {
    std::map<std::string, std::string> out;
    for (const auto& [v, c] : r.per_vertex) out[v.str()] = c.str();
    return out;
}

}  // namespace

TEST_CASE("enumerate_mss on fixtures, canonical order", "[mss]") {
    using L = std::vector<VertexSet>;
    CHECK(enumerate_mss(fixtures::p2()) == L{ids({"u0"}), ids({"w0"})});
    CHECK(enumerate_mss(fixtures::p4()) == L{ids({"u0", "u1"}), ids({"u0", "w1"}), ids({"w0", "w1"})});
    CHECK(enumerate_mss(fixtures::c6()) == L{ids({"u0", "u1", "u2"}), ids({"u0", "w1"}), ids({"u1", "w2"}),
                                              ids({"u2", "w0"}), ids({"w0", "w1", "w2"})});
    CHECK(enumerate_mss(build_graph(2, 2, {})) == L{ids({"u0", "u1", "w0", "w1"})});
    CHECK(enumerate_mss(build_graph(0, 0, {})) == L{VertexSet{}});
}

TEST_CASE("enumeration matches the subset oracle", "[mss][oracle]") {
    for (auto g : {fixtures::p2(), fixtures::p3(), fixtures::p4(), fixtures::star3(), fixtures::c6(),
                   fixtures::k33(), fixtures::vaughan_gadget()}) {
        auto got = enumerate_mss(g);
        CHECK(std::set<VertexSet>(got.begin(), got.end()) == oracle::mss(g));
        CHECK(got.size() == oracle::mss(g).size());
    }
    corpus::Rng rng(11);
    for (int n = 0; n < 500; ++n) {
        auto g = corpus::bipartite(rng, 11);
        auto got = enumerate_mss(g);
        std::set<VertexSet> as_set(got.begin(), got.end());
        REQUIRE(as_set.size() == got.size());
        REQUIRE(as_set == oracle::mss(g));
    }
}

TEST_CASE("canonical order does not depend on the trace side", "[mss]") {
    // W smaller than U forces tracing over W; output must still be sorted by U-trace.
    corpus::Rng rng(12);
    for (int n = 0; n < 200; ++n) {
        auto g = corpus::bipartite(rng, 11);
        auto got = enumerate_mss(g);
        for (std::size_t i = 1; i < got.size(); ++i) {
            auto a = g.to_bits(Side::U, got[i - 1]), b = g.to_bits(Side::U, got[i]);
            CHECK(detail::canonical_before(a, b));
        }
    }
}

TEST_CASE("trace_extend", "[mss]") {
    CHECK(trace_extend(fixtures::p4(), ids({"u0", "u1"})) == ids({"u0", "u1"}));
    CHECK_FALSE(trace_extend(fixtures::p4(), ids({"u1"})).has_value());
    CHECK(trace_extend(fixtures::c6(), {}) == ids({"w0", "w1", "w2"}));
    CHECK_THROWS_AS(trace_extend(fixtures::p4(), ids({"w0"})), InvalidInput);

    corpus::Rng rng(13);
    for (int n = 0; n < 200; ++n) {
        auto g = corpus::bipartite(rng, 10);
        auto all = oracle::mss(g);
        std::size_t hits = 0;
        auto us = g.vertices(Side::U);
        for (std::uint32_t mask = 0; mask < (1u << us.size()); ++mask) {
            VertexSet a;
            for (std::size_t i = 0; i < us.size(); ++i)
                if (mask >> i & 1u) a.insert(us[i]);
            if (auto s = trace_extend(g, a)) {
                ++hits;
                CHECK(all.count(*s));
            }
        }
        CHECK(hits == all.size());
    }
}

TEST_CASE("mss_meet", "[mss]") {
    CHECK(mss_meet(fixtures::p4(), ids({"u0", "u1"}), ids({"u0", "w1"})) == ids({"u0", "w1"}));
    CHECK(mss_meet(fixtures::c6(), ids({"u0", "u1", "u2"}), ids({"w0", "w1", "w2"})) == ids({"w0", "w1", "w2"}));
    CHECK_THROWS_AS(mss_meet(fixtures::p4(), ids({"u0"}), ids({"u0", "w1"})), PreconditionError);

    corpus::Rng rng(14);
    for (int n = 0; n < 150; ++n) {
        auto g = corpus::bipartite(rng, 10);
        auto all = oracle::mss(g);
        for (const auto& s : all) {
            CHECK(mss_meet(g, s, s) == s);
            for (const auto& t : all) CHECK(all.count(mss_meet(g, s, t)));
        }
    }
}

TEST_CASE("structural identities of the enumeration", "[mss][property]") {
    corpus::Rng rng(15);
    for (int n = 0; n < 300; ++n) {
        auto g = corpus::bipartite(rng, 12);
        auto sets = enumerate_mss(g);
        std::set<VertexSet> traces;
        for (const auto& s : sets) {
            VertexSet trace;
            for (auto v : s)
                if (v.side == Side::U) trace.insert(v);
            auto rest = set_difference(g.vertex_set(), set_neighborhood(g, trace));
            VertexSet expect = trace;
            for (auto v : rest)
                if (v.side == Side::W) expect.insert(v);
            CHECK(s == expect);
            CHECK(traces.insert(trace).second);
            CHECK(is_maximal_stable(g, s));
        }
        if (g.edge_count() > 0) CHECK(sets.size() >= 2);
    }
}

TEST_CASE("mss_report on fixtures", "[mss]") {
    auto c6 = mss_report(fixtures::c6());
    CHECK(c6.total == 5);
    for (auto v : fixtures::c6().vertices()) CHECK(c6.count(v) == 2);

    auto p4 = mss_report(fixtures::p4());
    CHECK(p4.total == 3);
    CHECK(counts_of(p4) == std::map<std::string, std::string>{{"u0", "2"}, {"u1", "1"}, {"w0", "1"}, {"w1", "2"}});

    auto star = mss_report(fixtures::star3());
    CHECK(star.total == 2);
    for (auto v : fixtures::star3().vertices()) CHECK(star.count(v) == 1);

    CHECK(mss_report(fixtures::p2()).total == 2);
    CHECK(mss_report(fixtures::p3()).total == 2);
    CHECK(mss_report(build_graph(2, 3, {})).total == 1);
    CHECK_THROWS_AS(c6.count(id("u9")), InvalidInput);
}

TEST_CASE("report agrees with oracle counts and count identities hold", "[mss][oracle]") {
    corpus::Rng rng(16);
    for (int n = 0; n < 400; ++n) {
        auto g = corpus::bipartite(rng, 12);
        auto r = mss_report(g);
        auto o = oracle::counts(g);
        REQUIRE(r.total == o.total);
        for (auto v : g.vertices()) {
            REQUIRE(r.count(v) == o.per_vertex.at(v));
            CHECK(r.count(v) <= r.total);
            CHECK(is_rare(r, v) == oracle::rare(o, v));
        }
        for (auto [u, w] : g.edges()) CHECK(r.count(u) + r.count(w) <= r.total);
    }
}

TEST_CASE("counts beyond 64 bits", "[mss]") {
    // 70 disjoint edges: 2^70 maximal stable sets, each vertex in half of them.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < 70; ++i) edges.emplace_back(i, i);
    auto g = build_graph(70, 70, edges);
    auto r = mss_report(g);
    BigInt expect = BigInt(1) << 70;
    CHECK(r.total == expect);
    CHECK(r.count(id("u69")) == expect / 2);
    CHECK(is_rare(r, id("w3")));
    CHECK(r.total.str() == "1180591620717411303424");

    // 25 disjoint copies of C6: 5^25.
    std::vector<std::pair<std::size_t, std::size_t>> cyc;
    for (std::size_t k = 0; k < 25; ++k)
        for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}})
            cyc.emplace_back(3 * k + a, 3 * k + b);
    auto big = mss_report(build_graph(75, 75, cyc));
    BigInt five = 1;
    for (int i = 0; i < 25; ++i) five *= 5;
    CHECK(big.total == five);
    CHECK(big.count(id("w40")) == 2 * five / 5);
}

TEST_CASE("is_rare", "[mss]") {
    auto p4 = mss_report(fixtures::p4());
    CHECK(is_rare(p4, id("u1")));
    CHECK_FALSE(is_rare(p4, id("u0")));
    CHECK(is_rare(mss_report(fixtures::c6()), id("u0")));
    CHECK(is_rare(mss_report(fixtures::p2()), id("u0")));  // 2·1 ≤ 2
    CHECK_THROWS_AS(is_rare(p4, id("w5")), InvalidInput);
}

TEST_CASE("check_conjecture", "[mss]") {
    auto p4 = check_conjecture(fixtures::p4());
    CHECK(p4.holds);
    CHECK(p4.rare_u == support::id_list({"u1"}));
    CHECK(p4.rare_w == support::id_list({"w0"}));
    CHECK(p4.margin == Rational(1, 3));

    auto c6 = check_conjecture(fixtures::c6());
    CHECK(c6.holds);
    CHECK(c6.rare_u == support::id_list({"u0", "u1", "u2"}));
    CHECK(c6.rare_w == support::id_list({"w0", "w1", "w2"}));
    CHECK(c6.margin == Rational(2, 5));

    auto empty = check_conjecture(build_graph(2, 2, {}));
    CHECK(empty.holds);
    CHECK(empty.rare_u.size() == 2);
    CHECK(empty.rare_w.size() == 2);
    CHECK(empty.margin == 1);
}

TEST_CASE("conjecture forms agree on connected graphs", "[mss][property]") {
    corpus::Rng rng(17);
    int connected = 0;
    for (int n = 0; n < 600; ++n) {
        auto g = corpus::bipartite(rng, 12);
        if (g.edge_count() == 0 || connected_components(g).size() != 1) continue;
        ++connected;
        auto r = mss_report(g);
        auto v = check_conjecture(g, r);
        CHECK(v.holds == adjacent_rare_pair(g, r).has_value());
        CHECK(v.holds);
        // margin ≤ 1/2 exactly when the verdict holds
        CHECK(v.holds == (v.margin <= Rational(1, 2)));
    }
    CHECK(connected > 100);
}

TEST_CASE("report JSON", "[mss][io]") {
    auto r = mss_report(fixtures::p4());
    auto j = to_json(r);
    CHECK(j.dump() == R"({"total":"3","per_vertex":{"u0":"2","u1":"1","w0":"1","w1":"2"}})");
    auto back = report_from_json(j);
    CHECK(back.total == r.total);
    CHECK(back.per_vertex == r.per_vertex);
    CHECK(to_json(check_conjecture(fixtures::p4())).dump() ==
          R"({"holds":true,"rare_u":["u1"],"rare_w":["w0"],"margin":"1/3"})");
}
