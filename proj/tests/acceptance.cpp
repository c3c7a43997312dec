// Acceptance run: one PASS/FAIL line per criterion. Ground truth comes from
// the brute-force oracles in oracles.hpp, never from the engine under test.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "corpus.hpp"
#include "frankl/frankl.hpp"
#include "oracles.hpp"

using namespace frankl;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(const char* name, const std::function<Result()>& body) {
    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.pass) ++failures;
    std::printf("%s %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", name, s, r.detail.c_str());
    std::fflush(stdout);
}

struct Shell {
    int code;
    std::string out;
};

Shell run_cli(const std::string& args) {
    std::string cmd = std::string(FRANKL_CLI) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Soundness judged by oracle counts.
bool sound(const Certificate& c, const oracle::Counts& o) {
    if (!well_formed(c)) return false;
    std::size_t rare = 0;
    for (auto w : c.witnesses) {
        auto it = o.per_vertex.find(w);
        if (it == o.per_vertex.end()) return false;
        if (2 * it->second <= o.total) ++rare;
    }
    return c.guarantee == Guarantee::AllRare ? rare == c.witnesses.size() : rare > 0;
}

struct Tally {
    std::size_t graphs = 0, certificates = 0, bad = 0;
    std::string first_bad;

    void check(const BipartiteGraph& g, const Certificate& c, const oracle::Counts& o) {
        ++certificates;
        if (!sound(c, o)) {
            if (!bad++) first_bad = serialize_graph(g) + to_json(c).dump();
        }
    }
    std::string str(const char* name) const {
        std::ostringstream s;
        s << name << ": " << graphs << " graphs, " << certificates << " certificates, " << bad << " unsound; ";
        return s.str();
    }
};

std::string str(const std::set<Member>& m) {
    std::string out = "{";
    for (const auto& x : m) out += "[" + serialize_member(x) + "]";
    return out + "}";
}

}  // namespace

int main() {
    criterion("AC1 fixture exactness", [] {
        struct Case {
            const char* name;
            BipartiteGraph g;
            std::uint64_t total;
            std::map<std::string, std::uint64_t> counts;
        };
        std::vector<Case> cases{
            {"P2", fixtures::p2(), 2, {{"u0", 1}, {"w0", 1}}},
            {"P3", fixtures::p3(), 2, {{"u0", 1}, {"u1", 1}, {"w0", 1}}},
            {"P4", fixtures::p4(), 3, {{"u0", 2}, {"u1", 1}, {"w0", 1}, {"w1", 2}}},
            {"STAR3", fixtures::star3(), 2, {{"u0", 1}, {"u1", 1}, {"u2", 1}, {"w0", 1}}},
            {"C6", fixtures::c6(), 5, {{"u0", 2}, {"u1", 2}, {"u2", 2}, {"w0", 2}, {"w1", 2}, {"w2", 2}}},
        };
        Result r;
        for (const auto& c : cases) {
            auto o = oracle::counts(c.g);
            auto rep = mss_report(c.g);
            bool ok = o.total == c.total && rep.total == c.total;
            for (const auto& [v, n] : c.counts)
                ok = ok && o.per_vertex.at(parse_vertex_id(v)) == n && rep.count(parse_vertex_id(v)) == n;
            ok = ok && enumerate_mss(c.g).size() == c.total;
            if (!ok) r = {false, r.detail + c.name + " mismatch; "};
        }
        if (r.pass) r.detail = "P2=2 P3=2 P4=3 STAR3=2 C6=5, per-vertex counts exact";
        return r;
    });

    criterion("AC2 enumeration equals brute force on 10^4 random graphs (<=12 vertices)", [] {
        corpus::Rng rng(2024);
        std::size_t sets = 0;
        for (int n = 0; n < 10000; ++n) {
            auto g = corpus::bipartite(rng, 12);
            auto got = enumerate_mss(g);
            std::set<VertexSet> as_set(got.begin(), got.end());
            if (as_set.size() != got.size()) return Result{false, "duplicate set at graph " + std::to_string(n)};
            if (as_set != oracle::mss(g)) return Result{false, "mismatch at graph " + std::to_string(n) + ":\n" + serialize_graph(g)};
            sets += got.size();
        }
        return Result{true, std::to_string(sets) + " maximal stable sets compared"};
    });

    criterion("AC3 exhaustive --max-vertices 6 has zero violations", [] {
        auto r = run_cli("exhaustive --max-vertices 6");
        if (r.code != 0) return Result{false, "exit code " + std::to_string(r.code)};
        auto j = Json::parse(r.out);
        // 1 + 2 + 8 + 64 + 1024 + 32768 labeled graphs on 1..6 vertices
        bool ok = j["violations"] == 0 && j["labeled_graphs"] == 33867;
        return Result{ok, "labeled " + j["labeled_graphs"].dump() + ", checked " + j["checked"].dump() +
                              ", violations " + j["violations"].dump() + ", min margin " + j["min_margin"].dump()};
    });

    criterion("AC4 equivalence round trip on 10^3 union-closed families", [] {
        corpus::Rng rng(4);
        for (int n = 0; n < 1000; ++n) {
            std::vector<Member> gens(corpus::uniform(rng, 1, 6));
            for (auto& g : gens) {
                std::set<Element> s;
                auto size = corpus::uniform(rng, 1, 5);
                for (std::size_t k = 0; k < size; ++k) s.insert(static_cast<Element>(corpus::uniform(rng, 1, 8)));
                g.assign(s.begin(), s.end());
            }
            auto expect = oracle::union_closure(gens);
            auto f = union_closure(gens);
            if (std::set<Member>(f.members().begin(), f.members().end()) != expect)
                return Result{false, "closure mismatch at family " + std::to_string(n)};
            auto lg = family_to_graph(f);
            expect.insert(Member{});
            auto o = oracle::counts_via_side(lg.graph, Side::U);
            if (o.total != expect.size())
                return Result{false, "count mismatch at family " + std::to_string(n) + " " + str(expect)};
            // graph -> family, relabelled through the element map
            auto back = graph_to_family(lg.graph, Side::U);
            std::set<Member> relabeled;
            for (const auto& m : back.members()) {
                Member r;
                for (auto i : m) r.push_back(lg.element_of[i]);
                relabeled.insert(r);
            }
            if (relabeled != expect) return Result{false, "round trip mismatch at family " + std::to_string(n)};
            // abundance in f ∪ {∅} vs rarity of the element's U-vertex
            for (auto e : lg.element_of) {
                std::size_t freq = 0;
                for (const auto& m : expect) freq += std::binary_search(m.begin(), m.end(), e);
                bool abundant = 2 * freq >= expect.size();
                if (abundant != oracle::rare(o, lg.vertex_of_element(e)))
                    return Result{false, "abundance/rarity mismatch at family " + std::to_string(n) + " " + str(expect)};
            }
            if (!verify_equivalence(f)) return Result{false, "verify_equivalence false at family " + std::to_string(n)};
        }
        return Result{true, "1000 families"};
    });

    criterion("AC5 certificate soundness (>=10^3 graphs per finder/driver, <=14 vertices)", [] {
        std::string detail;
        bool pass = true;
        auto finish = [&](const Tally& t, const char* name, std::size_t min_certs = 1) {
            detail += t.str(name);
            pass = pass && t.bad == 0 && t.graphs >= 1000 && t.certificates >= min_certs;
            if (t.bad) detail += "first unsound: " + t.first_bad + "; ";
        };

        {
            corpus::Rng rng(51);
            Tally one, two;
            for (int n = 0; n < 1000; ++n) {
                auto g = corpus::bipartite(rng, 14);
                auto o = oracle::counts(g);
                ++one.graphs;
                ++two.graphs;
                for (Side s : {Side::U, Side::W}) {
                    if (auto c = find_onelem(g, s)) one.check(g, *c, o);
                    if (auto c = find_twolem(g, s)) two.check(g, *c, o);
                }
            }
            finish(one, "onelem", 500);
            finish(two, "twolem", 500);
        }
        {
            corpus::Rng rng(52);
            Tally t;
            for (int n = 0; n < 1000; ++n) {
                auto g = n % 2 ? corpus::subcubic(rng, 14) : corpus::bipartite(rng, 14);
                auto h = reduce(g).graph;
                auto o = oracle::counts(g);
                ++t.graphs;
                for (Side s : {Side::U, Side::W})
                    if (auto c = find_vaughan_config(h, s)) t.check(g, *c, o);
            }
            finish(t, "vaughan", 50);
        }
        {
            corpus::Rng rng(53);
            Tally t;
            for (int n = 0; n < 1000; ++n) {
                auto sub = corpus::subdivision(rng, 14);
                ++t.graphs;
                t.check(sub.graph, knill_certificate(sub.graph), oracle::counts(sub.graph));
            }
            finish(t, "knill", 1000);
        }
        {
            corpus::Rng rng(54);
            Tally t;
            while (t.graphs < 1000) {
                auto g = t.graphs % 2 ? corpus::tree(rng, 14) : corpus::convex(rng, 14);
                if (g.edge_count() == 0 || oracle::has_long_chordless_cycle(g)) continue;
                ++t.graphs;
                auto certs = certify_chordal_bipartite(g);
                auto o = oracle::counts(g);
                t.check(g, certs.u_side, o);
                t.check(g, certs.w_side, o);
            }
            finish(t, "chordal", 2000);
        }
        {
            corpus::Rng rng(55);
            Tally t;
            while (t.graphs < 1000) {
                auto g = corpus::subcubic(rng, 14);
                if (g.edge_count() == 0) continue;
                auto h = strip_isolated(reduce(g).graph);
                ++t.graphs;
                auto o = oracle::counts(g);
                for (Side s : {Side::U, Side::W}) t.check(g, certify_subcubic(h, s), o);
            }
            finish(t, "subcubic", 2000);
        }
        {
            corpus::Rng rng(56);
            Tally t;
            while (t.graphs < 1000) {
                auto g = corpus::series_parallel(rng, 14);
                if (g.edge_count() == 0 || oracle::has_k4_minor(g)) continue;
                auto h = strip_isolated(reduce(g).graph);
                ++t.graphs;
                auto o = oracle::counts(g);
                for (Side s : {Side::U, Side::W}) t.check(g, certify_series_parallel(h, s), o);
            }
            finish(t, "series-parallel", 2000);
        }
        {
            corpus::Rng rng(57);
            Tally t;
            while (t.graphs < 1000) {
                auto m = corpus::circular(rng, 14);
                auto g = model_to_graph(m);
                if (g.edge_count() == 0) continue;
                ++t.graphs;
                auto o = oracle::counts(g);
                for (auto x : g.vertices())
                    if (g.degree(x) > 0) t.check(g, certify_circular(m, x), o);
            }
            finish(t, "circular", 2000);
        }
        return Result{pass, detail};
    });

    criterion("AC6 Knill cross-check (|E(H)| <= 12)", [] {
        corpus::Rng rng(6);
        std::size_t instances = 0, max_edges = 0;
        for (int n = 0; n < 600; ++n) {
            auto sub = corpus::subdivision(rng, 19, 12);
            auto family = oracle::edge_union_family(sub.h_edges);
            auto rep = mss_report(sub.graph);
            if (rep.total != family.size())
                return Result{false, "total mismatch on\n" + serialize_graph(sub.graph)};
            for (std::size_t e = 0; e < sub.h_edges.size(); ++e) {
                auto [a, b] = sub.h_edges[e];
                std::uint32_t pair = (1u << a) | (1u << b);
                std::size_t containing = 0;
                for (auto s : family) containing += (s & pair) == pair;
                if (rep.count(u_vertex(static_cast<std::uint32_t>(e))) != containing)
                    return Result{false, "edge count mismatch on\n" + serialize_graph(sub.graph)};
            }
            ++instances;
            max_edges = std::max(max_edges, sub.h_edges.size());
        }
        return Result{max_edges == 12, std::to_string(instances) + " instances, max |E(H)| " + std::to_string(max_edges)};
    });

    criterion("AC7 recognizer agreement on 10^3 graphs (<=10 vertices)", [] {
        corpus::Rng rng(7);
        std::size_t chordal = 0, sp = 0;
        for (int n = 0; n < 1000; ++n) {
            BipartiteGraph g;
            // Sparse graphs and subdivisions supply most of the negatives.
            switch (n % 6) {
                case 0: g = corpus::convex(rng, 10); break;
                case 1: g = corpus::series_parallel(rng, 10); break;
                case 2: case 3: g = corpus::subcubic(rng, 10); break;
                case 4: g = corpus::subdivision(rng, 10).graph; break;
                default: g = corpus::bipartite(rng, 10, 7);
            }
            bool cb = is_chordal_bipartite(g).member;
            if (cb != !oracle::has_long_chordless_cycle(g))
                return Result{false, "chordal disagreement on\n" + serialize_graph(g)};
            auto spv = is_series_parallel(g);
            if (spv.member != !oracle::has_k4_minor(g))
                return Result{false, "series-parallel disagreement on\n" + serialize_graph(g)};
            if (!spv.member && !is_k4_minor_model(g, std::get<K4Minor>(spv.witness)))
                return Result{false, "bad K4 witness on\n" + serialize_graph(g)};
            chordal += cb;
            sp += spv.member;
        }
        // A corpus without negatives would make agreement vacuous.
        bool mixed = chordal < 1000 && sp < 1000;
        return Result{mixed, "1000 graphs, " + std::to_string(chordal) + " chordal bipartite, " + std::to_string(sp) +
                                " series-parallel"};
    });

    criterion("AC8 random --nu 8 --nw 8 --p 1/2 --count 100 --seed 7 --delta 1/10", [] {
        auto r = run_cli("random --nu 8 --nw 8 --p 1/2 --count 100 --seed 7 --delta 1/10");
        if (r.code != 0) return Result{false, "exit code " + std::to_string(r.code)};
        auto j = Json::parse(r.out);
        bool ok = j["holding"] == 100 && j["violations"].empty();
        return Result{ok, "holding " + j["holding"].dump() + "/100, delta-holding " + j["delta_holding"].dump() +
                              ", margins " + j["min_margin"].dump() + ".." + j["max_margin"].dump()};
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
