// frankl: command-line front end.
//
// Exit codes: 0 ok, 1 counterexample or failed validation, 2 bad input or
// arguments, 3 class precondition unmet, 4 internal guarantee violated.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "frankl/frankl.hpp"

using namespace frankl;

namespace {

enum Exit { kOk = 0, kViolation = 1, kBadInput = 2, kPrecondition = 3, kInternal = 4 };

struct Outcome {
    int code = kOk;
    Json json;                        // printed when text is empty
    std::string text;
};

struct Context {
    std::string digest_input;         // concatenated input files, for the ledger
    std::optional<std::uint64_t> seed;
};

std::string read_file(const std::string& path, Context& ctx) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InvalidInput("cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    ctx.digest_input += ss.str();
    return ss.str();
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

Probability parse_probability(const std::string& text) {
    auto slash = text.find('/');
    std::uint64_t num = 0, den = 1;
    try {
        if (slash == std::string::npos) {
            num = detail::parse_unsigned(text, 0, UINT64_MAX);
        } else {
            num = detail::parse_unsigned(text.substr(0, slash), 0, UINT64_MAX);
            den = detail::parse_unsigned(text.substr(slash + 1), 0, UINT64_MAX);
        }
    } catch (const ParseError&) {
        throw InvalidInput("probability must be written n/d, got '" + text + "'");
    }
    if (den == 0 || num > den) throw InvalidInput("probability " + text + " is not in [0, 1]");
    return {num, den};
}

Rational parse_rational(const std::string& text) {
    auto p = text.find('/');
    try {
        if (p == std::string::npos) return Rational(BigInt(detail::parse_unsigned(text, 0, UINT64_MAX)));
        BigInt n(detail::parse_unsigned(text.substr(0, p), 0, UINT64_MAX));
        BigInt d(detail::parse_unsigned(text.substr(p + 1), 0, UINT64_MAX));
        if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
        return Rational(n, d);
    } catch (const ParseError&) {
        throw InvalidInput("expected a non-negative rational n/d, got '" + text + "'");
    }
}

std::vector<Side> sides_of(const std::string& s) {
    if (s == "u") return {Side::U};
    if (s == "w") return {Side::W};
    return {Side::U, Side::W};
}

std::string side_name(Side s) { return s == Side::U ? "U" : "W"; }

// ------------------------------------------------------------------ count

Outcome cmd_count(Context& ctx, const std::string& file) {
    auto g = parse_graph(read_file(file, ctx));
    return {kOk, to_json(mss_report(g)), {}};
}

// ----------------------------------------------------------------- verify

Outcome cmd_verify(Context& ctx, const std::string& file, bool general) {
    auto text = read_file(file, ctx);
    BipartiteGraph g;
    Json out = Json::object();
    if (general) {
        std::istringstream in(text);
        auto gg = parse_general_graph(in);
        auto col = two_color(gg);
        out["bipartite"] = col.bipartite;
        if (!col.bipartite) {
            // Every vertex of an odd cycle lies in no stable set with one of
            // its neighbours, so two adjacent rare vertices always exist.
            Json cyc = Json::array();
            for (auto v : col.odd_cycle) cyc.push_back(v);
            out["odd_cycle"] = std::move(cyc);
            out["holds"] = true;
            return {kOk, std::move(out), {}};
        }
        std::vector<VertexId> mapping;
        g = to_bipartite(gg, col, &mapping);
        Json map = Json::object();
        for (std::size_t v = 0; v < mapping.size(); ++v) map[std::to_string(v)] = mapping[v].str();
        out["vertex_map"] = std::move(map);
    } else {
        g = parse_graph(text);
    }
    auto report = mss_report(g);
    auto verdict = check_conjecture(g, report);
    Json vj = to_json(verdict);
    for (auto& [k, v] : vj.items()) out[k] = v;
    out["total"] = report.total.str();
    auto pair = g.edge_count() ? adjacent_rare_pair(g, report) : std::nullopt;
    out["adjacent_rare_pair"] = pair ? Json::array({pair->first.str(), pair->second.str()}) : Json(nullptr);
    return {verdict.holds ? kOk : kViolation, std::move(out), {}};
}

// ---------------------------------------------------------------- certify

struct Produced {
    Side side;
    std::string source;
    Certificate cert;
};

// Generic scans on the reduced graph, then the class drivers, then counting.
std::optional<Produced> certify_auto(const BipartiteGraph& h, Side target) {
    if (auto c = find_onelem(h, target)) return Produced{target, "onelem", *c};
    if (auto c = find_twolem(h, target)) return Produced{target, "twolem", *c};
    if (auto c = find_vaughan_config(h, target)) return Produced{target, "vaughan", *c};
    if (is_chordal_bipartite(h).member) {
        auto both = certify_chordal_bipartite(h);
        return Produced{target, "chordal", target == Side::U ? both.u_side : both.w_side};
    }
    if (is_subcubic(h).member) return Produced{target, "subcubic", certify_subcubic(h, target)};
    if (is_series_parallel(h).member) return Produced{target, "sp", certify_series_parallel(h, target)};
    if (auto c = counted_certificate(mss_report(h), h, target)) return Produced{target, "counted", *c};
    return std::nullopt;
}

Outcome cmd_certify(Context& ctx, const std::string& file, const std::string& cls, const std::string& side,
                    bool check, const std::string& cert_file) {
    auto text = read_file(file, ctx);
    BipartiteGraph g;
    std::optional<CircularModel> model;
    if (cls == "circular") {
        model = parse_model(text);
        g = model_to_graph(*model);
    } else {
        g = parse_graph(text);
    }
    Json out = Json::object();
    out["class"] = cls;

    if (!cert_file.empty()) {
        Certificate c;
        try {
            c = certificate_from_json(Json::parse(read_file(cert_file, ctx)));
        } catch (const Json::exception& e) {
            throw InvalidInput(std::string("certificate: ") + e.what());
        }
        bool ok = validate_certificate(g, c);
        out["certificate"] = to_json(c);
        out["valid"] = ok;
        return {ok ? kOk : kViolation, std::move(out), {}};
    }

    std::vector<Produced> produced;
    auto targets = sides_of(side);
    if (cls == "circular") {
        for (auto t : targets) produced.push_back({t, "circular", certify_circular(*model, t)});
    } else if (cls == "chordal") {
        auto both = certify_chordal_bipartite(g);
        for (auto t : targets) produced.push_back({t, "chordal", t == Side::U ? both.u_side : both.w_side});
    } else if (cls == "subcubic" || cls == "sp") {
        if (g.edge_count() == 0) throw PreconditionError(cls + " driver needs at least one edge");
        auto verdict = cls == "sp" ? is_series_parallel(g) : is_subcubic(g);
        if (!verdict.member) {
            out["recognition"] = to_json(verdict);
            std::cout << out.dump(2) << '\n';
            throw PreconditionError("graph is not " + std::string(cls == "sp" ? "series-parallel" : "subcubic"));
        }
        // Rarity in the reduced graph lifts to g; isolated vertices do not matter.
        auto red = reduce(g);
        out["reduction"] = to_json(red.log);
        auto h = strip_isolated(red.graph);
        for (auto t : targets)
            produced.push_back({t, cls, cls == "sp" ? certify_series_parallel(h, t) : certify_subcubic(h, t)});
    } else {
        auto red = reduce(g);
        out["reduction"] = to_json(red.log);
        if (g.edge_count() == 0) {
            // Edgeless graphs satisfy the conjecture by convention; nothing to certify.
            out["edgeless"] = true;
        } else {
            auto h = strip_isolated(red.graph);
            for (auto t : targets) {
                auto p = certify_auto(h, t);
                if (!p) {
                    // No rare vertex on this side: a counterexample.
                    out["counterexample_side"] = side_name(t);
                    out["graph"] = serialize_graph(g);
                    return {kViolation, std::move(out), {}};
                }
                produced.push_back(std::move(*p));
            }
        }
    }

    std::optional<MssReport> report;
    if (check) report = mss_report(g);
    bool all_valid = true;
    Json certs = Json::array();
    for (const auto& p : produced) {
        Json entry{{"side", side_name(p.side)}, {"source", p.source}, {"certificate", to_json(p.cert)}};
        if (check) {
            bool ok = validate_certificate(g, *report, p.cert);
            entry["valid"] = ok;
            all_valid = all_valid && ok;
        }
        certs.push_back(std::move(entry));
    }
    out["certificates"] = std::move(certs);
    if (check) out["all_valid"] = all_valid;
    return {all_valid ? kOk : kInternal, std::move(out), {}};
}

// ---------------------------------------------------------------- convert

Json labels_json(const LabeledIncidenceGraph& lg) {
    Json elements = Json::object(), members = Json::object();
    for (std::size_t i = 0; i < lg.element_of.size(); ++i) elements[u_vertex(static_cast<std::uint32_t>(i)).str()] = lg.element_of[i];
    for (std::size_t j = 0; j < lg.member_of.size(); ++j)
        members[w_vertex(static_cast<std::uint32_t>(j)).str()] = serialize_member(lg.member_of[j]);
    return Json{{"inserted_empty", lg.inserted_empty}, {"elements", std::move(elements)}, {"members", std::move(members)}};
}

Outcome cmd_convert(Context& ctx, const std::string& direction, const std::string& file, const std::string& side,
                    const std::string& sidecar) {
    auto text = read_file(file, ctx);
    if (direction == "f2g") {
        auto lg = family_to_graph(parse_family(text));
        auto labels = labels_json(lg);
        std::string graph = serialize_graph(lg.graph);
        if (!sidecar.empty()) {
            std::ofstream out(sidecar);
            if (!out) throw InvalidInput("cannot write '" + sidecar + "'");
            out << labels.dump(2) << '\n';
            return {kOk, {}, graph};
        }
        return {kOk, {}, "# labels: " + labels.dump() + "\n" + graph};
    }
    auto g = parse_graph(text);
    if (g.edge_count() == 0) throw PreconditionError("edgeless graph gives the excluded family {∅}");
    return {kOk, {}, serialize_family(graph_to_family(g, side == "w" ? Side::W : Side::U))};
}

// ----------------------------------------------------------------- reduce

Outcome cmd_reduce(Context& ctx, const std::string& file) {
    auto g = parse_graph(read_file(file, ctx));
    auto red = reduce(g);
    Json ids = Json::object();
    ids["u"] = ids_json(red.graph.vertices(Side::U));
    ids["w"] = ids_json(red.graph.vertices(Side::W));
    return {kOk, Json{{"graph", serialize_graph(red.graph)}, {"ids", std::move(ids)}, {"log", to_json(red.log)}}, {}};
}

// ------------------------------------------------------------------ close

Outcome cmd_close(Context& ctx, const std::string& file) {
    auto gens = parse_family(read_file(file, ctx));
    return {kOk, {}, serialize_family(union_closure(gens.members()))};
}

// ----------------------------------------------------------------- random

struct MarginRange {
    std::optional<Rational> lo, hi;
    void add(const Rational& r) {
        if (!lo || r < *lo) lo = r;
        if (!hi || r > *hi) hi = r;
    }
    Json json(const std::optional<Rational>& r) const { return r ? Json(to_string(*r)) : Json(nullptr); }
};

Outcome cmd_random(Context& ctx, std::size_t nu, std::size_t nw, const std::string& p_text, std::size_t count,
                   std::uint64_t seed, const std::string& delta_text) {
    ctx.seed = seed;
    auto p = parse_probability(p_text);
    auto delta = parse_rational(delta_text);
    Rational bound = Rational(1, 2) + delta;
    std::size_t holding = 0, delta_holding = 0, edgeless = 0;
    MarginRange margins;
    Json violations = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
        auto g = random_bipartite(nu, nw, p, seed, i);
        auto v = check_conjecture(g);
        if (v.holds) ++holding;
        else violations.push_back({{"index", i}, {"graph", serialize_graph(g)}});
        if (g.edge_count() == 0) {
            ++edgeless;
            ++delta_holding;
            continue;
        }
        if (v.margin <= bound) ++delta_holding;
        margins.add(v.margin);
    }
    Json out{{"generator", kGeneratorName},
             {"nu", nu},
             {"nw", nw},
             {"p", std::to_string(p.num) + "/" + std::to_string(p.den)},
             {"count", count},
             {"seed", seed},
             {"delta", to_string(delta)},
             {"holding", holding},
             {"delta_holding", delta_holding},
             {"edgeless", edgeless},
             {"min_margin", margins.json(margins.lo)},
             {"max_margin", margins.json(margins.hi)},
             {"violations", violations}};
    return {violations.empty() ? kOk : kViolation, std::move(out), {}};
}

// ------------------------------------------------------------- exhaustive

Outcome cmd_exhaustive(std::size_t max_vertices, std::size_t cap) {
    if (max_vertices > cap)
        throw InvalidInput("--max-vertices " + std::to_string(max_vertices) + " exceeds the cap " + std::to_string(cap));
    std::uint64_t graphs = 0, checked = 0, odd = 0, edgeless = 0;
    MarginRange margins;
    Json violations = Json::array(), per_order = Json::array();
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
        std::uint64_t order_checked = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            ++graphs;
            if (mask == 0) {
                ++edgeless;
                continue;
            }
            GeneralGraph gg{n, {}};
            for (std::size_t k = 0; k < slots.size(); ++k)
                if (mask >> k & 1u) gg.edges.push_back(slots[k]);
            auto col = two_color(gg);
            if (!col.bipartite) {
                ++odd;
                continue;
            }
            auto g = to_bipartite(gg, col);
            auto v = check_conjecture(g);
            ++checked;
            ++order_checked;
            margins.add(v.margin);
            if (!v.holds) violations.push_back({{"vertices", n}, {"edge_mask", mask}, {"graph", serialize_graph(g)}});
        }
        per_order.push_back({{"vertices", n}, {"checked", order_checked}});
    }
    Json out{{"max_vertices", max_vertices},
             {"labeled_graphs", graphs},
             {"checked", checked},
             {"odd_cycle_skipped", odd},
             {"edgeless_skipped", edgeless},
             {"per_order", per_order},
             {"violations", violations.size()},
             {"violating_graphs", violations},
             {"min_margin", margins.json(margins.lo)}};
    return {violations.empty() ? kOk : kViolation, std::move(out), {}};
}

void append_ledger(const std::string& path, const std::string& command, const Context& ctx, const Outcome& o,
                   double seconds) {
    Json rec{{"command", command},
             {"input_sha256", ctx.digest_input.empty() ? Json(nullptr) : Json(sha256_hex(ctx.digest_input))},
             {"seed", ctx.seed ? Json(*ctx.seed) : Json(nullptr)},
             {"exit_code", o.code},
             {"result", o.text.empty() ? o.json : Json(o.text)},
             {"wall_time_s", seconds}};
    std::ofstream out(path, std::ios::app);
    if (!out) throw InvalidInput("cannot append to ledger '" + path + "'");
    out << rec.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal stable sets, union-closed families and rare-vertex certificates"};
    app.require_subcommand(1);
    std::string ledger;
    app.add_option("--ledger", ledger, "Append a JSON-lines run record to this file");

    std::string file, cls = "auto", side = "both", cert_file, direction, sidecar, p_text = "1/2", delta_text = "0";
    bool general = false, check = false;
    std::size_t nu = 0, nw = 0, count = 1, max_vertices = 0, cap = 7;
    std::uint64_t seed = 0;

    auto* count_cmd = app.add_subcommand("count", "Count maximal stable sets and memberships");
    count_cmd->add_option("graph", file, "Graph file ('-' for stdin)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check the conjecture on one graph");
    verify_cmd->add_option("graph", file, "Graph file")->required();
    verify_cmd->add_flag("--general", general, "Input is a general graph ('graph n' / 'e a b')");

    auto* certify_cmd = app.add_subcommand("certify", "Produce rare-vertex certificates");
    certify_cmd->add_option("input", file, "Graph file, or circular model for --class circular")->required();
    certify_cmd->add_option("--class", cls)->check(CLI::IsMember({"auto", "chordal", "subcubic", "sp", "circular"}));
    certify_cmd->add_option("--side", side)->check(CLI::IsMember({"u", "w", "both"}));
    certify_cmd->add_flag("--check", check, "Validate every certificate by enumeration");
    certify_cmd->add_option("--certificate", cert_file, "Validate this certificate JSON instead of producing one");

    auto* convert_cmd = app.add_subcommand("convert", "Family <-> graph");
    convert_cmd->add_option("direction", direction)->required()->check(CLI::IsMember({"f2g", "g2f"}));
    convert_cmd->add_option("input", file)->required();
    std::string conv_side = "u";
    convert_cmd->add_option("--side", conv_side, "Side for g2f")->check(CLI::IsMember({"u", "w"}));
    convert_cmd->add_option("--sidecar", sidecar, "Write f2g label maps here instead of a comment line");

    auto* reduce_cmd = app.add_subcommand("reduce", "Delete vertices whose neighbourhood is a union of others");
    reduce_cmd->add_option("graph", file)->required();

    auto* close_cmd = app.add_subcommand("close", "Union-closure of a list of generators");
    close_cmd->add_option("family", file)->required();

    auto* random_cmd = app.add_subcommand("random", "Seeded random corpus summary");
    random_cmd->add_option("--nu", nu)->required();
    random_cmd->add_option("--nw", nw)->required();
    random_cmd->add_option("--p", p_text, "Edge probability n/d");
    random_cmd->add_option("--count", count);
    random_cmd->add_option("--seed", seed);
    random_cmd->add_option("--delta", delta_text, "Margin slack n/d");

    auto* exhaustive_cmd = app.add_subcommand("exhaustive", "All labeled bipartite graphs up to a size");
    exhaustive_cmd->add_option("--max-vertices", max_vertices)->required();
    exhaustive_cmd->add_option("--cap", cap, "Safety cap on --max-vertices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    Context ctx;
    Outcome outcome;
    auto start = std::chrono::steady_clock::now();
    try {
        if (*count_cmd) outcome = cmd_count(ctx, file);
        else if (*verify_cmd) outcome = cmd_verify(ctx, file, general);
        else if (*certify_cmd) outcome = cmd_certify(ctx, file, cls, side, check, cert_file);
        else if (*convert_cmd) outcome = cmd_convert(ctx, direction, file, conv_side, sidecar);
        else if (*reduce_cmd) outcome = cmd_reduce(ctx, file);
        else if (*close_cmd) outcome = cmd_close(ctx, file);
        else if (*random_cmd) outcome = cmd_random(ctx, nu, nw, p_text, count, seed, delta_text);
        else if (*exhaustive_cmd) outcome = cmd_exhaustive(max_vertices, cap);
    } catch (const PreconditionError& e) {
        std::cerr << "frankl: precondition: " << e.what() << '\n';
        outcome = {kPrecondition, Json{{"error", e.what()}}, {}};
    } catch (const GuaranteeViolation& e) {
        std::cerr << "frankl: internal guarantee violated: " << e.what() << '\n';
        outcome = {kInternal, Json{{"error", e.what()}}, {}};
    } catch (const InvalidInput& e) {
        std::cerr << "frankl: " << e.what() << '\n';
        outcome = {kBadInput, Json{{"error", e.what()}}, {}};
    } catch (const std::exception& e) {
        std::cerr << "frankl: " << e.what() << '\n';
        outcome = {kInternal, Json{{"error", e.what()}}, {}};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool failed = outcome.code == kBadInput || outcome.code == kPrecondition ||
                  (outcome.code == kInternal && outcome.json.contains("error"));
    if (!failed) {
        if (!outcome.text.empty()) std::cout << outcome.text;
        else std::cout << outcome.json.dump(2) << '\n';
    }

    if (!ledger.empty()) {
        std::string command;
        for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);
        try {
            append_ledger(ledger, command, ctx, outcome, seconds);
        } catch (const std::exception& e) {
            std::cerr << "frankl: " << e.what() << '\n';
            return kBadInput;
        }
    }
    return outcome.code;
}
