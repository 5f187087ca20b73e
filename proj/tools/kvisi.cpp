// kvisi: command-line front end for k-visibility representations.
//
// Subcommands: gen, graph, stats, audit, decompose, render, encode, decode,
// search (complete | max-edges | refute), k5, verify.
// Exit codes: 0 success, 1 invariant violation or failed check, 2 usage or
// input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kvisi/bounds.hpp"
#include "kvisi/codec.hpp"
#include "kvisi/engine.hpp"
#include "kvisi/explorer.hpp"
#include "kvisi/io.hpp"
#include "kvisi/layout.hpp"
#include "kvisi/skyscraper.hpp"
#include "kvisi/svg.hpp"
#include "kvisi/verify.hpp"

using namespace kvisi;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("KVISI_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return 1;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        write_text_file(out_path, text.back() == '\n' ? text : text + "\n");
    }
}

// Loads and validates; hard violations are input errors (exit 2).
Representation load_valid_rep(const std::string& path) {
    Representation rep = load_rep_file(path);
    for (const Violation& v : validate(rep)) {
        if (v.warning) {
            std::cerr << "warning: " << v.code << ": " << v.message << "\n";
        } else {
            throw CLI::ValidationError("--rep", v.code + ": " + v.message);
        }
    }
    return rep;
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["property"] = c.property;
    j["family"] = family_name(family_of(c.rep));
    j["n"] = c.n;
    j["k"] = c.k;
    j["edges"] = c.edges;
    j["engine_verified"] = c.engine_verified;
    j["representation"] = to_json(c.rep);
    j["metadata"] = {{"strategy", c.strategy}, {"seed", c.seed}, {"nodes", c.nodes}};
    return j;
}

json report_to_json(const BoundReport& r) {
    json j;
    j["family"] = family_name(r.family);
    j["n"] = r.n;
    j["k"] = r.k;
    j["edges"] = r.edges;
    j["edge_upper"] = rational_to_json(r.edge_upper);
    j["edge_lower_witnessed"] = r.edge_lower_witnessed;
    j["chromatic_used"] = r.chromatic_used;
    if (r.chromatic_bound) j["chromatic_upper"] = *r.chromatic_bound;
    json th;
    th["lower"] = r.thickness_lower_bound;
    if (r.thickness_upper_bound) th["upper"] = *r.thickness_upper_bound;
    j["thickness"] = th;
    j["violations"] = r.violations;
    return j;
}

std::vector<AxisSide> parse_sides(const std::string& csv) {
    std::vector<AxisSide> sides;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token == "pos") sides.push_back(AxisSide::pos);
        else if (token == "neg") sides.push_back(AxisSide::neg);
        else throw CLI::ValidationError("--sides", "expected pos/neg list");
    }
    return sides;
}

std::vector<int> parse_codes(const std::string& csv) {
    std::vector<int> codes;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) codes.push_back(std::stoi(token));
    return codes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-visibility graphs of bar, semi-bar, arc, circle, and semi-arc "
                 "representations"};
    app.require_subcommand(1);

    std::string rep_path, out_path, family_str = "semi_bar";
    int n = 5, k = 0;
    std::uint64_t seed = default_seed();
    std::uint64_t budget = 2'000'000;
    bool ties = false, want_dot = false, want_json = false;
    bool one_bend_flag = false, sightlines = false;
    std::string reading = "plain", codes_csv, sides_csv, level = "full";

    auto* gen = app.add_subcommand("gen", "generate a random representation");
    gen->add_option("--family", family_str, "bar|semi_bar|arc|circle|semi_arc");
    gen->add_option("-n", n, "number of objects");
    gen->add_option("-k", k, "visibility parameter");
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_flag("--ties", ties, "allow tied semi-bar lengths");
    gen->add_option("-o", out_path, "output path");

    auto* graph_cmd = app.add_subcommand("graph", "compute the visibility graph");
    graph_cmd->add_option("--rep", rep_path, "representation JSON")->required();
    graph_cmd->add_flag("--dot", want_dot, "emit DOT");
    graph_cmd->add_flag("--json", want_json, "emit JSON (default)");
    graph_cmd->add_option("-o", out_path, "output path");

    auto* stats_cmd = app.add_subcommand("stats", "stacking statistics and edge counts");
    stats_cmd->add_option("--rep", rep_path, "semi-bar representation JSON")->required();
    int stats_k = -1;
    stats_cmd->add_option("-k", stats_k, "override the representation's k");

    auto* audit_cmd = app.add_subcommand("audit", "bound report for one instance");
    audit_cmd->add_option("--rep", rep_path, "representation JSON")->required();
    audit_cmd->add_option("-o", out_path, "output path");

    auto* dec_cmd = app.add_subcommand("decompose", "planar class decomposition");
    dec_cmd->add_option("--rep", rep_path, "semi-bar representation JSON")->required();
    dec_cmd->add_option("-o", out_path, "output path");

    auto* render_cmd = app.add_subcommand("render", "SVG rendering");
    render_cmd->add_option("--rep", rep_path, "representation JSON")->required();
    render_cmd->add_flag("--one-bend", one_bend_flag, "render the one-bend drawing");
    render_cmd->add_flag("--sightlines", sightlines, "overlay witness sightlines");
    render_cmd->add_option("-o", out_path, "output path");

    auto* enc_cmd = app.add_subcommand("encode", "rotating-line signed code");
    enc_cmd->add_option("--rep", rep_path, "semi-arc representation JSON")->required();

    auto* dec2_cmd = app.add_subcommand("decode", "reconstruct a semi-arc representation");
    dec2_cmd->add_option("--codes", codes_csv, "signed code, e.g. 1,-3,-2")->required();
    dec2_cmd->add_option("--sides", sides_csv, "pos/neg list, e.g. pos,pos,neg")->required();
    dec2_cmd->add_option("-k", k, "visibility parameter for the output");
    dec2_cmd->add_option("-o", out_path, "output path");

    auto* search_cmd = app.add_subcommand("search", "witness searches");
    search_cmd->require_subcommand(1);
    auto* s_complete = search_cmd->add_subcommand("complete", "find a complete graph");
    s_complete->add_option("--family", family_str, "semi_arc|arc|bar")->required();
    s_complete->add_option("-n", n, "vertices")->required();
    s_complete->add_option("-k", k, "visibility parameter");
    s_complete->add_option("--seed", seed, "search seed");
    s_complete->add_option("--budget", budget, "node budget for stochastic search");
    s_complete->add_option("-o", out_path, "output path");
    auto* s_max = search_cmd->add_subcommand("max-edges", "maximize semi-arc edges");
    s_max->add_option("-n", n, "vertices")->required();
    s_max->add_option("-k", k, "visibility parameter");
    s_max->add_option("--seed", seed, "search seed");
    s_max->add_option("--budget", budget, "node budget");
    s_max->add_option("-o", out_path, "output path");
    auto* s_refute = search_cmd->add_subcommand("refute", "probe K_{3k+4} non-existence");
    s_refute->add_option("-k", k, "visibility parameter")->required();
    s_refute->add_option("--seed", seed, "search seed");
    s_refute->add_option("--budget", budget, "node budget");
    s_refute->add_option("-o", out_path, "output path");

    auto* k5_cmd = app.add_subcommand("k5", "evaluate the five-arc candidate");
    k5_cmd->add_option("--reading", reading, "plain|wrapped|both");
    k5_cmd->add_option("-o", out_path, "output path");

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    verify_cmd->add_option("--level", level, "full|quick");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            auto fam = family_from_name(family_str);
            if (!fam) throw CLI::ValidationError("--family", "unknown family");
            Representation rep = random_rep(*fam, n, k, seed, ties);
            emit(to_json(rep).dump(2), out_path);
            return 0;
        }

        if (*graph_cmd) {
            Representation rep = load_valid_rep(rep_path);
            Graph g = graph_of(rep);
            emit(want_dot ? to_dot(g) : graph_to_json(g).dump(2), out_path);
            return 0;
        }

        if (*stats_cmd) {
            Representation rep = load_valid_rep(rep_path);
            auto* sb = std::get_if<SemiBarRep>(&rep);
            if (!sb) throw CLI::ValidationError("--rep", "stats needs a semi_bar representation");
            int kk = stats_k >= 0 ? stats_k : sb->k;
            SkyscraperStats st = stats(*sb, kk);
            json j;
            j["k"] = kk;
            j["A"] = st.A;
            j["U"] = st.U;
            j["Br"] = st.Br;
            j["edge_count_formula"] = edge_count_formula(*sb, kk);
            SemiBarRep engine_rep = *sb;
            engine_rep.k = kk;
            j["engine_edge_count"] = (long long)semi_bar_graph(engine_rep).edge_count();
            std::vector<Rational> sorted = sb->lengths;
            std::sort(sorted.begin(), sorted.end());
            if (kk == 0 &&
                std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
                j["edge_count_simple"] = edge_count_simple(*sb);
            emit(j.dump(2), out_path);
            return 0;
        }

        if (*audit_cmd) {
            Representation rep = load_valid_rep(rep_path);
            BoundReport r = audit(rep, graph_of(rep));
            emit(report_to_json(r).dump(2), out_path);
            return r.violations.empty() ? 0 : 1;
        }

        if (*dec_cmd) {
            Representation rep = load_valid_rep(rep_path);
            auto* sb = std::get_if<SemiBarRep>(&rep);
            if (!sb)
                throw CLI::ValidationError("--rep", "decompose needs a semi_bar representation");
            OneBendDrawing d = one_bend(*sb);
            Decomposition dec = decompose(*sb);
            auto crossings = crossing_check(d, dec);
            json j;
            j["classes_used"] = dec.classes_used;
            j["class_bound"] = 2 * sb->k;
            j["class_of_bar"] = dec.class_of_bar;
            json edges = json::array();
            for (auto& [e, c] : dec.class_of_edge)
                edges.push_back(json{{"edge", {e.first, e.second}}, {"class", c}});
            j["class_of_edge"] = edges;
            j["same_class_crossings"] = crossings.size();
            j["crossing_bars_count"] = crossing_bars_count(d);
            emit(j.dump(2), out_path);
            return crossings.empty() && dec.classes_used <= 2 * sb->k ? 0 : 1;
        }

        if (*render_cmd) {
            Representation rep = load_valid_rep(rep_path);
            std::string svg;
            if (one_bend_flag) {
                auto* sb = std::get_if<SemiBarRep>(&rep);
                if (!sb)
                    throw CLI::ValidationError("--rep",
                                               "--one-bend needs a semi_bar representation");
                OneBendDrawing d = one_bend(*sb);
                std::optional<Decomposition> dec;
                if (sb->k >= 1) dec = decompose(*sb);
                svg = render_one_bend(d, dec ? &*dec : nullptr);
            } else {
                svg = render_representation(rep, sightlines);
            }
            emit(svg, out_path);
            return 0;
        }

        if (*enc_cmd) {
            Representation rep = load_valid_rep(rep_path);
            auto* sa = std::get_if<SemiArcRep>(&rep);
            if (!sa) throw CLI::ValidationError("--rep", "encode needs a semi_arc representation");
            json j;
            j["codes"] = encode(*sa).codes;
            emit(j.dump(), out_path);
            return 0;
        }

        if (*dec2_cmd) {
            SignedCode code;
            code.codes = parse_codes(codes_csv);
            SemiArcRep rep = decode(code, parse_sides(sides_csv));
            rep.k = k;
            emit(to_json(Representation(rep)).dump(2), out_path);
            return 0;
        }

        if (*s_complete) {
            auto fam = family_from_name(family_str);
            if (!fam) throw CLI::ValidationError("--family", "unknown family");
            SearchResult r = find_complete(*fam, n, k, seed, budget);
            json j;
            j["found"] = r.certificate.has_value();
            j["exhausted"] = r.exhausted;
            j["nodes"] = r.nodes;
            if (r.certificate) j.update(certificate_to_json(*r.certificate));
            emit(j.dump(2), out_path);
            return r.certificate ? 0 : 1;
        }

        if (*s_max) {
            SearchResult r = max_edges_search(n, k, budget, seed);
            json j;
            j["best_edges"] = r.best_edges;
            j["exhausted"] = r.exhausted;
            j["nodes"] = r.nodes;
            if (n >= 3 * k + 3)
                j["conjectured_max"] = rational_to_json(semi_arc_lower(n, k));
            j["upper_bound"] = rational_to_json(max_edges(Family::semi_arc, n, k));
            if (r.certificate) j.update(certificate_to_json(*r.certificate));
            emit(j.dump(2), out_path);
            return 0;
        }

        if (*s_refute) {
            RefuteReport r = refute_complete(k, budget, seed);
            json j;
            j["n"] = r.n;
            j["k"] = r.k;
            j["witness_found"] = r.witness_found;
            j["nodes"] = r.nodes;
            j["conclusion"] = r.witness_found
                                  ? "counterexample found"
                                  : (r.exhausted
                                         ? "consistent with conjecture (exhaustive over "
                                           "discretization)"
                                         : "no witness found (budget " +
                                               std::to_string(budget) + ")");
            if (r.witness) j["witness"] = certificate_to_json(*r.witness);
            emit(j.dump(2), out_path);
            return 0;
        }

        if (*k5_cmd) {
            json j;
            auto run = [&](K5Reading rd, const char* name) {
                ArcRep rep = k5_candidate(rd);
                Graph g = arc_graph(rep);
                json e;
                e["representation"] = to_json(Representation(rep));
                e["graph"] = graph_to_json(g);
                e["edges"] = g.edge_count();
                e["complete"] = g.is_complete();
                j[name] = e;
            };
            if (reading == "plain" || reading == "both") run(K5Reading::plain, "plain");
            if (reading == "wrapped" || reading == "both") run(K5Reading::wrapped, "wrapped");
            if (j.empty()) throw CLI::ValidationError("--reading", "plain|wrapped|both");
            emit(j.dump(2), out_path);
            return 0;
        }

        if (*verify_cmd) {
            if (level != "full" && level != "quick")
                throw CLI::ValidationError("--level", "full|quick");
            auto results = run_acceptance(level == "quick");
            std::cout << format_results(results);
            for (const auto& r : results)
                if (!r.pass) return 1;
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
