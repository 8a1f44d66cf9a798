#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qgraph/constructions.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/hull.hpp"
#include "qgraph/qcomb.hpp"
#include "qgraph/verify.hpp"

using namespace qgraph;

namespace {

// exit codes: 0 ok/pass, 1 verification failure, 2 usage error,
// 3 resource cap, 4 not found
constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitNotFound = 4;

struct CommonOpts {
    std::string family = "qkneser";
    unsigned q = 2;
    int n = 4;
    int k = 2;
    std::string format = "table";
    GraphCaps caps;
};

void add_graph_params(CLI::App* cmd, CommonOpts& opt, bool with_family = true) {
    if (with_family)
        cmd->add_option("--family", opt.family, "graph family: qkneser or grassmann")
            ->required();
    cmd->add_option("--q", opt.q, "field order (prime power)")->required();
    cmd->add_option("--n", opt.n, "ambient dimension")->required();
    cmd->add_option("--k", opt.k, "subspace dimension")->required();
    cmd->add_option("--threads", opt.caps.threads, "build worker count");
    cmd->add_option("--max-vertices", opt.caps.max_vertices, "vertex cap");
    cmd->add_option("--max-edge-checks", opt.caps.max_edge_checks, "pair-check cap");
    cmd->add_option("--format", opt.format, "output format: table or json");
}

SubspaceGraph build_from(const CommonOpts& opt) {
    SubspaceGraph g =
        build_graph(family_from_name(opt.family), opt.q, opt.n, opt.k, opt.caps);
    if (g.outside_standard_regime())
        std::cerr << "warning: parameters outside n >= 2k >= 2\n";
    return g;
}

int cmd_graph(const CommonOpts& opt, const std::string& out_base) {
    SubspaceGraph g = build_from(opt);
    DegreeReport rep = degree_report(g);
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["family"] = family_name(g.family());
        j["q"] = g.q();
        j["n"] = g.n();
        j["k"] = g.k();
        j["vertices"] = rep.vertex_count;
        j["edges"] = rep.edge_count;
        j["min_degree"] = rep.min_degree;
        j["max_degree"] = rep.max_degree;
        j["is_regular"] = rep.is_regular;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "family " << family_name(g.family()) << " q=" << g.q()
                  << " n=" << g.n() << " k=" << g.k() << '\n'
                  << "vertices " << rep.vertex_count << '\n'
                  << "edges " << rep.edge_count << '\n';
        if (rep.is_regular)
            std::cout << "regular, degree " << rep.degree << '\n';
        else
            std::cout << "degrees in [" << rep.min_degree << ", " << rep.max_degree
                      << "]\n";
    }
    if (!out_base.empty()) {
        std::ofstream edges(out_base + ".edges");
        std::ofstream sidecar(out_base + ".vertices.json");
        if (!edges || !sidecar)
            throw Error("cannot open output files at " + out_base);
        export_edge_list(g, edges);
        export_vertex_sidecar(g, sidecar);
        std::cerr << "wrote " << out_base << ".edges and " << out_base
                  << ".vertices.json\n";
    }
    return kExitPass;
}

int cmd_hull(const CommonOpts& opt, const std::string& seed_spec,
             const std::vector<std::string>& seed_forms, const std::string& trace_path) {
    SubspaceGraph g = build_from(opt);

    std::vector<std::uint32_t> seed_ids;
    if (!seed_forms.empty()) {
        if (seed_forms.size() != 2)
            throw InvalidParams("exactly two --seed-form values are required");
        for (const std::string& form : seed_forms) {
            auto id = g.find_vertex_serialized(form);
            if (!id)
                throw NotFound("seed vertex '" + form + "' is not a vertex of the graph");
            seed_ids.push_back(*id);
        }
    } else if (seed_spec == "paper") {
        auto [a, b] = paper_pair_ids(g);
        seed_ids = {a, b};
    } else {
        // "i,j" vertex ids
        auto comma = seed_spec.find(',');
        if (comma == std::string::npos)
            throw InvalidParams("--seed must be 'paper' or two ids 'i,j'");
        try {
            unsigned long a = std::stoul(seed_spec.substr(0, comma));
            unsigned long b = std::stoul(seed_spec.substr(comma + 1));
            if (a >= g.vertex_count() || b >= g.vertex_count())
                throw NotFound("seed id out of range");
            seed_ids = {std::uint32_t(a), std::uint32_t(b)};
        } catch (const std::logic_error&) {
            throw InvalidParams("malformed --seed '" + seed_spec + "'");
        }
    }

    VertexSet seed(g.vertex_count());
    for (auto id : seed_ids)
        seed.add(id);
    auto [h, trace] = hull(g, seed);

    if (opt.format == "json") {
        std::cout << trace_to_json(g, trace).dump(2) << '\n';
    } else {
        std::cout << "seed:";
        for (auto id : trace.seed)
            std::cout << ' ' << id << " (" << g.vertex(id).serialize() << ")";
        std::cout << '\n'
                  << "hull " << trace.hull_size << '/' << g.vertex_count() << " in "
                  << trace.converged_at << " rounds\n"
                  << "is_hull_set " << (trace.is_hull_set ? "true" : "false") << '\n';
    }
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out)
            throw Error("cannot open trace file " + trace_path);
        out << trace_to_json(g, trace).dump(2) << '\n';
        std::cerr << "wrote " << trace_path << '\n';
    }
    return kExitPass;
}

int cmd_verify(const CommonOpts& opt, const std::string& target, int m,
               std::size_t samples, std::uint64_t seed, bool small) {
    std::vector<verify::Report> reports;
    if (target == "all") {
        if (!small)
            std::cerr << "note: running the desk-scale preset (same as --small)\n";
        reports = verify::run_all_small(opt.caps);
    } else if (target == "lemma21") {
        reports.push_back(verify::lemma21(opt.q, opt.n, opt.k));
    } else if (target == "lemma22") {
        reports.push_back(verify::lemma22(opt.q, opt.n, opt.k));
    } else if (target == "lemma23") {
        reports.push_back(verify::lemma23(opt.q, opt.n, opt.k, m, opt.caps));
    } else if (target == "lemma24") {
        reports.push_back(verify::lemma24(opt.q, opt.k, samples, seed, opt.caps));
    } else if (target == "lemma25") {
        reports.push_back(verify::lemma25(opt.q, opt.k, samples, seed, opt.caps));
    } else if (target == "case2count") {
        reports.push_back(verify::case2count(opt.q, opt.k, samples, seed, opt.caps));
    } else if (target == "thm11") {
        reports.push_back(verify::thm11(opt.q, opt.n, opt.k, opt.caps));
    } else if (target == "thm12") {
        reports.push_back(verify::thm12(opt.q, opt.n, opt.k, opt.caps));
    } else if (target == "chain") {
        reports.push_back(verify::chain(opt.q, opt.n, opt.k, opt.caps));
    } else {
        throw InvalidParams("unknown verify target '" + target + "'");
    }

    bool all_pass = true;
    if (opt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& rep : reports) {
            all_pass = all_pass && rep.pass;
            arr.push_back(verify::to_json(rep));
        }
        std::cout << arr.dump(2) << '\n';
    } else if (opt.format == "csv") {
        std::cout << "target,check,pass,detail\n";
        for (const auto& rep : reports) {
            all_pass = all_pass && rep.pass;
            for (const auto& c : rep.checks) {
                std::string detail = c.detail;
                for (std::size_t at = detail.find('"'); at != std::string::npos;
                     at = detail.find('"', at + 2))
                    detail.replace(at, 1, "\"\"");
                std::cout << rep.target << ',' << '"' << c.name << '"' << ','
                          << (c.pass ? "pass" : "fail") << ',' << '"' << detail << '"'
                          << '\n';
            }
        }
    } else {
        for (const auto& rep : reports) {
            all_pass = all_pass && rep.pass;
            std::cout << verify::to_text(rep);
        }
        std::cout << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << '\n';
    }
    return all_pass ? kExitPass : kExitVerifyFail;
}

int cmd_search(const CommonOpts& opt, const std::string& strategy, std::uint64_t budget,
               bool show_all) {
    SubspaceGraph g = build_from(opt);
    SearchResult res =
        find_hull_pair(g, strategy_from_name(strategy), budget, opt.caps.threads);
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["family"] = family_name(g.family());
        j["strategy"] = strategy;
        j["hulls_computed"] = res.hulls_computed;
        j["witnesses_total"] = res.witnesses.size();
        nlohmann::ordered_json ws = nlohmann::ordered_json::array();
        for (const HullPair& w : res.witnesses) {
            nlohmann::ordered_json wj;
            wj["v1"] = w.v1;
            wj["v2"] = w.v2;
            wj["form1"] = g.vertex(w.v1).serialize();
            wj["form2"] = g.vertex(w.v2).serialize();
            ws.push_back(std::move(wj));
            if (!show_all)
                break;
        }
        j["witnesses"] = std::move(ws);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "strategy " << strategy << ", " << res.hulls_computed
                  << " hull computations, " << res.witnesses.size()
                  << " witness pair(s)\n";
        for (const HullPair& w : res.witnesses) {
            std::cout << "witness " << w.v1 << " (" << g.vertex(w.v1).serialize()
                      << ") / " << w.v2 << " (" << g.vertex(w.v2).serialize() << ")\n";
            if (!show_all)
                break;
        }
    }
    return res.witnesses.empty() ? kExitVerifyFail : kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Kneser and Grassmann graphs over F_q: exact counting formulas, "
                 "graph construction, and threshold-2 infection (P3-hull) analysis"};
    app.require_subcommand(1);

    // gauss
    int gn = 0, gk = 0;
    unsigned gq = 2;
    CLI::App* gauss = app.add_subcommand("gauss", "print the Gaussian binomial [n,k]_q");
    gauss->add_option("n", gn, "upper parameter")->required();
    gauss->add_option("k", gk, "lower parameter")->required();
    gauss->add_option("q", gq, "field order (prime power)")->required();

    // graph
    CommonOpts graph_opt;
    std::string out_base;
    CLI::App* graph_cmd =
        app.add_subcommand("graph", "build a graph, print its degree report, "
                                    "optionally export the edge list");
    add_graph_params(graph_cmd, graph_opt);
    graph_cmd->add_option("--out", out_base, "write <out>.edges and <out>.vertices.json");

    // hull
    CommonOpts hull_opt;
    std::string seed_spec = "paper";
    std::vector<std::string> seed_forms;
    std::string trace_path;
    CLI::App* hull_cmd = app.add_subcommand(
        "hull", "run the threshold-2 infection from a two-vertex seed");
    add_graph_params(hull_cmd, hull_opt);
    hull_cmd->add_option("--seed", seed_spec, "'paper' or a vertex-id pair 'i,j'");
    hull_cmd->add_option("--seed-form", seed_forms,
                         "seed vertex in canonical form (give twice)");
    hull_cmd->add_option("--trace", trace_path, "write the round trace as JSON");

    // verify
    CommonOpts verify_opt;
    std::string target;
    int verify_m = -1;
    std::size_t samples = 0;
    std::uint64_t sample_seed = 1;
    bool small = false;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check a counting formula or hull statement against brute force");
    verify_cmd
        ->add_option(
            "--target", target,
            "lemma21|lemma22|lemma23|lemma24|lemma25|case2count|thm11|thm12|chain|all")
        ->required();
    verify_cmd->add_option("--q", verify_opt.q, "field order");
    verify_cmd->add_option("--n", verify_opt.n, "ambient dimension");
    verify_cmd->add_option("--k", verify_opt.k, "subspace dimension");
    verify_cmd->add_option("--m", verify_m, "restrict lemma23 to one m");
    verify_cmd->add_option("--samples", samples,
                           "sampled checks instead of exhaustive (0 = exhaustive)");
    verify_cmd->add_option("--seed", sample_seed, "seed for sampled checks");
    verify_cmd->add_flag("--small", small, "with --target all: desk-scale preset");
    verify_cmd->add_option("--threads", verify_opt.caps.threads, "build worker count");
    verify_cmd->add_option("--max-vertices", verify_opt.caps.max_vertices, "vertex cap");
    verify_cmd->add_option("--max-edge-checks", verify_opt.caps.max_edge_checks,
                           "pair-check cap");
    verify_cmd->add_option("--format", verify_opt.format,
                           "output format: table, json, or csv");

    // search
    CommonOpts search_opt;
    std::string strategy = "paper";
    std::uint64_t budget = kDefaultSearchBudget;
    bool show_all = false;
    CLI::App* search_cmd =
        app.add_subcommand("search", "find a two-vertex hull set (witness pair)");
    add_graph_params(search_cmd, search_opt);
    search_cmd->add_option("--strategy", strategy, "paper|fix-first|full");
    search_cmd->add_option("--budget", budget, "max hull computations");
    search_cmd->add_flag("--all", show_all, "print every witness (full strategy)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gauss->parsed()) {
            if (gn < 0 || gk < 0)
                throw InvalidParams("gauss: n and k must be nonnegative");
            std::cout << gaussian_binomial(gn, gk, gq).get_str() << '\n';
            return kExitPass;
        }
        if (graph_cmd->parsed())
            return cmd_graph(graph_opt, out_base);
        if (hull_cmd->parsed())
            return cmd_hull(hull_opt, seed_spec, seed_forms, trace_path);
        if (verify_cmd->parsed())
            return cmd_verify(verify_opt, target, verify_m, samples, sample_seed, small);
        if (search_cmd->parsed())
            return cmd_search(search_opt, strategy, budget, show_all);
    } catch (const LimitExceeded& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitLimit;
    } catch (const NotFound& e) {
        std::cerr << "not found: " << e.what() << '\n';
        return kExitNotFound;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
