#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "wlpgraph.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // no WLP / mismatch / failed checks
constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;

int status_exit(wlpg_status s) {
    switch (s) {
        case WLPG_OK: return kExitOk;
        case WLPG_ERR_INVALID: return kExitUsage;
        case WLPG_ERR_INDETERMINATE: return kExitIndeterminate;
        default: return kExitNegative;
    }
}

int report_error(wlpg_status s) {
    std::fprintf(stderr, "error: %s\n", wlpg_last_error());
    return status_exit(s);
}

// Owned string coming back from the library.
struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { wlpg_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedGraph {
    wlpg_graph* ptr = nullptr;
    ~OwnedGraph() { wlpg_graph_free(ptr); }
};

// ---- graph selection flags ------------------------------------------------

struct GraphFlags {
    int path_n = 0;
    int cycle_m = 0;
    int pan_m = 0;
    std::vector<int> tadpole_mn;
    std::vector<std::string> union_parts;
    std::string edges_file;

    CLI::Option* opt_path = nullptr;
    CLI::Option* opt_cycle = nullptr;
    CLI::Option* opt_pan = nullptr;
    CLI::Option* opt_tadpole = nullptr;
    CLI::Option* opt_union = nullptr;
    CLI::Option* opt_edges = nullptr;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& gf) {
    gf.opt_path = cmd->add_option("--path", gf.path_n, "Path on N vertices");
    gf.opt_cycle = cmd->add_option("--cycle", gf.cycle_m, "Cycle on M vertices");
    gf.opt_pan =
        cmd->add_option("--pan", gf.pan_m, "M-cycle with one pendant vertex");
    gf.opt_tadpole = cmd->add_option("--tadpole", gf.tadpole_mn,
                                     "Cycle length M and tail length N")
                         ->expected(2);
    gf.opt_union = cmd->add_option("--union", gf.union_parts,
                                   "Two graph specs, e.g. \"path 3\" "
                                   "\"cycle 5\" (specs nest: \"union (a) "
                                   "(b)\")")
                       ->expected(2);
    gf.opt_edges = cmd->add_option("--edges", gf.edges_file,
                                   "Edge-list file: \"n <count>\" header, "
                                   "one \"u v\" pair per line, '#' comments");
}

// Composes the one-line spec the library parses; empty when the flags do
// not select exactly one graph.
std::string build_spec(const GraphFlags& gf) {
    std::vector<std::string> specs;
    if (gf.opt_path->count()) specs.push_back("path " + std::to_string(gf.path_n));
    if (gf.opt_cycle->count())
        specs.push_back("cycle " + std::to_string(gf.cycle_m));
    if (gf.opt_pan->count()) specs.push_back("pan " + std::to_string(gf.pan_m));
    if (gf.opt_tadpole->count())
        specs.push_back("tadpole " + std::to_string(gf.tadpole_mn[0]) + " " +
                        std::to_string(gf.tadpole_mn[1]));
    if (gf.opt_union->count())
        specs.push_back("union (" + gf.union_parts[0] + ") (" +
                        gf.union_parts[1] + ")");
    if (gf.opt_edges->count()) specs.push_back("edges " + gf.edges_file);
    return specs.size() == 1 ? specs[0] : std::string();
}

int open_graph(const GraphFlags& gf, OwnedGraph& g) {
    std::string spec = build_spec(gf);
    if (spec.empty()) {
        std::fprintf(stderr,
                     "error: select exactly one graph (--path, --cycle, "
                     "--pan, --tadpole, --union, or --edges)\n");
        return kExitUsage;
    }
    if (wlpg_status s = wlpg_graph_create(spec.c_str(), &g.ptr))
        return report_error(s);
    return kExitOk;
}

// ---- shared option plumbing -------------------------------------------

void add_policy_flags(CLI::App* cmd, wlpg_options& o) {
    cmd->add_option("--seed", o.seed, "Base seed for the certified-rank primes")
        ->envname("WLPGRAPH_SEED");
    cmd->add_option("--extra-primes", o.extra_primes,
                    "Stability confirmations for rank deficiencies");
    cmd->add_option("--dense-threshold", o.dense_threshold,
                    "Largest min-dimension for exact elimination");
    cmd->add_option("--max-retries", o.max_retries,
                    "Fresh-prime attempts before falling back");
    cmd->add_option("--time-budget", o.time_budget_seconds,
                    "Soft time budget in seconds (0 = unlimited)");
    cmd->add_option("--parallel", o.parallelism,
                    "Worker threads across independent degrees/parameters")
        ->envname("WLPGRAPH_PARALLEL");
}

CLI::Option* add_format_flag(CLI::App* cmd, std::string& format,
                             std::vector<std::string> choices) {
    return cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember(choices))
        ->capture_default_str();
}

// ---- text renderings of the JSON results --------------------------------

void print_poly_text(const json& j) {
    std::printf("graph: %s (%d vertices)\n", j["graph"].get<std::string>().c_str(),
                j["n"].get<int>());
    std::printf("I(t) = %s\n", j["text"].get<std::string>().c_str());
    std::printf("unimodal: %s\n", j["unimodal"].get<bool>() ? "yes" : "no");
    if (j["mode"].is_null())
        std::printf("mode: none\n");
    else
        std::printf("mode: %d\n", j["mode"].get<int>());
}

void print_wlp_text(const json& j) {
    std::printf("graph: %s (%d vertices)\n", j["graph"].get<std::string>().c_str(),
                j["n"].get<int>());
    std::string hilbert;
    for (const json& h : j["hilbert"]) {
        if (!hilbert.empty()) hilbert += ' ';
        hilbert += h.get<std::string>();
    }
    std::printf("hilbert: %s\n", hilbert.c_str());
    if (j["mode"].is_null())
        std::printf("unimodal: %s\n", j["unimodal"].get<bool>() ? "yes" : "no");
    else
        std::printf("unimodal: %s (mode %d)\n",
                    j["unimodal"].get<bool>() ? "yes" : "no",
                    j["mode"].get<int>());
    for (const json& d : j["degrees"]) {
        std::string verdict;
        if (d["maximal"].get<bool>()) {
            verdict = "maximal";
        } else {
            verdict = "NOT MAXIMAL: " +
                      d["failure_kind"].get<std::string>() + " fails";
        }
        std::printf("degree %d: %d -> %d  rank %d  %s (%s)\n",
                    d["j"].get<int>(), d["h_j"].get<int>(),
                    d["h_j1"].get<int>(), d["rank"].get<int>(),
                    verdict.c_str(),
                    d["certificate"]["evidence"].get<std::string>().c_str());
    }
    std::printf("has WLP: %s\n", j["has_wlp"].get<bool>() ? "yes" : "no");
    std::printf("seed: %llu\n",
                static_cast<unsigned long long>(j["seed"].get<uint64_t>()));
    std::printf("total: %.3fs\n", j["timings"]["total"].get<double>());
}

// First non-maximal degree of a serialized report, as "[fails KIND at
// degree J]", or "" when every degree is maximal.
std::string failure_suffix(const json& report) {
    for (const json& d : report["degrees"])
        if (!d["maximal"].get<bool>())
            return " [fails " + d["failure_kind"].get<std::string>() +
                   " at degree " + std::to_string(d["j"].get<int>()) + "]";
    return "";
}

void print_classify_text(const json& j) {
    std::printf("family: %s, parameters %d..%d\n",
                j["family"].get<std::string>().c_str(), j["lo"].get<int>(),
                j["hi"].get<int>());
    for (const json& e : j["entries"]) {
        std::string name = e["graph"].get<std::string>();
        if (e["indeterminate"].get<bool>()) {
            std::printf("%s: indeterminate (%s)\n", name.c_str(),
                        e["message"].get<std::string>().c_str());
            continue;
        }
        const json& rep = e["report"];
        std::printf("%s: %s%s (%.3fs)\n", name.c_str(),
                    rep["has_wlp"].get<bool>() ? "WLP" : "no WLP",
                    failure_suffix(rep).c_str(),
                    rep["timings"]["total"].get<double>());
    }
    std::string params;
    for (const json& p : j["wlp_params"]) {
        if (!params.empty()) params += ' ';
        params += std::to_string(p.get<int>());
    }
    std::printf("with WLP: %s\n", params.empty() ? "(none)" : params.c_str());
}

void print_reproduce_text(const json& reports) {
    bool first = true;
    for (const json& r : reports) {
        if (!first) std::printf("\n");
        first = false;
        std::printf("== %s: %s\n", r["target"].get<std::string>().c_str(),
                    r["claim"].get<std::string>().c_str());
        for (const json& line : r["lines"])
            std::printf("%s\n", line["text"].get<std::string>().c_str());
        std::printf("result: %s (%.3fs)\n",
                    r["ok"].get<bool>() ? "OK" : "MISMATCH",
                    r["seconds"].get<double>());
    }
}

void print_crosscheck_text(const json& j) {
    for (const json& line : j["lines"])
        std::printf("%s\n", line["text"].get<std::string>().c_str());
    std::printf("polynomial checks: %d, rank checks: %d\n",
                j["polynomial_checks"].get<int>(), j["rank_checks"].get<int>());
    std::printf("result: %s (%.3fs)\n", j["ok"].get<bool>() ? "OK" : "FAILED",
                j["seconds"].get<double>());
}

// Distinguishes "a computation disagreed" from "a rank was not certified"
// for the exit code; indeterminate lines are self-describing.
int reproduce_exit(const json& reports) {
    bool indeterminate = false;
    for (const json& r : reports) {
        if (r["ok"].get<bool>()) continue;
        for (const json& line : r["lines"]) {
            if (line["ok"].get<bool>()) continue;
            if (line["text"].get<std::string>().find(": indeterminate (") !=
                std::string::npos)
                indeterminate = true;
            else
                return kExitNegative;
        }
    }
    return indeterminate ? kExitIndeterminate : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence polynomials and the weak Lefschetz property "
                 "of graph algebras, with certified rank verdicts"};
    app.require_subcommand(1);

    wlpg_options opts;
    wlpg_options_init(&opts);

    // poly ---------------------------------------------------------------
    CLI::App* poly = app.add_subcommand(
        "poly", "Independence polynomial with unimodality and mode");
    GraphFlags poly_graph;
    add_graph_flags(poly, poly_graph);
    std::string poly_format = "text";
    add_format_flag(poly, poly_format, {"text", "json"});

    // wlp ----------------------------------------------------------------
    CLI::App* wlp = app.add_subcommand(
        "wlp", "Decide the weak Lefschetz property of the graph's algebra");
    GraphFlags wlp_graph;
    add_graph_flags(wlp, wlp_graph);
    add_policy_flags(wlp, opts);
    bool fail_fast = false;
    wlp->add_flag("--fail-fast", fail_fast,
                  "Stop at the first non-maximal degree");
    std::string wlp_format = "text";
    add_format_flag(wlp, wlp_format, {"text", "json"});

    // levelmap -------------------------------------------------------------
    CLI::App* levelmap = app.add_subcommand(
        "levelmap", "Dump one multiplication map as sparse text");
    GraphFlags lm_graph;
    add_graph_flags(levelmap, lm_graph);
    int lm_degree = 0;
    levelmap->add_option("--degree", lm_degree, "Source degree j")->required();

    // classify -------------------------------------------------------------
    CLI::App* classify = app.add_subcommand(
        "classify", "Sweep one family and report every WLP verdict");
    std::string family;
    classify
        ->add_option("--family", family,
                     "path | cycle | pan | tadpole-m | tadpole-n")
        ->required();
    int fixed = 0;
    classify->add_option(
        "--fixed", fixed,
        "Fixed tadpole index (required for tadpole-m / tadpole-n)");
    int lo = 0, hi = 0;
    classify->add_option("--lo", lo, "First parameter value")->required();
    classify->add_option("--hi", hi, "Last parameter value")->required();
    add_policy_flags(classify, opts);
    bool classify_fail_fast = false;
    classify->add_flag("--fail-fast", classify_fail_fast,
                       "Stop each member's check at its first failure");
    std::string classify_format = "text";
    add_format_flag(classify, classify_format, {"text", "json", "csv"});

    // reproduce ------------------------------------------------------------
    CLI::App* reproduce = app.add_subcommand(
        "reproduce",
        "Recompute a stored classification or lemma and diff it");
    std::string target = "all";
    reproduce->add_option(
        "target", target,
        "thm-tm2 | thm-tm3 | thm-t4n | thm-t5n | thm-paths | thm-cycles | "
        "modes | identities | all");
    add_policy_flags(reproduce, opts);
    std::string reproduce_format = "text";
    add_format_flag(reproduce, reproduce_format, {"text", "json"});

    // crosscheck -----------------------------------------------------------
    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck",
        "Check recurrence polynomials and certified ranks against "
        "exhaustive oracles on the built-in corpus");
    add_policy_flags(crosscheck, opts);
    std::string crosscheck_format = "text";
    add_format_flag(crosscheck, crosscheck_format, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    opts.fail_fast = (fail_fast || classify_fail_fast) ? 1 : 0;

    if (poly->parsed()) {
        OwnedGraph g;
        if (int rc = open_graph(poly_graph, g)) return rc;
        OwnedString out;
        if (wlpg_status s = wlpg_poly_json(g.ptr, &out.ptr))
            return report_error(s);
        if (poly_format == "json")
            std::printf("%s\n", out.ptr);
        else
            print_poly_text(json::parse(out.str()));
        return kExitOk;
    }

    if (wlp->parsed()) {
        OwnedGraph g;
        if (int rc = open_graph(wlp_graph, g)) return rc;
        OwnedString out;
        if (wlpg_status s = wlpg_wlp_json(g.ptr, &opts, &out.ptr))
            return report_error(s);
        json j = json::parse(out.str());
        if (wlp_format == "json")
            std::printf("%s\n", out.ptr);
        else
            print_wlp_text(j);
        return j["has_wlp"].get<bool>() ? kExitOk : kExitNegative;
    }

    if (levelmap->parsed()) {
        OwnedGraph g;
        if (int rc = open_graph(lm_graph, g)) return rc;
        OwnedString out;
        if (wlpg_status s = wlpg_levelmap_dump(g.ptr, lm_degree, &out.ptr))
            return report_error(s);
        std::printf("%s", out.ptr);
        return kExitOk;
    }

    if (classify->parsed()) {
        OwnedString out;
        wlpg_status s =
            classify_format == "csv"
                ? wlpg_classify_csv(family.c_str(), fixed, lo, hi, &opts,
                                    &out.ptr)
                : wlpg_classify_json(family.c_str(), fixed, lo, hi, &opts,
                                     &out.ptr);
        if (s != WLPG_OK) return report_error(s);
        if (classify_format == "csv") {
            std::printf("%s", out.ptr);
            return out.str().find(",indeterminate,") == std::string::npos
                       ? kExitOk
                       : kExitIndeterminate;
        }
        json j = json::parse(out.str());
        if (classify_format == "json")
            std::printf("%s\n", out.ptr);
        else
            print_classify_text(j);
        for (const json& e : j["entries"])
            if (e["indeterminate"].get<bool>()) return kExitIndeterminate;
        return kExitOk;
    }

    if (reproduce->parsed()) {
        OwnedString out;
        if (wlpg_status s =
                wlpg_reproduce_json(target.c_str(), &opts, &out.ptr))
            return report_error(s);
        json j = json::parse(out.str());
        if (reproduce_format == "json")
            std::printf("%s\n", out.ptr);
        else
            print_reproduce_text(j);
        return reproduce_exit(j);
    }

    if (crosscheck->parsed()) {
        OwnedString out;
        if (wlpg_status s = wlpg_crosscheck_json(&opts, &out.ptr))
            return report_error(s);
        json j = json::parse(out.str());
        if (crosscheck_format == "json")
            std::printf("%s\n", out.ptr);
        else
            print_crosscheck_text(j);
        return j["ok"].get<bool>() ? kExitOk : kExitNegative;
    }

    return kExitUsage;  // unreachable: a subcommand is required
}
