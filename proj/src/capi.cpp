#include "wlpgraph.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "classify.hpp"
#include "crosscheck.hpp"
#include "graph_spec.hpp"
#include "indpoly.hpp"
#include "levels.hpp"
#include "report_json.hpp"
#include "tables.hpp"
#include "upoly.hpp"
#include "wlp.hpp"

struct wlpg_graph {
    wlp::Graph g;
};

namespace {

thread_local std::string t_error;

void set_error(const std::string& msg) { t_error = msg; }

template <typename F>
wlpg_status guarded(F&& body) {
    try {
        body();
        return WLPG_OK;
    } catch (const wlp::IndeterminateRank& e) {
        set_error(e.what());
        return WLPG_ERR_INDETERMINATE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return WLPG_ERR_INVALID;
    } catch (const std::exception& e) {
        set_error(e.what());
        return WLPG_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown failure");
        return WLPG_ERR_INTERNAL;
    }
}

// Runs make_text under the exception guard, then hands the result to the
// caller as a heap copy released by wlpg_string_free.
template <typename F>
wlpg_status guarded_emit(char** out, F&& make_text) {
    std::string text;
    wlpg_status status = guarded([&] { text = make_text(); });
    if (status != WLPG_OK) return status;
    *out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!*out) {
        set_error("out of memory");
        return WLPG_ERR_INTERNAL;
    }
    std::memcpy(*out, text.c_str(), text.size() + 1);
    return WLPG_OK;
}

wlpg_status require(bool ok, const char* why) {
    if (ok) return WLPG_OK;
    set_error(why);
    return WLPG_ERR_INVALID;
}

wlp::WlpOptions to_wlp_options(const wlpg_options* o) {
    wlp::WlpOptions opts;
    if (!o) return opts;
    opts.policy.seed = o->seed;
    opts.policy.extra_primes = o->extra_primes;
    opts.policy.dense_threshold = o->dense_threshold;
    opts.policy.max_retries = o->max_retries;
    opts.policy.time_budget_seconds = o->time_budget_seconds;
    opts.fail_fast = o->fail_fast != 0;
    opts.parallelism = o->parallelism;
    return opts;
}

wlp::Family parse_family(const char* family, bool& needs_fixed) {
    std::string f = family ? family : "";
    needs_fixed = false;
    if (f == "path") return wlp::Family::Path;
    if (f == "cycle") return wlp::Family::Cycle;
    if (f == "pan") return wlp::Family::Pan;
    needs_fixed = true;
    if (f == "tadpole-m") return wlp::Family::TadpoleFixedM;
    if (f == "tadpole-n") return wlp::Family::TadpoleFixedN;
    throw std::invalid_argument(
        "unknown family '" + f +
        "' (expected path, cycle, pan, tadpole-m, or tadpole-n)");
}

template <typename Render>
wlpg_status classify_rendered(const char* family, int fixed, int lo, int hi,
                              const wlpg_options* opts, char** out,
                              Render render) {
    if (wlpg_status s = require(family && out, "family and out required"))
        return s;
    return guarded_emit(out, [&] {
        bool needs_fixed = false;
        wlp::Family f = parse_family(family, needs_fixed);
        if (f == wlp::Family::TadpoleFixedM && fixed < 3)
            throw std::invalid_argument(
                "the fixed cycle length must be at least 3");
        if (f == wlp::Family::TadpoleFixedN && fixed < 0)
            throw std::invalid_argument(
                "the fixed tail length must be nonnegative");
        return render(wlp::classify_family(f, needs_fixed ? fixed : 0, lo, hi,
                                           to_wlp_options(opts)));
    });
}

} // namespace

extern "C" {

void wlpg_options_init(wlpg_options* opts) {
    if (!opts) return;
    wlp::WlpOptions defaults;
    opts->seed = defaults.policy.seed;
    opts->extra_primes = defaults.policy.extra_primes;
    opts->dense_threshold = defaults.policy.dense_threshold;
    opts->max_retries = defaults.policy.max_retries;
    opts->time_budget_seconds = defaults.policy.time_budget_seconds;
    opts->fail_fast = defaults.fail_fast ? 1 : 0;
    opts->parallelism = defaults.parallelism;
}

const char* wlpg_version(void) { return "0.1.0"; }

const char* wlpg_last_error(void) { return t_error.c_str(); }

void wlpg_string_free(char* s) { std::free(s); }

wlpg_status wlpg_graph_create(const char* spec, wlpg_graph** out) {
    if (wlpg_status s = require(spec && out, "spec and out required"))
        return s;
    *out = nullptr;
    return guarded([&] { *out = new wlpg_graph{wlp::parse_graph_spec(spec)}; });
}

void wlpg_graph_free(wlpg_graph* g) { delete g; }

int wlpg_graph_vertex_count(const wlpg_graph* g) {
    return g ? g->g.vertex_count() : 0;
}

wlpg_status wlpg_graph_name(const wlpg_graph* g, char** out) {
    if (wlpg_status s = require(g && out, "graph and out required")) return s;
    return guarded_emit(out, [&] { return g->g.name(); });
}

wlpg_status wlpg_poly_json(const wlpg_graph* g, char** out) {
    if (wlpg_status s = require(g && out, "graph and out required")) return s;
    return guarded_emit(out, [&] {
        return wlp::poly_json(g->g, wlp::independence_polynomial(g->g));
    });
}

wlpg_status wlpg_wlp_json(const wlpg_graph* g, const wlpg_options* opts,
                          char** out) {
    if (wlpg_status s = require(g && out, "graph and out required")) return s;
    return guarded_emit(out, [&] {
        return wlp::report_json(wlp::wlp_check(g->g, to_wlp_options(opts)));
    });
}

wlpg_status wlpg_levelmap_dump(const wlpg_graph* g, int j, char** out) {
    if (wlpg_status s = require(g && out, "graph and out required")) return s;
    return guarded_emit(out,
                        [&] { return wlp::level_map(g->g, j).matrix.dump(); });
}

wlpg_status wlpg_classify_json(const char* family, int fixed, int lo, int hi,
                               const wlpg_options* opts, char** out) {
    return classify_rendered(
        family, fixed, lo, hi, opts, out,
        [](const wlp::SweepTable& t) { return wlp::sweep_json(t); });
}

wlpg_status wlpg_classify_csv(const char* family, int fixed, int lo, int hi,
                              const wlpg_options* opts, char** out) {
    return classify_rendered(
        family, fixed, lo, hi, opts, out,
        [](const wlp::SweepTable& t) { return wlp::sweep_csv(t); });
}

wlpg_status wlpg_reproduce_json(const char* target, const wlpg_options* opts,
                                char** out) {
    if (wlpg_status s = require(target && out, "target and out required"))
        return s;
    return guarded_emit(out, [&] {
        return wlp::reproduce_json(
            wlp::reproduce(target, to_wlp_options(opts)));
    });
}

wlpg_status wlpg_crosscheck_json(const wlpg_options* opts, char** out) {
    if (wlpg_status s = require(out != nullptr, "out required")) return s;
    return guarded_emit(out, [&] {
        wlp::CrosscheckOptions copts;
        copts.policy = to_wlp_options(opts).policy;
        return wlp::crosscheck_json(wlp::oracle_crosscheck(copts));
    });
}

int wlpg_lambda(int n) {
    if (n < 1) {
        set_error("the path needs at least one vertex");
        return -1;
    }
    return wlp::lambda_closed_form(n);
}

} // extern "C"
