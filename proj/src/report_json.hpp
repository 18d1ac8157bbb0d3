#pragma once

#include <string>
#include <vector>

#include "classify.hpp"
#include "crosscheck.hpp"
#include "tables.hpp"
#include "wlp.hpp"

namespace wlp {

// JSON renderings of the result types, pretty-printed with 2-space indent.
// Quantities that can exceed double precision — Hilbert coefficients,
// witness entries, 61-bit primes — are emitted as decimal strings so every
// value survives a parse through ordinary JSON readers losslessly. Object
// keys appear in a fixed order, so equal inputs render byte-identically.

// {"graph", "n", "degree", "coefficients", "text", "unimodal", "mode"}
std::string poly_json(const Graph& g, const UPoly& p);

// {"graph", "n", "hilbert", "unimodal", "mode", "degrees": [{"j", "h_j",
//  "h_j1", "rank", "maximal", "failure_kind", "certificate", "seconds"}],
//  "has_wlp", "seed", "timings": {"total", "degrees"}}
std::string report_json(const WlpReport& r);

// {"family", "fixed", "lo", "hi", "entries": [{"param", "graph",
//  "indeterminate", "message" | "report"}], "wlp_params"}
std::string sweep_json(const SweepTable& t);

// One row per swept parameter under the header
// family,param,has_wlp,fail_degree,fail_kind,seconds; has_wlp is "true",
// "false", or "indeterminate", the failure columns are empty when they do
// not apply, and fields containing commas are double-quoted.
std::string sweep_csv(const SweepTable& t);

// Array of {"target", "claim", "ok", "lines": [{"text", "ok"}], "seconds"}.
std::string reproduce_json(const std::vector<ReproduceReport>& reps);

// {"ok", "polynomial_checks", "rank_checks", "lines": [{"text", "ok"}],
//  "seconds"}
std::string crosscheck_json(const CrosscheckReport& r);

} // namespace wlp
