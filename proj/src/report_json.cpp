#include "report_json.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

#include "indpoly.hpp"

namespace wlp {

namespace {

using json = nlohmann::ordered_json;

json string_vector(const std::vector<std::string>& v) {
    return json(v);
}

json big_strings(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const BigInt& x : v) out.push_back(x.get_str());
    return out;
}

json prime_strings(const std::vector<std::uint64_t>& v) {
    json out = json::array();
    for (std::uint64_t p : v) out.push_back(std::to_string(p));
    return out;
}

json mode_value(const ModeReport& m) {
    return m.mode ? json(*m.mode) : json(nullptr);
}

json certificate_value(const RankCertificate& c) {
    json out;
    out["rank"] = c.rank;
    out["evidence"] = to_string(c.evidence);
    out["prime"] = c.evidence == RankEvidence::FullRankModP
                       ? json(std::to_string(c.prime))
                       : json(nullptr);
    if (c.evidence == RankEvidence::KernelWitness) {
        out["side"] = to_string(c.side);
        out["witness"] = big_strings(c.witness);
    } else {
        out["side"] = nullptr;
        out["witness"] = nullptr;
    }
    out["primes_used"] = prime_strings(c.primes_used);
    return out;
}

json report_value(const WlpReport& r) {
    json out;
    out["graph"] = r.graph_name;
    out["n"] = r.n;
    out["hilbert"] = big_strings(r.hilbert.h);
    out["unimodal"] = r.mode.unimodal;
    out["mode"] = mode_value(r.mode);
    json degrees = json::array();
    json degree_seconds = json::array();
    for (const DegreeVerdict& v : r.degrees) {
        json d;
        d["j"] = v.j;
        d["h_j"] = v.h_j;
        d["h_j1"] = v.h_j1;
        d["rank"] = v.rank;
        d["maximal"] = v.maximal;
        d["failure_kind"] =
            v.failure_kind ? json(to_string(*v.failure_kind)) : json(nullptr);
        d["certificate"] = certificate_value(v.certificate);
        d["seconds"] = v.seconds;
        degrees.push_back(std::move(d));
        degree_seconds.push_back(v.seconds);
    }
    out["degrees"] = std::move(degrees);
    out["has_wlp"] = r.has_wlp;
    out["seed"] = r.seed;
    out["timings"] = {{"total", r.total_seconds},
                      {"degrees", std::move(degree_seconds)}};
    return out;
}

json lines_value(const std::vector<ReproduceLine>& lines) {
    json out = json::array();
    for (const ReproduceLine& l : lines)
        out.push_back({{"text", l.text}, {"ok", l.ok}});
    return out;
}

json lines_value(const std::vector<CrosscheckLine>& lines) {
    json out = json::array();
    for (const CrosscheckLine& l : lines)
        out.push_back({{"text", l.text}, {"ok", l.ok}});
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string fixed3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string dump(const json& j) { return j.dump(2); }

} // namespace

std::string poly_json(const Graph& g, const UPoly& p) {
    json out;
    out["graph"] = g.name();
    out["n"] = g.vertex_count();
    out["degree"] = p.degree();
    out["coefficients"] = string_vector(p.coeff_strings());
    out["text"] = p.to_string();
    ModeReport m = mode_analysis(p);
    out["unimodal"] = m.unimodal;
    out["mode"] = mode_value(m);
    return dump(out);
}

std::string report_json(const WlpReport& r) { return dump(report_value(r)); }

std::string sweep_json(const SweepTable& t) {
    json out;
    out["family"] = family_label(t.family, t.fixed);
    bool has_fixed = t.family == Family::TadpoleFixedM ||
                     t.family == Family::TadpoleFixedN;
    out["fixed"] = has_fixed ? json(t.fixed) : json(nullptr);
    out["lo"] = t.lo;
    out["hi"] = t.hi;
    json entries = json::array();
    for (const SweepEntry& e : t.entries) {
        json row;
        row["param"] = e.param;
        row["graph"] = family_member(t.family, t.fixed, e.param).name();
        row["indeterminate"] = e.indeterminate;
        if (e.indeterminate)
            row["message"] = e.message;
        else
            row["report"] = report_value(e.report);
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    out["wlp_params"] = t.wlp_params();
    return dump(out);
}

std::string sweep_csv(const SweepTable& t) {
    std::ostringstream os;
    os << "family,param,has_wlp,fail_degree,fail_kind,seconds\n";
    std::string family = csv_field(family_label(t.family, t.fixed));
    for (const SweepEntry& e : t.entries) {
        os << family << ',' << e.param << ',';
        if (e.indeterminate) {
            os << "indeterminate,,,\n";
            continue;
        }
        const WlpReport& r = e.report;
        os << (r.has_wlp ? "true" : "false") << ',';
        if (r.fail_degree()) os << *r.fail_degree();
        os << ',';
        if (r.fail_kind()) os << to_string(*r.fail_kind());
        os << ',' << fixed3(r.total_seconds) << '\n';
    }
    return os.str();
}

std::string reproduce_json(const std::vector<ReproduceReport>& reps) {
    json out = json::array();
    for (const ReproduceReport& r : reps) {
        json rep;
        rep["target"] = r.target;
        rep["claim"] = r.claim;
        rep["ok"] = r.ok;
        rep["lines"] = lines_value(r.lines);
        rep["seconds"] = r.seconds;
        out.push_back(std::move(rep));
    }
    return dump(out);
}

std::string crosscheck_json(const CrosscheckReport& r) {
    json out;
    out["ok"] = r.ok;
    out["polynomial_checks"] = r.polynomial_checks;
    out["rank_checks"] = r.rank_checks;
    out["lines"] = lines_value(r.lines);
    out["seconds"] = r.seconds;
    return dump(out);
}

} // namespace wlp
