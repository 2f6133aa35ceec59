#pragma once

/**
 * @file report.hpp
 * @brief JSON and CSV reports for the command-line front-end. Rationals are
 * always written as "num/den"; field order is fixed.
 */

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "code.hpp"
#include "config.hpp"
#include "graph.hpp"
#include "hom_weight.hpp"
#include "teichmuller.hpp"
#include "verify.hpp"

namespace homring {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) { return to_fraction_string(r); }

inline Json inputs_json(const Job& job) {
    Json j;
    j["ring"] = job.R->spec();
    j["subring"] = job.S->spec();
    j["trace"] = job.trace.name;
    j["f"] = job.f ? Json(job.f->description) : Json(nullptr);
    j["gamma"] = rational_json(job.gamma);
    j["weight"] = to_string(job.config.weight);
    j["seed"] = job.config.seed;
    return j;
}

inline Json ring_info_report(const Ring& R) {
    Json j;
    j["ring"] = R.spec();
    j["family"] = to_string(R.family());
    j["order"] = R.order();
    j["characteristic"] = R.characteristic();
    j["units"] = R.units().size();
    j["radical_order"] = R.radical().size();
    j["socle_order"] = R.socle().size();
    j["is_local"] = R.is_local();
    if (R.is_local()) {
        const auto td = teichmuller(R);
        j["residue_field_order"] = td.q;
        Json t = Json::array();
        for (Elem e : td.elements) t.push_back(R.render(e));
        j["teichmuller"] = t;
    }
    Json soc = Json::array();
    for (Elem e : R.socle().elements) soc.push_back(R.render(e));
    j["socle"] = soc;
    return j;
}

inline Json trace_values_json(const TraceMap& T) {
    Json v = Json::array();
    for (Elem a = 0; a < T.source->order(); ++a) v.push_back(T.target->render(T(a)));
    return v;
}

inline Json trace_list_report(const RingPtr& R, const RingPtr& S) {
    const auto all = enumerate_trace_maps(R, S);
    Json j;
    j["ring"] = R->spec();
    j["subring"] = S->spec();
    j["count"] = all.size();
    Json list = Json::array();
    for (const auto& T : all) {
        Json t;
        t["name"] = T.name;
        t["values"] = trace_values_json(T);
        list.push_back(t);
    }
    j["traces"] = list;
    return j;
}

/// Builds the configured trace without throwing on failure and reports the validation.
inline Json trace_check_report(const JobConfig& cfg) {
    const auto R = parse_ring(cfg.ring);
    const auto S = cfg.subring ? parse_ring(*cfg.subring) : R;
    Json j;
    j["ring"] = R->spec();
    j["subring"] = S->spec();
    j["trace"] = cfg.trace.value_or("default");
    try {
        const auto T = cfg.trace ? parse_trace(*cfg.trace, R, S) : default_trace(R, S);
        j["valid"] = true;
        j["failure"] = nullptr;
        j["witness"] = nullptr;
        j["values"] = trace_values_json(T);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ValidationFailed) throw;
        j["valid"] = false;
        // Message shape: "ValidationFailed: <failure> (<name>): <witness>".
        std::string what = e.what();
        what.erase(0, what.find(": ") + 2);
        const auto paren = what.find(" (");
        const auto sep = what.find("): ");
        j["failure"] = what.substr(0, paren);
        j["witness"] = sep == std::string::npos ? "" : what.substr(sep + 3);
        j["values"] = nullptr;
    }
    return j;
}

/// The weight table on S selected by the job.
inline WeightTable job_weight(const Job& job) {
    if (job.config.weight == WeightKind::Hamming) return hamming_table(job.S);
    return hom_weight_axiomatic(job.S, job.gamma);
}

inline std::string weight_table_csv(const WeightTable& wt) {
    const Ring& R = *wt.ring;
    const auto cs = cyclic_submodules(R);
    std::string out = "element,orbit,weight\n";
    for (Elem x = 0; x < R.order(); ++x)
        out += R.render(x) + "," + R.render(cs.generators[cs.class_of[x]].front()) + "," +
               to_fraction_string(wt(x)) + "\n";
    return out;
}

inline Json weight_table_report(const WeightTable& wt) {
    const Ring& R = *wt.ring;
    const auto cs = cyclic_submodules(R);
    Json j;
    j["ring"] = R.spec();
    j["gamma"] = rational_json(wt.gamma);
    Json rows = Json::array();
    for (Elem x = 0; x < R.order(); ++x) {
        Json r;
        r["element"] = R.render(x);
        r["orbit"] = R.render(cs.generators[cs.class_of[x]].front());
        r["weight"] = rational_json(wt(x));
        rows.push_back(r);
    }
    j["table"] = rows;
    return j;
}

inline const CodeFunction& require_function(const Job& job) {
    if (!job.f) fail(ErrorKind::ParseError, "this command needs a function: set f=");
    return *job.f;
}

inline Json enumerator_json(const WeightEnumerator& e) {
    Json list = Json::array();
    for (const auto& [w, c] : e.counts) {
        Json t;
        t["weight"] = rational_json(w);
        t["count"] = c;
        list.push_back(t);
    }
    return list;
}

inline Json analyze_report(const Job& job) {
    const auto& f = require_function(job);
    const Code code = build_code(job.trace, f, job.budget);
    const auto enumerator = weight_enumerator(code, job_weight(job), job.config.weight);
    Json j;
    j["ring"] = job.R->spec();
    j["subring"] = job.S->spec();
    j["trace"] = job.trace.name;
    j["f"] = f.description;
    j["inputs"] = inputs_json(job);
    j["size"] = code.size();
    Json spec = Json::array();
    for (const auto& v : spectrum(job.trace, f, job.budget)) spec.push_back(rational_json(v));
    j["spectrum"] = spec;
    j["enumerator"] = enumerator_json(enumerator);
    j["enumerator_text"] = enumerator.to_string();
    return j;
}

inline std::string analyze_csv(const Job& job) {
    const auto& f = require_function(job);
    const Code code = build_code(job.trace, f, job.budget);
    const auto enumerator = weight_enumerator(code, job_weight(job), job.config.weight);
    std::string out = "weight,count\n";
    for (const auto& [w, c] : enumerator.counts) out += to_fraction_string(w) + "," + std::to_string(c) + "\n";
    return out;
}

inline Json graph_report(const Job& job) {
    const auto& f = require_function(job);
    const Code code = build_code(job.trace, f, job.budget);
    const auto g = two_weight_graph(code, job_weight(job));
    const auto srg = srg_check(g);
    const auto comps = connected_components(g);
    const auto mod = is_modular(*job.R, generator_columns(f));
    Json j;
    j["inputs"] = inputs_json(job);
    j["vertices"] = g.vertex_count();
    j["w1"] = rational_json(g.w1);
    bool regular = true;
    for (std::size_t v = 1; v < g.vertex_count() && regular; ++v) regular = g.degree(v) == g.degree(0);
    j["regular_degree"] = regular && g.vertex_count() > 0 ? Json(g.degree(0)) : Json(nullptr);
    if (srg.ok()) {
        Json s;
        s["v"] = srg.params->v;
        s["k"] = srg.params->k;
        s["lambda"] = srg.params->lambda;
        s["mu"] = srg.params->mu;
        s["degenerate"] = srg.degenerate;
        j["srg"] = s;
    } else {
        j["srg"] = nullptr;
        j["srg_violation"] = srg.violation;
    }
    j["components"] = comps.sizes;
    Json m;
    m["is_modular"] = mod.is_modular;
    m["r"] = mod.r ? rational_json(*mod.r) : Json(nullptr);
    j["modular"] = m;
    return j;
}

inline Json verify_report(const std::vector<VerifyRecord>& records) {
    Json j;
    Json list = Json::array();
    for (const auto& r : records) {
        Json t;
        t["id"] = r.id;
        t["name"] = r.name;
        t["expected"] = r.expected;
        t["computed"] = r.computed;
        t["pass"] = r.pass;
        t["informational"] = r.informational;
        list.push_back(t);
    }
    j["criteria"] = list;
    j["pass"] = suite_passes(records);
    return j;
}

}  // namespace homring
