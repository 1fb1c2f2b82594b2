#include "hdisc/report.hpp"

#include <sstream>

namespace hdisc {

Json to_json(const Rational& q) {
    return Json{{"num", num_string(q)}, {"den", den_string(q)}};
}

Rational rational_from_json(const Json& j) {
    return rat_from_string(j.at("num").get<std::string>()) /
           rat_from_string(j.at("den").get<std::string>());
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    return Json{{"n", g.n()}, {"edges", edges}};
}

Json to_json(const ColoredGraph& g) {
    Json edges = Json::array();
    for (size_t i = 0; i < g.graph.edges().size(); ++i) {
        const auto& [u, v] = g.graph.edges()[i];
        edges.push_back(Json::array({u, v, g.color[i]}));
    }
    return Json{{"n", g.graph.n()}, {"edges", edges}};
}

Json to_json(const LabeledColoring& f) {
    return Json{{"k", f.k}, {"assignment", f.assignment}};
}

Json to_json(const Homomorphism& hom) { return Json{{"map", hom.map}}; }

Json to_json(const ExplicitFactor& f) {
    Json copies = Json::array();
    for (const auto& c : f.copies) copies.push_back(c);
    return Json{{"copies", copies}};
}

ExplicitFactor factor_from_json(const Json& j) {
    ExplicitFactor f;
    for (const auto& c : j.at("copies")) f.copies.push_back(c.get<std::vector<int>>());
    return f;
}

Json to_json(const ChromaticProfile& p) {
    Json d = Json::array();
    for (long x : p.d_set) d.push_back(x);
    return Json{{"r", p.r},
                {"sigma", p.sigma},
                {"chi_cr", to_json(p.chi_cr)},
                {"d_set", d},
                {"hcf_chi", p.hcf_chi},
                {"hcf_c", p.hcf_c},
                {"hcf_is_one", p.hcf_is_one},
                {"chi_star", to_json(p.chi_star)}};
}

Json to_json(const GraphBasics& b) {
    Json comps = Json::array();
    for (const auto& c : b.components) comps.push_back(c);
    Json j{{"components", comps},
           {"degrees", b.degrees},
           {"is_regular", b.is_regular},
           {"hcf_c", b.hcf_c}};
    if (b.is_regular) j["common_degree"] = b.common_degree;
    j["component_density"] =
        b.component_density ? to_json(*b.component_density) : Json(nullptr);
    return j;
}

Json to_json(const C4Report& r) {
    Json j{{"k", r.k}, {"holds", r.holds}};
    if (r.counterexample) {
        j["counterexample"] = Json{{"coloring", to_json(r.counterexample->first)},
                                   {"quadruple", r.counterexample->second}};
    }
    return j;
}

Json to_json(const StructuredSolution& s) {
    Json basis = Json::array();
    for (const auto& v : s.basis) {
        Json row = Json::array();
        for (const auto& q : v) row.push_back(to_json(q));
        basis.push_back(row);
    }
    return Json{{"dimension", s.basis.size()}, {"basis", basis}};
}

Json to_json(const BalancedUniformReport& r) {
    Json cert = Json::array();
    for (const auto& [f, w] : r.certificate)
        cert.push_back(Json{{"coloring", to_json(f)}, {"weight", w.get_str()}});
    return Json{{"exists_nonbalanced", r.exists_nonbalanced}, {"certificate", cert}};
}

Json to_json(const TemplateDecision& d) {
    Json j{{"is_template", d.is_template}, {"lp_value", to_json(d.lp_value)}};
    if (!d.note.empty()) j["note"] = d.note;
    if (d.certificate) {
        Json fa = Json::array(), fb = Json::array();
        for (const auto& [hom, w] : d.certificate->factor_a)
            fa.push_back(Json{{"map", hom.map}, {"weight", w.get_str()}});
        for (const auto& [hom, w] : d.certificate->factor_b)
            fb.push_back(Json{{"map", hom.map}, {"weight", w.get_str()}});
        j["certificate"] = Json{{"part_sizes", d.certificate->part_sizes},
                                {"factor_a", fa},
                                {"factor_b", fb},
                                {"disc_a", d.certificate->disc_a.get_str()},
                                {"disc_b", d.certificate->disc_b.get_str()}};
    }
    return j;
}

Json to_json(const Delta0Result& d) {
    Json j{{"r", d.r}, {"value", to_json(d.value)}};
    if (d.witness) {
        Json ratios = Json::array();
        for (const auto& q : d.witness->part_ratios) ratios.push_back(to_json(q));
        Json factor = Json::array();
        for (const auto& [hom, w] : d.witness->zero_disc_factor)
            factor.push_back(Json{{"map", hom.map}, {"weight", w.get_str()}});
        j["witness"] = Json{{"coloring", to_json(kr_coloring_from_mask(d.r, d.witness->coloring_mask))},
                            {"part_ratios", ratios},
                            {"scale", d.witness->scale.get_str()},
                            {"zero_disc_factor", factor}};
    }
    j["nontemplate_count"] = d.nontemplate_masks.size();
    j["nontemplate_masks"] = d.nontemplate_masks;
    return j;
}

Json to_json(const ButterflyStatus& s) {
    return Json{{"type1", to_json(s.by_type[0])},
                {"type2", to_json(s.by_type[1])},
                {"type3", to_json(s.by_type[2])},
                {"some_nontemplate", s.some_nontemplate}};
}

Json to_json(const ThresholdReport& r) {
    Json j{{"delta_star", to_json(r.delta_star)},
           {"theorem_case", theorem_case_name(r.theorem_case)},
           {"profile", to_json(r.profile)},
           {"regular", r.regular},
           {"delta0", to_json(r.delta0_value)}};
    if (r.delta0_detail) j["delta0_detail"] = to_json(*r.delta0_detail);
    if (r.profile.r == 3) {
        j["butterfly_is_template"] = r.butterfly_is_template;
        j["some_butterfly_nontemplate"] = r.some_butterfly_nontemplate;
    }
    if (r.profile.r >= 4) {
        j["cond1"] = r.cond1;
        j["cond2"] = r.cond2;
    }
    if (r.profile.r == 2)
        j["component_density"] =
            r.component_density ? to_json(*r.component_density) : Json(nullptr);
    Json trace = Json::array();
    for (const auto& [k, v] : r.trace) trace.push_back(Json{{"predicate", k}, {"value", v}});
    j["trace"] = trace;
    return j;
}

Json to_json(const TemplateWitness& w) {
    return Json{{"frame", to_json(w.spec.frame.colored)},
                {"frame_name", w.spec.frame.name},
                {"sizes", w.spec.sizes},
                {"factor_a", to_json(w.factor_a)},
                {"factor_b", to_json(w.factor_b)},
                {"disc_a", w.disc_a},
                {"disc_b", w.disc_b},
                {"expected_difference", w.expected_difference}};
}

Json to_json(const WitnessResult& w) {
    if (!w.ok()) return Json{{"ok", false}, {"refusal", w.refusal}};
    Json j = to_json(*w.witness);
    j["ok"] = true;
    return j;
}

Json to_json(const LowerBoundConstruction& c) {
    const char* claim = c.claim == FactorClaim::AllFactorsZero
                            ? "all_factors_zero"
                            : (c.claim == FactorClaim::AllFactorsEqual ? "all_factors_equal"
                                                                       : "no_factor");
    return Json{{"provenance", c.provenance},
                {"min_degree_ratio", to_json(c.min_degree_ratio)},
                {"claim", claim},
                {"colored_graph", to_json(c.colored_graph)}};
}

Json to_json(const LowerBoundResult& r) {
    if (!r.ok()) return Json{{"ok", false}, {"refusal", r.refusal}};
    Json j = to_json(*r.construction);
    j["ok"] = true;
    return j;
}

Json to_json(const HStarResult& r) {
    Json j{{"trivial", r.trivial}, {"alpha", to_json(r.alpha)}};
    if (!r.trivial) {
        j["part_sizes"] = r.part_sizes;
        j["shortcut_balanced"] = r.shortcut_balanced;
        Json plan = Json::array();
        for (const auto& block : r.factor_plan)
            plan.push_back(Json{{"coloring", to_json(block.coloring)},
                                {"part_of_class", block.part_of_class},
                                {"multiplicity", block.multiplicity}});
        j["factor_plan"] = plan;
        if (!r.shortcut_balanced) {
            Json bez = Json::array();
            for (const auto& [s, x] : r.bezout) bez.push_back(Json{{"gap", s}, {"coeff", x}});
            j["internals"] = Json{{"beta", to_json(r.beta)}, {"k", r.k},
                                  {"ell", r.ell},        {"M", r.big_m},
                                  {"bezout", bez},       {"b1_sizes", r.b1_sizes},
                                  {"b2_sizes", r.b2_sizes}, {"b3_sizes", r.b3_sizes},
                                  {"b4_sizes", r.b4_sizes}};
        }
    }
    if (r.h_star) j["graph"] = to_json(*r.h_star);
    if (r.factor) j["factor"] = to_json(*r.factor);
    return j;
}

Json to_json(const DiscrepancySummary& s) {
    Json values = Json::array();
    for (const auto& [d, count] : s.values)
        values.push_back(Json{{"discrepancy", d}, {"count", count}});
    return Json{{"factor_count", s.factor_count},
                {"truncated", s.truncated},
                {"values", values}};
}

Json to_json(const FactorCheck& c) {
    Json j{{"valid", c.valid}};
    if (c.valid) j["discrepancy"] = c.discrepancy;
    else j["reason"] = c.reason;
    return j;
}

Json to_json(const BruteforceTemplateResult& r) {
    if (!r.found) return Json{{"found", false}};
    return Json{{"found", true},
                {"sizes", r.sizes},
                {"disc_a", r.disc_a},
                {"disc_b", r.disc_b},
                {"factor_a", to_json(r.factor_a)},
                {"factor_b", to_json(r.factor_b)}};
}

std::string summary_text(const ThresholdReport& r) {
    std::ostringstream out;
    out << "delta_star = " << rat_to_string(r.delta_star) << "  ["
        << theorem_case_name(r.theorem_case) << "]\n";
    out << "chi = " << r.profile.r << ", sigma = " << r.profile.sigma
        << ", chi_cr = " << rat_to_string(r.profile.chi_cr)
        << ", chi_star = " << rat_to_string(r.profile.chi_star) << "\n";
    out << "delta0 = " << rat_to_string(r.delta0_value) << ", regular = "
        << (r.regular ? "yes" : "no") << "\n";
    for (const auto& [k, v] : r.trace) out << "  " << k << " = " << v << "\n";
    return out.str();
}

} // namespace hdisc
