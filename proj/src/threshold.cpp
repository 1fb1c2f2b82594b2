#include "hdisc/threshold.hpp"

#include "hdisc/errors.hpp"
#include "hdisc/structure.hpp"

namespace hdisc {

std::string theorem_case_name(TheoremCase c) {
    switch (c) {
        case TheoremCase::BipartiteRegular: return "bipartite-regular";
        case TheoremCase::BipartiteComponentDensity: return "bipartite-component-density";
        case TheoremCase::BipartiteChiStar: return "bipartite-chi-star";
        case TheoremCase::TriRegular: return "tri-regular";
        case TheoremCase::TriButterfly: return "tri-butterfly";
        case TheoremCase::TriDefault: return "tri-default";
        case TheoremCase::RCond1: return "r-cond1";
        case TheoremCase::RCond2: return "r-cond2";
        case TheoremCase::RDefault: return "r-default";
    }
    return "?";
}

std::pair<bool, bool> conditions(const Graph& h) {
    int r = chromatic_number(h);
    if (r < 4) throw ContractViolation("conditions: chromatic number must be at least 4");
    bool regular = graph_basics(h).is_regular;
    bool c4_r1 = satisfies_c4(h, r + 1).holds;
    bool cond1 = c4_r1 && (r % 4 == 0 || regular);
    bool cond2 = regular && satisfies_c4(h, r).holds;
    return {cond1, cond2};
}

ThresholdReport delta_star(const Graph& h) {
    if (h.edge_count() == 0) throw ContractViolation("delta_star: graph without edges");
    ThresholdReport rep;
    rep.profile = chromatic_profile(h);
    const int r = rep.profile.r;
    GraphBasics basics = graph_basics(h);
    rep.regular = basics.is_regular;

    auto note = [&](const std::string& name, const std::string& value) {
        rep.trace.emplace_back(name, value);
    };
    note("chromatic_number", std::to_string(r));
    note("regular", rep.regular ? "true" : "false");
    note("chi_star", rat_to_string(rep.profile.chi_star));

    const Rational one{1};
    Rational chi_star_bound = one - one / rep.profile.chi_star;

    if (r == 2) {
        rep.delta0_value = 0; // every blowup of K_2 is monochromatic
        note("delta0", "0");
        rep.component_density = basics.component_density;
        if (rep.regular) {
            rep.theorem_case = TheoremCase::BipartiteRegular;
            rep.delta_star = rat(3, 4);
        } else if (basics.component_density && *basics.component_density > 0) {
            note("component_density", rat_to_string(*basics.component_density));
            rep.theorem_case = TheoremCase::BipartiteComponentDensity;
            rep.delta_star = rat(1, 2);
        } else {
            note("component_density", basics.component_density
                                          ? rat_to_string(*basics.component_density)
                                          : "none");
            rep.theorem_case = TheoremCase::BipartiteChiStar;
            rep.delta_star = chi_star_bound;
        }
        return rep;
    }

    if (r == 3) {
        if (rep.regular) {
            // the trace still records delta0 for the report invariants
            rep.delta0_detail = delta0(h);
            rep.delta0_value = rep.delta0_detail->value;
            note("delta0", rat_to_string(rep.delta0_value));
            rep.theorem_case = TheoremCase::TriRegular;
            rep.delta_star = rat(3, 4);
            return rep;
        }
        rep.delta0_detail = delta0(h);
        rep.delta0_value = rep.delta0_detail->value;
        note("delta0", rat_to_string(rep.delta0_value));
        ButterflyStatus st = butterfly_status(h);
        for (int t = 0; t < 3; ++t) rep.butterfly_is_template[t] = st.by_type[t].is_template;
        rep.some_butterfly_nontemplate = st.some_nontemplate;
        note("some_butterfly_nontemplate", st.some_nontemplate ? "true" : "false");
        Rational base = std::max(chi_star_bound, rep.delta0_value);
        if (st.some_nontemplate) {
            rep.theorem_case = TheoremCase::TriButterfly;
            rep.delta_star = std::max(base, rat(4, 7));
        } else {
            rep.theorem_case = TheoremCase::TriDefault;
            rep.delta_star = base;
        }
        return rep;
    }

    // r >= 4: condition 1 before condition 2 before the default branch
    auto [c1, c2] = conditions(h);
    rep.cond1 = c1;
    rep.cond2 = c2;
    note("condition1", c1 ? "true" : "false");
    note("condition2", c2 ? "true" : "false");
    rep.delta0_detail = delta0(h);
    rep.delta0_value = rep.delta0_detail->value;
    note("delta0", rat_to_string(rep.delta0_value));

    if (c1) {
        rep.theorem_case = TheoremCase::RCond1;
        rep.delta_star = one - one / Rational(r + 1);
    } else if (c2) {
        rep.theorem_case = TheoremCase::RCond2;
        rep.delta_star = one - one / Rational(r);
    } else {
        rep.theorem_case = TheoremCase::RDefault;
        rep.delta_star = std::max(chi_star_bound, rep.delta0_value);
    }
    return rep;
}

} // namespace hdisc
