#pragma once

#include <json.hpp>

#include "hdisc/hstar.hpp"
#include "hdisc/oracle.hpp"
#include "hdisc/structure.hpp"
#include "hdisc/threshold.hpp"
#include "hdisc/witness.hpp"

namespace hdisc {

// Stable, ordered JSON everywhere; rationals as {"num","den"} decimal
// strings so downstream consumers never overflow.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Graph& g);
Json to_json(const ColoredGraph& g);
Json to_json(const LabeledColoring& f);
Json to_json(const Homomorphism& hom);
Json to_json(const ExplicitFactor& f);
ExplicitFactor factor_from_json(const Json& j);

Json to_json(const ChromaticProfile& p);
Json to_json(const GraphBasics& b);
Json to_json(const C4Report& r);
Json to_json(const StructuredSolution& s);
Json to_json(const BalancedUniformReport& r);
Json to_json(const TemplateDecision& d);
Json to_json(const Delta0Result& d);
Json to_json(const ButterflyStatus& s);
Json to_json(const ThresholdReport& r);
Json to_json(const TemplateWitness& w);
Json to_json(const WitnessResult& w);
Json to_json(const LowerBoundConstruction& c);
Json to_json(const LowerBoundResult& r);
Json to_json(const HStarResult& r);
Json to_json(const DiscrepancySummary& s);
Json to_json(const FactorCheck& c);
Json to_json(const BruteforceTemplateResult& r);

std::string summary_text(const ThresholdReport& r);

} // namespace hdisc
