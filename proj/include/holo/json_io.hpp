#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "holo/guesser.hpp"
#include "holo/holonomy.hpp"
#include "holo/number_theory.hpp"
#include "holo/oscillation.hpp"

namespace holo {

using Json = nlohmann::ordered_json;

// Rationals serialize as ["num", "den"] (decimal strings); Gaussian
// rationals as {"re": [..], "im": [..]} with "im" omitted when zero.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const Scalar& z);
Json to_json(const UniPoly& p);
Json to_json(const BiPoly& h);
Json to_json(const RationalInterval& iv);
Json to_json(const LinearODE& ode);
Json to_json(const PRecurrence& rec);
Json to_json(const BoundReport& r);
Json to_json(const CharSumReport& r);
Json to_json(const AlgebraicGuess& g);
Json to_json(const DpnResult& r);
Json to_json(const ConditionStatus& c);
Json to_json(const IntervalPlan& plan);
Json to_json(const DeltaSearchResult& r);
Json to_json(const LemmaReport& r);
Json to_json(const LegendreChainReport& r);

Rational rational_from_json(const Json& j);
Scalar scalar_from_json(const Json& j);
UniPoly unipoly_from_json(const Json& j);
PRecurrence recurrence_from_json(const Json& j);

/// Integer coefficient grid: one row per Y-degree (lowest first), entries
/// are X-degree coefficients, whitespace or comma separated. An optional
/// first line starting with '#' is a comment. Throws parse_error.
BiPoly parse_h_grid(const std::string& text);

/// Comma or whitespace separated rationals ("3", "-2/5"). Throws parse_error.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace holo
