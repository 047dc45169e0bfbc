#include "holo/json_io.hpp"

#include <sstream>

#include "holo/errors.hpp"

namespace holo {

Json to_json(const Rational& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const Scalar& z) {
    Json j{{"re", to_json(z.re())}};
    if (!z.is_real()) j["im"] = to_json(z.im());
    return j;
}

Json to_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

Json to_json(const BiPoly& h) {
    Json rows = Json::array();
    for (const auto& r : h.rows()) rows.push_back(to_json(r));
    return rows;
}

Json to_json(const RationalInterval& iv) {
    return {{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"approx", to_double(iv.hi)}};
}

Json to_json(const LinearODE& ode) {
    Json cs = Json::array();
    for (const auto& q : ode.coeffs) cs.push_back(to_json(q));
    return {{"order", ode.order()}, {"max_coeff_degree", ode.max_coeff_degree()}, {"coeffs", cs}};
}

Json to_json(const PRecurrence& rec) {
    Json cs = Json::array();
    for (const auto& p : rec.coeffs) cs.push_back(to_json(p));
    return {{"order", rec.order()}, {"max_coeff_degree", rec.max_coeff_degree()}, {"coeffs", cs}};
}

Json to_json(const BoundReport& r) {
    return {{"quantity", r.quantity},
            {"measured", r.measured},
            {"bound", r.bound},
            {"satisfied", r.satisfied},
            {"formula", r.formula}};
}

Json to_json(const CharSumReport& r) {
    Json j{{"p", r.p}};
    j["shift_pair"] = r.shift_pair ? Json::array({r.shift_pair->first, r.shift_pair->second}) : Json(nullptr);
    j["start"] = r.start;
    j["length"] = r.length;
    j["value"] = r.value;
    j["normalized"] = r.normalized;
    return j;
}

Json to_json(const AlgebraicGuess& g) {
    Json grid = Json::array();
    for (int b = 0; b <= g.h.deg_y(); ++b) {
        Json row = Json::array();
        for (int a = 0; a <= g.h.deg_x(); ++a) row.push_back(g.h.coeff(a, b).re().get_num().get_str());
        grid.push_back(row);
    }
    return {{"h", grid},
            {"per_variable_degree", g.per_variable_degree},
            {"total_degree", g.h.total_degree()},
            {"residual_order", g.residual_order}};
}

Json to_json(const DpnResult& r) {
    return {{"p", r.p},
            {"N", r.n},
            {"d", r.d},
            {"witness_h", to_json(r.witness)["h"]},
            {"witness_total_degree", r.witness_total_degree},
            {"theorem_reference_value", r.theorem_reference},
            {"ratio", r.d / r.theorem_reference},
            {"outside_regime", r.outside_regime}};
}

Json to_json(const ConditionStatus& c) { return {{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}}; }

namespace {
Json conditions(const std::vector<ConditionStatus>& cs) {
    Json arr = Json::array();
    for (const auto& c : cs) arr.push_back(to_json(c));
    return arr;
}
}  // namespace

Json to_json(const IntervalPlan& plan) {
    Json rs = Json::array();
    for (const auto& r : plan.r_sequence) rs.push_back(r.get_str());
    return {{"a", plan.a.get_str()},
            {"b", plan.b.get_str()},
            {"L", plan.L},
            {"A", to_json(plan.A)},
            {"D", plan.D},
            {"m", plan.m},
            {"r_sequence", rs},
            {"chosen_index", plan.chosen_index},
            {"certification", conditions(plan.certification)},
            {"alternative_a", plan.alternative_a.get_str()},
            {"padded_disjoint", plan.padded_disjoint},
            {"padded_min_gap", plan.padded_min_gap.get_str()},
            {"b_cap", to_json(plan.b_cap)},
            {"below_cap", plan.below_cap}};
}

Json to_json(const DeltaSearchResult& r) {
    return {{"witness_found", r.witness_found},
            {"n", r.n},
            {"delta_value", to_json(r.delta)},
            {"bound", to_json(r.bound)},
            {"below_bound", r.below_bound},
            {"m", r.m},
            {"D", r.D},
            {"kappa", to_json(r.kappa)},
            {"tau", to_json(r.tau)},
            {"note", r.note}};
}

Json to_json(const LemmaReport& r) {
    Json j{{"lemma", r.lemma},
           {"hypothesis_status", conditions(r.hypotheses)},
           {"hypotheses_hold", r.hypotheses_hold},
           {"lhs", to_json(r.lhs)},
           {"rhs", to_json(r.rhs)},
           {"conclusion_holds", r.conclusion_holds}};
    j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    j["verdict"] = r.verdict;
    return j;
}

Json to_json(const LegendreChainReport& r) {
    return {{"p", r.p},
            {"kappa", to_json(r.kappa)},
            {"tau_scan", to_json(r.tau_scan)},
            {"tau_window", to_json(r.tau_window)},
            {"iterations", r.iterations},
            {"plan", to_json(r.plan)},
            {"lemma33", to_json(r.lemma33)},
            {"search", to_json(r.search)},
            {"witness_in_window", r.witness_in_window}};
}

Rational rational_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_array() && j.size() == 2)
            return make_rational(Integer(j[0].get<std::string>()), Integer(j[1].get<std::string>()));
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad rational in JSON: ") + e.what());
    }
    throw parse_error("bad rational in JSON: " + j.dump());
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_object()) {
        if (!j.contains("re")) throw parse_error("scalar object needs \"re\"");
        Rational re = rational_from_json(j.at("re"));
        Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
        return Scalar(re, im);
    }
    return Scalar(rational_from_json(j));
}

UniPoly unipoly_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("polynomial must be a JSON array");
    std::vector<Scalar> c;
    for (const auto& x : j) c.push_back(scalar_from_json(x));
    return UniPoly(c);
}

PRecurrence recurrence_from_json(const Json& j) {
    const Json* src = &j;
    if (j.is_object()) {
        const Json& outer = j.contains("recurrence") ? j["recurrence"] : j;
        if (!outer.is_object() || !outer.contains("coeffs")) throw parse_error("recurrence object needs a 'coeffs' field");
        src = &outer["coeffs"];
    }
    const Json& cs = *src;
    if (!cs.is_array() || cs.empty()) throw parse_error("recurrence needs a nonempty coefficient list");
    PRecurrence rec;
    for (const auto& p : cs) rec.coeffs.push_back(unipoly_from_json(p));
    if (rec.coeffs.back().is_zero()) throw parse_error("recurrence leading coefficient is zero");
    return rec;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::string s = line;
    for (char& c : s)
        if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

}  // namespace

BiPoly parse_h_grid(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::vector<Integer>> grid;
    std::string line;
    bool first = true;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (first && !line.empty() && line[0] == '#') {
            first = false;
            continue;
        }
        first = false;
        auto toks = tokens(line);
        if (toks.empty()) continue;
        std::vector<Integer> row;
        for (const auto& t : toks) {
            Integer z;
            if (z.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0)
                throw parse_error("line " + std::to_string(lineno) + ": not an integer: '" + t + "'");
            row.push_back(z);
        }
        grid.push_back(std::move(row));
    }
    if (grid.empty()) throw parse_error("empty coefficient grid");
    std::vector<UniPoly> rows;
    for (const auto& r : grid) {
        std::vector<Scalar> c;
        for (const auto& z : r) c.emplace_back(Rational(z));
        rows.emplace_back(c);
    }
    BiPoly h(rows);
    if (h.is_zero()) throw parse_error("coefficient grid is identically zero");
    return h;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& t : tokens(text)) out.push_back(parse_rational(t));
    if (out.empty()) throw parse_error("empty list of terms");
    return out;
}

}  // namespace holo
