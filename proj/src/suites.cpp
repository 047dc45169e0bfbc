#include "holo/suites.hpp"

#include <algorithm>

#include "holo/corpus.hpp"
#include "holo/errors.hpp"
#include "holo/parallel.hpp"
#include "holo/random.hpp"

namespace holo {

namespace {

IntSequence legendre(const FeketeSeries& fs) {
    return [&fs](std::int64_t n) { return static_cast<std::int64_t>(fs(n)); };
}

Json poly_list(const std::vector<UniPoly>& qs) {
    Json arr = Json::array();
    for (const auto& q : qs) arr.push_back(to_json(q));
    return arr;
}

}  // namespace

std::int64_t legendre_pair_tau(const PrimeModulus& p, unsigned workers) {
    // Pairs 1 <= j < h <= 3 have differences 1 and 2; every start residue is scanned.
    std::int64_t tau = 0;
    for (std::int64_t d : {1, 2})
        tau = std::max(tau, std::abs(max_incomplete_sum(p, p.value(), std::make_pair(std::int64_t{0}, d), workers).value));
    return tau;
}

SuiteResult legendre_delta_suite(std::uint64_t seed, unsigned workers, std::size_t trials) {
    const PrimeModulus p(101);
    FeketeSeries fs(p);
    IntSequence f = legendre(fs);
    const std::int64_t tau = legendre_pair_tau(p, workers);
    const Rational kappa(1), tau_q(Integer(static_cast<long>(tau)));
    std::vector<DeltaSearchResult> res(trials);
    std::vector<std::vector<UniPoly>> qs(trials);
    parallel_for(trials, workers, [&](std::size_t t) {
        Rng rng = Rng::for_item(seed, 7, t);
        for (int j = 0; j < 3; ++j) qs[t].push_back(random_gaussian_poly(rng, 2, 5, true));
        res[t] = delta_search(f, qs[t], kappa, tau_q);
    });
    SuiteResult out;
    out.name = "legendre";
    Json bad = Json::array();
    std::int64_t max_n = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        max_n = std::max(max_n, res[t].n);
        if (!res[t].witness_found || !res[t].below_bound)
            bad.push_back({{"trial", t}, {"Qs", poly_list(qs[t])}, {"result", to_json(res[t])}});
    }
    out.ok = bad.empty();
    out.summary = std::to_string(trials) + " trials, tau = " + std::to_string(tau) + ", bound ~ " +
                  std::to_string(static_cast<long long>(trials ? to_double(res[0].bound.lo) : 0.0)) +
                  ", max witness n = " + std::to_string(max_n) + ", " + std::to_string(bad.size()) + " violations";
    out.details["p"] = p.value();
    out.details["tau"] = tau;
    if (trials) out.details["bound"] = to_json(res[0].bound);
    out.details["max_witness_n"] = max_n;
    Json ns = Json::array();
    for (const auto& r : res) ns.push_back(r.n);
    out.details["witness_n"] = ns;
    out.details["counterexamples"] = bad;
    return out;
}

SuiteResult constant_delta_smoke() {
    IntSequence one = [](std::int64_t) { return std::int64_t{1}; };
    auto r = delta_search(one, {UniPoly::constant(Scalar(1))}, Rational(1), Rational(1));
    SuiteResult out;
    out.name = "constant";
    out.ok = r.witness_found && r.n == 0 && r.below_bound;
    out.summary = "f = 1, Q = [1]: witness n = " + std::to_string(r.n) + ", bound ~ " + std::to_string(to_double(r.bound.hi));
    out.details = to_json(r);
    return out;
}

SuiteResult interval_grid_suite(std::uint64_t seed, unsigned workers) {
    struct Cell {
        int A, D, m;
    };
    std::vector<Cell> cells;
    for (int A : {1, 10, 100})
        for (int D : {1, 2, 3})
            for (int m : {1, 2, 3}) cells.push_back({A, D, m});
    std::vector<Json> rows(cells.size());
    std::vector<bool> ok(cells.size(), false), touching(cells.size(), false);
    parallel_for(cells.size(), workers, [&](std::size_t i) {
        const Cell& c = cells[i];
        Rng rng = Rng::for_item(seed, 8, i);
        std::vector<UniPoly> qs;
        for (int j = 0; j < c.m; ++j) qs.push_back(random_gaussian_poly(rng, c.D, 5, true));
        Json cell{{"A", c.A}, {"D", c.D}, {"m", c.m}, {"Qs", poly_list(qs)}};
        try {
            IntervalPlan plan = interval_plan(qs, Rational(c.A), c.D, c.m);
            auto re = recertify_plan(plan, qs);
            ok[i] = all_hold(plan.certification) && all_hold(re) && plan.below_cap;
            touching[i] = !plan.padded_disjoint;
            cell["plan"] = to_json(plan);
            Json rj = Json::array();
            for (const auto& s : re) rj.push_back(to_json(s));
            cell["recertification"] = rj;
        } catch (const std::exception& e) {
            cell["error"] = e.what();
        }
        cell["ok"] = ok[i];
        rows[i] = cell;
    });
    SuiteResult out;
    out.name = "grid";
    const auto good = std::count(ok.begin(), ok.end(), true);
    const auto flagged = std::count(touching.begin(), touching.end(), true);
    out.ok = good == static_cast<std::ptrdiff_t>(cells.size());
    out.summary = std::to_string(good) + "/27 cells: plan certified, recertified independently, b below cap; " +
                  std::to_string(flagged) + " cells with touching padded intervals (flagged)";
    out.details["cells"] = rows;
    return out;
}

SuiteResult lemma_suite(std::uint64_t seed, unsigned workers, std::size_t trials) {
    const PrimeModulus p(101);
    FeketeSeries fs(p);
    IntSequence f = legendre(fs);
    const Rational kappa = make_rational(100, 101);
    std::vector<Json> rows(trials);
    std::vector<bool> ok(trials, false);
    parallel_for(trials, workers, [&](std::size_t t) {
        Rng rng = Rng::for_item(seed, 31, t);
        UniPoly q = random_gaussian_poly(rng, 3, 5, true);
        const int D = std::max(1, q.degree());
        Json row{{"Q", to_json(q)}};
        try {
            // Pairing Q with 1 makes condition (iv) cover C(Q) itself.
            IntervalPlan plan = interval_plan({q, UniPoly::constant(Scalar(1))}, Rational(1), D, 2);
            const std::int64_t a = plan.a.get_si(), b = plan.b.get_si();
            auto l31 = lemma31_check(q, f, a, b, plan.L, kappa, D);
            const std::int64_t n = rng.uniform(0, 100);
            std::int64_t partial = 0, tau = 1;
            for (std::int64_t r = a; r <= b; ++r) {
                partial += f(n + r);
                tau = std::max(tau, std::abs(partial));
            }
            auto l32 = lemma32_check(q, f, n, a, b, Rational(Integer(static_cast<long>(tau))));
            ok[t] = l31.verdict == "holds" && l32.verdict == "holds";
            row["a"] = a;
            row["b"] = b;
            row["L"] = plan.L;
            row["lemma31"] = to_json(l31);
            row["lemma32"] = to_json(l32);
        } catch (const std::exception& e) {
            row["error"] = e.what();
        }
        row["ok"] = ok[t];
        rows[t] = row;
    });
    SuiteResult out;
    out.name = "lemma";
    const auto good = std::count(ok.begin(), ok.end(), true);
    out.ok = good == static_cast<std::ptrdiff_t>(trials);
    out.summary = std::to_string(good) + "/" + std::to_string(trials) + " random Q: both single-polynomial lemmas hold";
    out.details["trials"] = rows;
    return out;
}

SuiteResult chain_suite(std::uint64_t seed, unsigned workers, std::size_t trials) {
    const PrimeModulus p(101);
    const Rational tau(Integer(static_cast<long>(legendre_pair_tau(p, workers))));
    std::vector<Json> rows(trials);
    std::vector<bool> ok(trials, false);
    parallel_for(trials, workers, [&](std::size_t t) {
        Rng rng = Rng::for_item(seed, 33, t);
        std::vector<UniPoly> qs;
        for (int j = 0; j < 3; ++j) qs.push_back(random_gaussian_poly(rng, 2, 5, true));
        Json row{{"Qs", poly_list(qs)}};
        try {
            auto rep = legendre_chain(p, qs, tau);
            ok[t] = rep.lemma33.verdict == "holds" && rep.witness_in_window && rep.search.below_bound;
            row["chain"] = to_json(rep);
        } catch (const std::exception& e) {
            row["error"] = e.what();
        }
        row["ok"] = ok[t];
        rows[t] = row;
    });
    SuiteResult out;
    out.name = "chain";
    const auto good = std::count(ok.begin(), ok.end(), true);
    out.ok = good == static_cast<std::ptrdiff_t>(trials);
    out.summary = std::to_string(good) + "/" + std::to_string(trials) +
                  " chains: combined-window lemma holds and the first witness lies in its window";
    out.details["trials"] = rows;
    return out;
}

}  // namespace holo
