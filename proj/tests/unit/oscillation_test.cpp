#include <doctest.h>

#include "holo/corpus.hpp"
#include "holo/number_theory.hpp"
#include "holo/oscillation.hpp"
#include "holo/random.hpp"
#include "holo/suites.hpp"

using namespace holo;

namespace {
Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar(make_rational(n, d)); }

IntSequence legendre(const FeketeSeries& fs) {
    return [&fs](std::int64_t n) { return static_cast<std::int64_t>(fs(n)); };
}
}  // namespace

TEST_SUITE("oscillation") {
    TEST_CASE("critical set of a real quadratic") {
        // Q = X^2 + 1: |Q|^2 = (X^2+1)^2 on the real line, critical point 0
        auto cs = critical_set(UniPoly{q(1), q(0), q(1)});
        CHECK_FALSE(cs.members.empty());
        bool has_zero = false;
        for (const auto& e : cs.real_candidates)
            if (e.real_lo() <= 0 && e.real_hi() >= 0) has_zero = true;
        CHECK(has_zero);
    }

    TEST_CASE("interval plan certifies and recertifies") {
        Rng rng = Rng::for_item(5, 8, 0);
        std::vector<UniPoly> qs{random_gaussian_poly(rng, 2, 5, true), random_gaussian_poly(rng, 2, 5, true)};
        auto plan = interval_plan(qs, make_rational(10), 2, 2);
        CHECK(all_hold(plan.certification));
        CHECK(all_hold(recertify_plan(plan, qs)));
        CHECK(plan.a < plan.b);
        CHECK(plan.below_cap);
        CHECK(plan.chosen_index >= 1);
        CHECK(plan.chosen_index <= plan.r_sequence.size());
    }

    // Padded intervals [D^2 L R_i - D R_i, D^2 L R_i + D R_i + R_i] must be
    // pairwise disjoint across the whole parameter grid.
    TEST_CASE("padded intervals are pairwise disjoint on the parameter grid") {
        std::size_t index = 0;
        for (int A : {1, 10, 100})
            for (int D : {1, 2, 3})
                for (int m : {1, 2, 3}) {
                    Rng rng = Rng::for_item(20240601, 8, index++);
                    std::vector<UniPoly> qs;
                    for (int j = 0; j < m; ++j) qs.push_back(random_gaussian_poly(rng, D, 5, true));
                    auto plan = interval_plan(qs, make_rational(A), D, m);
                    INFO("A=" << A << " D=" << D << " m=" << m << " min gap " << plan.padded_min_gap.get_str());
                    CHECK(plan.padded_disjoint);
                }
    }

    TEST_CASE("constant sequence has a witness at the origin") {
        IntSequence one = [](std::int64_t) { return std::int64_t{1}; };
        auto r = delta_search(one, {UniPoly{q(1)}}, make_rational(1), make_rational(1));
        CHECK(r.witness_found);
        CHECK(r.n == 0);
        CHECK(r.below_bound);
    }

    TEST_CASE("Legendre witnesses lie below the bound") {
        const PrimeModulus p(101);
        FeketeSeries fs(p);
        Rng rng = Rng::for_item(11, 7, 0);
        std::vector<UniPoly> qs;
        for (int j = 0; j < 3; ++j) qs.push_back(random_gaussian_poly(rng, 2, 5, true));
        auto r = delta_search(legendre(fs), qs, make_rational(100, 101), make_rational(17));
        CHECK(r.witness_found);
        CHECK(r.below_bound);
    }

    TEST_CASE("single-polynomial lemmas on a Legendre sequence") {
        const PrimeModulus p(101);
        FeketeSeries fs(p);
        const UniPoly qpoly{q(3), q(-1), q(2)};
        auto r32 = lemma32_check(qpoly, legendre(fs), 7, 0, 30, make_rational(40));
        CHECK(r32.verdict != "conclusion_failure");
        auto r31 = lemma31_check(qpoly, legendre(fs), 1, 60, 2, make_rational(100, 101), 2);
        CHECK(r31.verdict != "conclusion_failure");
    }

    TEST_CASE("window pair maximum") {
        IntSequence alt = [](std::int64_t n) { return n % 2 == 0 ? std::int64_t{1} : std::int64_t{-1}; };
        // f(n)f(n+1) = -1 everywhere, so the pair sum over a window of length k is -k
        CHECK(window_pair_max(alt, 2, 0, 9) >= 9);
    }

    TEST_CASE("Legendre chain for a small prime" * doctest::timeout(120)) {
        const PrimeModulus p(101);
        Rng rng = Rng::for_item(3, 33, 0);
        std::vector<UniPoly> qs{random_gaussian_poly(rng, 1, 3, true), random_gaussian_poly(rng, 1, 3, true)};
        auto r = legendre_chain(p, qs, make_rational(legendre_pair_tau(p, 1)));
        CHECK(r.kappa == make_rational(100, 101));
        CHECK(r.tau_window >= r.tau_scan);
        CHECK(r.search.witness_found);
        CHECK(r.witness_in_window);
        CHECK(r.lemma33.verdict == "holds");
    }
}
