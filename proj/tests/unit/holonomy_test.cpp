#include <doctest.h>

#include "holo/corpus.hpp"
#include "holo/holonomy.hpp"
#include "holo/random.hpp"

using namespace holo;

namespace {
Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar(make_rational(n, d)); }

const CorpusEntry& entry(const std::string& name) {
    static const auto corpus = named_corpus();
    for (const auto& e : corpus)
        if (e.name == name) return e;
    throw std::runtime_error("missing corpus entry " + name);
}

// Equal up to a common polynomial factor: P_i E_j == P_j E_i for all i, j.
void check_equivalent(const PRecurrence& rec, const std::vector<UniPoly>& expected) {
    REQUIRE(rec.coeffs.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        for (std::size_t j = i + 1; j < expected.size(); ++j)
            CHECK(rec.coeffs[i] * expected[j] == rec.coeffs[j] * expected[i]);
}

}  // namespace

TEST_SUITE("holonomy") {
    TEST_CASE("geometric series 1/(1-X)") {
        const auto& e = entry("geometric");
        auto ode = algebraic_to_ode(e.h);
        CHECK(ode.order() == 1);
        auto g = series_root(e.h, {e.a0}, 20);
        for (const auto& c : g) CHECK(c == q(1));
        auto rec = ode_to_recurrence(ode);
        CHECK(rec.order() == 1);
        // the (n+1) factor survives normalization
        CHECK(rec.coeffs[0] == UniPoly{q(-1), q(-1)});
        CHECK(rec.coeffs[1] == UniPoly{q(1), q(1)});
        CHECK(verify_annihilates(rec, g));
    }

    TEST_CASE("Catalan numbers") {
        const auto& e = entry("catalan");
        auto ode = algebraic_to_ode(e.h);
        auto rec = ode_to_recurrence(ode);
        check_equivalent(rec, {UniPoly{q(-2), q(-4)}, UniPoly{q(2), q(1)}});
        auto terms = extend(rec, {q(1)}, 12);
        const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
        for (std::size_t n = 0; n < 12; ++n) CHECK(terms[n] == q(catalan[n]));
        auto g = series_root(e.h, {e.a0}, 40);
        for (const auto& c : apply_ode(ode, g)) CHECK(c.is_zero());
    }

    TEST_CASE("central binomial coefficients") {
        const auto& e = entry("central_binomial");
        auto rec = ode_to_recurrence(algebraic_to_ode(e.h));
        check_equivalent(rec, {UniPoly{q(-2), q(-4)}, UniPoly{q(1), q(1)}});
        auto terms = extend(rec, {q(1)}, 8);
        const std::int64_t binom[] = {1, 2, 6, 20, 70, 252, 924, 3432};
        for (std::size_t n = 0; n < 8; ++n) CHECK(terms[n] == q(binom[n]));
    }

    TEST_CASE("degree bounds hold on the named corpus") {
        for (const auto& e : named_corpus()) {
            auto ode = algebraic_to_ode(e.h);
            auto rec = ode_to_recurrence(ode);
            for (const auto& b : check_bounds(e.h, ode, rec)) {
                INFO(e.name << ": " << b.quantity);
                CHECK(b.satisfied);
            }
        }
    }

    TEST_CASE("non-squarefree h is rejected") {
        BiPoly h = BiPoly::from_grid({{q(1)}, {q(-2)}, {q(1)}});
        CHECK_THROWS_AS(algebraic_to_ode(h), precondition_error);
    }

    TEST_CASE("extension stops at a vanishing leading coefficient") {
        PRecurrence rec;
        rec.coeffs = {UniPoly{q(-3), q(1)}, UniPoly{q(0), q(1)}};
        try {
            extend(rec, {q(1)}, 5);
            FAIL("expected singular_index_error");
        } catch (const singular_index_error& e) {
            CHECK(e.index() == 0);
        }
    }

    TEST_CASE("rational roots of integer polynomials") {
        UniPoly p = UniPoly{q(-1, 2), q(1)} * UniPoly{q(3), q(1)} * UniPoly{q(1), q(0), q(1)};
        auto r = rational_roots(p);
        REQUIRE(r.size() == 2);
        CHECK(r[0] == make_rational(-3));
        CHECK(r[1] == make_rational(1, 2));
    }

    TEST_CASE("a random irreducible h round-trips" * doctest::timeout(120)) {
        Rng rng = Rng::for_item(99, 3, 0);
        BiPoly h = random_irreducible_h(rng);
        CHECK(h.deg_x() <= 3);
        CHECK(h.deg_y() <= 3);
        auto ode = algebraic_to_ode(h);
        auto rec = ode_to_recurrence(ode);
        for (const auto& b : check_bounds(h, ode, rec)) {
            INFO(b.quantity << " " << b.measured << " <= " << b.bound);
            CHECK(b.satisfied);
        }
    }
}
