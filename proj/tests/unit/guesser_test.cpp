#include <doctest.h>

#include "holo/guesser.hpp"
#include "holo/series.hpp"

using namespace holo;

namespace {
SeriesPrefix catalan_prefix(std::size_t n) {
    SeriesPrefix c{make_rational(1)};
    for (std::size_t k = 0; c.size() < n; ++k)
        c.push_back(c.back() * make_rational(static_cast<std::int64_t>(4 * k + 2), static_cast<std::int64_t>(k + 2)));
    return c;
}

void check_vanishes(const BiPoly& h, const SeriesPrefix& prefix) {
    Series g(prefix.begin(), prefix.end());
    for (const auto& c : compose_bipoly(h, g, prefix.size())) CHECK(c.is_zero());
}
}  // namespace

TEST_SUITE("guesser") {
    TEST_CASE("Catalan prefix gives the known quadratic") {
        auto prefix = catalan_prefix(20);
        auto r = min_algebraic_degree(prefix);
        CHECK(r.d == 2);
        const BiPoly& h = r.witness.h;
        check_vanishes(h, prefix);
        // 1 - Y + X Y^2 up to sign and scale
        CHECK(h.total_degree() == 3);
        CHECK(h.coeff(1, 2) == -h.coeff(0, 1));
        CHECK(h.coeff(0, 0) == -h.coeff(0, 1));
    }

    TEST_CASE("rational series are found at degree one") {
        SeriesPrefix geo(15, make_rational(1));
        auto r = min_algebraic_degree(geo);
        CHECK(r.d == 1);
        check_vanishes(r.witness.h, geo);
    }

    TEST_CASE("short prefixes") {
        SeriesPrefix fib{make_rational(0), make_rational(1), make_rational(1)};
        CHECK(min_algebraic_degree(fib).d == 1);
        // more unknowns than equations always leaves a kernel
        auto g = guess_algebraic(catalan_prefix(4), 3);
        REQUIRE(g.has_value());
        check_vanishes(g->h, catalan_prefix(4));
    }

    TEST_CASE("recurrence guessing") {
        auto prefix = catalan_prefix(40);
        auto rec = guess_recurrence(prefix, 1, 1);
        REQUIRE(rec.has_value());
        CHECK(rec->order() == 1);
        CHECK(rec->coeffs[1](Scalar(make_rational(0))) != Scalar());
        CHECK_FALSE(guess_recurrence(prefix, 1, 0).has_value());
        auto constant = guess_recurrence(SeriesPrefix(20, make_rational(5)), 1, 0);
        REQUIRE(constant.has_value());
        CHECK(constant->coeffs[0] == -constant->coeffs[1]);
        auto fek = fekete_coefficients(PrimeModulus(101), 60);
        CHECK_FALSE(guess_recurrence(SeriesPrefix(fek.begin(), fek.end()), 1, 1).has_value());
        CHECK_THROWS_AS(guess_recurrence(catalan_prefix(10), 2, 2), insufficient_data_error);
    }

    TEST_CASE("d_p(N) for small cases") {
        auto r = compute_dpn(PrimeModulus(7), 2);
        CHECK(r.d == 1);
        CHECK(compute_dpn(PrimeModulus(7), 3).d == 1);
        CHECK(compute_dpn(PrimeModulus(7), 4).d == 2);
        CHECK_FALSE(r.outside_regime);
        auto big = compute_dpn(PrimeModulus(5), 6);
        CHECK(big.outside_regime);
        CHECK(compute_dpn(PrimeModulus(11), 10).d >= compute_dpn(PrimeModulus(11), 4).d);
        CHECK_THROWS(compute_dpn(PrimeModulus(7), 1));
    }

    TEST_CASE("counting cap") {
        CHECK(counting_cap(3) == 1);
        CHECK(counting_cap(4) == 2);
        CHECK(counting_cap(99) == 9);
        CHECK(counting_cap(100) == 10);
    }
}
