#include <doctest.h>

#include <set>

#include "holo/corpus.hpp"
#include "holo/errors.hpp"
#include "holo/json_io.hpp"
#include "holo/parallel.hpp"
#include "holo/random.hpp"

using namespace holo;

TEST_SUITE("io_random") {
    TEST_CASE("coefficient grids parse") {
        auto h = parse_h_grid("# catalan\n1\n-1\n0, 1\n");
        CHECK(h.deg_y() == 2);
        CHECK(h.coeff(1, 2) == Scalar(1));
        CHECK(parse_h_grid("2 3\n-1").coeff(1, 0) == Scalar(3));
        CHECK_THROWS_AS(parse_h_grid("1,x\n"), parse_error);
        CHECK_THROWS_AS(parse_h_grid(""), parse_error);
        CHECK_THROWS_AS(parse_h_grid("1/2\n1"), parse_error);
    }

    TEST_CASE("rational lists") {
        auto v = parse_rational_list("1, -2/4,3");
        REQUIRE(v.size() == 3);
        CHECK(v[1] == make_rational(-1, 2));
        CHECK_THROWS_AS(parse_rational_list("1,a"), parse_error);
    }

    TEST_CASE("JSON round trips") {
        Scalar z(make_rational(3, 4), make_rational(-1));
        CHECK(scalar_from_json(to_json(z)) == z);
        CHECK(to_json(Scalar(2)).contains("im") == false);
        UniPoly p{Scalar(1), z};
        CHECK(unipoly_from_json(to_json(p)) == p);
        PRecurrence rec;
        rec.coeffs = {UniPoly{Scalar(-2), Scalar(-4)}, UniPoly{Scalar(2), Scalar(1)}};
        CHECK(recurrence_from_json(to_json(rec)).coeffs == rec.coeffs);
        Json wrapped{{"recurrence", to_json(rec)}};
        CHECK(recurrence_from_json(wrapped).coeffs == rec.coeffs);
        CHECK_THROWS_AS(recurrence_from_json(Json::parse("{\"x\": 1}")), parse_error);
    }

    TEST_CASE("random streams are reproducible and distinct") {
        Rng a = Rng::for_item(42, 1, 7), b = Rng::for_item(42, 1, 7), c = Rng::for_item(42, 1, 8);
        const auto x = a.next();
        CHECK(x == b.next());
        CHECK(x != c.next());
        Rng u(5);
        std::set<std::int64_t> seen;
        for (int i = 0; i < 2000; ++i) {
            auto v = u.uniform(-3, 3);
            CHECK(v >= -3);
            CHECK(v <= 3);
            seen.insert(v);
        }
        CHECK(seen.size() == 7);
    }

    TEST_CASE("parallel_for visits each index once") {
        std::vector<int> hits(1000, 0);
        parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
        for (int h : hits) CHECK(h == 1);
    }

    TEST_CASE("random h has the requested shape") {
        Rng rng(1);
        for (int i = 0; i < 5; ++i) {
            auto h = random_irreducible_h(rng);
            CHECK(h.is_real());
            CHECK(h.deg_y() >= 1);
        }
        auto corpus = holonomy_corpus(3, 4);
        CHECK(corpus.size() == named_corpus().size() + 4);
        CHECK(holonomy_corpus(3, 4)[2].h == corpus[2].h);
    }
}
