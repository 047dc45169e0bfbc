#include <doctest.h>

#include "holo/bi_poly.hpp"
#include "holo/corpus.hpp"
#include "holo/holonomy.hpp"
#include "holo/number_theory.hpp"
#include "holo/rat_func.hpp"
#include "holo/random.hpp"
#include "holo/roots.hpp"
#include "holo/series.hpp"

using namespace holo;

namespace {
constexpr std::uint64_t kSeed = 777;
constexpr std::size_t kCases = 40;

Scalar random_scalar(Rng& rng, std::int64_t bound) {
    return Scalar(make_rational(rng.uniform(-bound, bound), rng.uniform(1, 4)),
                  make_rational(rng.uniform(-bound, bound), rng.uniform(1, 4)));
}

UniPoly random_poly(Rng& rng, int max_degree) {
    std::vector<Scalar> c;
    const auto deg = rng.uniform(0, max_degree);
    for (std::int64_t k = 0; k <= deg; ++k) c.push_back(random_scalar(rng, 6));
    UniPoly p(c);
    return p.is_zero() ? UniPoly{Scalar(1)} : p;
}
}  // namespace

TEST_SUITE("property") {
    TEST_CASE("division identity a = q b + r with deg r < deg b") {
        for (std::size_t i = 0; i < kCases; ++i) {
            Rng rng = Rng::for_item(kSeed, 1, i);
            UniPoly a = random_poly(rng, 7), b = random_poly(rng, 4);
            auto dm = divmod(a, b);
            CHECK(dm.quotient * b + dm.remainder == a);
            CHECK(dm.remainder.degree() < b.degree());
        }
    }

    TEST_CASE("gcd divides both arguments and a common factor") {
        for (std::size_t i = 0; i < kCases; ++i) {
            Rng rng = Rng::for_item(kSeed, 2, i);
            UniPoly c = random_poly(rng, 2), a = random_poly(rng, 3) * c, b = random_poly(rng, 3) * c;
            UniPoly g = gcd(a, b);
            CHECK(divmod(a, g).remainder.is_zero());
            CHECK(divmod(b, g).remainder.is_zero());
            CHECK(divmod(g, make_monic(c)).remainder.is_zero());
        }
    }

    TEST_CASE("Taylor shift commutes with evaluation") {
        for (std::size_t i = 0; i < kCases; ++i) {
            Rng rng = Rng::for_item(kSeed, 3, i);
            UniPoly p = random_poly(rng, 6);
            Scalar s = random_scalar(rng, 3), x = random_scalar(rng, 3);
            CHECK(p.taylor_shift(s)(x) == p(x + s));
        }
    }

    TEST_CASE("rational functions form a field") {
        for (std::size_t i = 0; i < kCases; ++i) {
            Rng rng = Rng::for_item(kSeed, 4, i);
            RatFunc a(random_poly(rng, 3), random_poly(rng, 3)), b(random_poly(rng, 3), random_poly(rng, 3)),
                c(random_poly(rng, 2), random_poly(rng, 2));
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a - b) + b == a);
            if (!a.is_zero()) CHECK(a / a == RatFunc(UniPoly{Scalar(1)}));
        }
    }

    TEST_CASE("series inverse") {
        for (std::size_t i = 0; i < kCases; ++i) {
            Rng rng = Rng::for_item(kSeed, 5, i);
            UniPoly p = random_poly(rng, 5);
            Series s(p.coeffs().begin(), p.coeffs().end());
            if (s[0].is_zero()) s[0] = Scalar(1);
            auto prod = series_mul(s, series_inverse(s, 15), 15);
            CHECK(prod[0] == Scalar(1));
            for (std::size_t k = 1; k < 15; ++k) CHECK(prod[k].is_zero());
        }
    }

    TEST_CASE("Legendre symbol is completely multiplicative") {
        const std::int64_t primes[] = {3, 5, 7, 11, 13, 101, 103, 499, 997, 7919};
        for (std::size_t i = 0; i < kCases; ++i) {
            Rng rng = Rng::for_item(kSeed, 6, i);
            const PrimeModulus p(primes[rng.uniform(0, 9)]);
            const auto a = rng.uniform(-100000, 100000), b = rng.uniform(-100000, 100000);
            CHECK(legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p));
        }
    }

    TEST_CASE("every root enclosure contains a root") {
        for (std::size_t i = 0; i < 15; ++i) {
            Rng rng = Rng::for_item(kSeed, 7, i);
            UniPoly p = random_poly(rng, 5);
            if (p.degree() < 1) continue;
            int total = 0;
            for (const auto& e : root_enclosures(p)) {
                total += e.multiplicity;
                CHECK_FALSE(disc_root_free(p, e.center_exact, e.radius_bound));
            }
            CHECK(total == p.degree());
        }
    }

    TEST_CASE("dG/dX computed modulo h matches the series" * doctest::timeout(300)) {
        for (std::size_t i = 0; i < 2; ++i) {
            Rng rng = Rng::for_item(kSeed, 8, i);
            BiPoly h = random_irreducible_h(rng);
            auto inv = ext_gcd_mod_h(h.derivative_y(), h);
            auto prod = pseudo_remainder(h.derivative_y() * inv.numerator, h);
            // h_Y * inverse == denominator * lc^power modulo h
            CHECK(prod.remainder.deg_y() == 0);
        }
    }

    TEST_CASE("recurrence terms agree with the algebraic series" * doctest::timeout(300)) {
        for (const auto& e : holonomy_corpus(kSeed, 2)) {
            auto rec = ode_to_recurrence(algebraic_to_ode(e.h));
            const std::size_t n = rec.coeffs.size() + 20;
            auto g = series_root(e.h, {e.a0}, n);
            Series prefix(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(rec.order()));
            try {
                auto terms = extend(rec, prefix, n);
                for (std::size_t k = 0; k < n; ++k) CHECK(terms[k] == g[k]);
            } catch (const singular_index_error& err) {
                // restart past the singular index with a longer prefix
                const auto start = static_cast<std::size_t>(err.index()) + rec.coeffs.size() + 1;
                Series longer(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(std::min(start, n)));
                auto terms = extend(rec, longer, n);
                for (std::size_t k = 0; k < n; ++k) CHECK(terms[k] == g[k]);
            }
        }
    }
}
